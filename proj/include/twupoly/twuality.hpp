// The five partial-twuality exponent functions and polynomials of a
// square matrix, the interlace polynomial as a corank distribution, and
// the verification predicates for the product, pivot and inversion laws.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "twupoly/matrix.hpp"
#include "twupoly/polynomial.hpp"

namespace twupoly {

enum class Twuality { delta, tau, deltatau, taudelta, taudeltatau };

inline constexpr std::array<Twuality, 5> kAllTwualities = {
    Twuality::delta, Twuality::tau, Twuality::deltatau, Twuality::taudelta,
    Twuality::taudeltatau};

std::string_view twuality_name(Twuality op);
std::optional<Twuality> twuality_from_name(std::string_view name);

struct SweepOptions {
    int max_n = 24;   // subset enumerations refuse larger index sets
    int threads = 1;  // workers for the 2^n sweep; merge order is fixed
};

/// r_<op>(M, A) per the five rank/corank formulas.  The value is
/// guaranteed nonnegative; a negative result raises
/// InternalInvariantError since it can only mean broken arithmetic.
long long exponent(Twuality op, const SquareMatrix& m, const IndexSubset& a);

/// P_<op>(M, z) = sum over all A of z^r_<op>(M, A).  The 0 x 0 matrix
/// yields the constant polynomial 1.
IntPolynomial polynomial(Twuality op, const SquareMatrix& m, const SweepOptions& opts = {});

/// All five polynomials from a single subset sweep.
std::map<Twuality, IntPolynomial> all_polynomials(const SquareMatrix& m,
                                                  const SweepOptions& opts = {});

/// The interlace polynomial q(M, x) = sum (x-1)^corank(M[A]), stored as
/// the distribution of corank values over subsets.
struct CorankDistribution {
    std::map<int, std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [c, k] : counts) t += k;
        return t;
    }
};

CorankDistribution interlace_polynomial(const SquareMatrix& m, const SweepOptions& opts = {});

/// P_<taudeltatau>(M, z) = z^rank(M) q(M+I, 1+1/z), checked through the
/// corank distribution of M+I so everything stays in nonnegative
/// integers.
bool check_tdt_interlace_identity(const SquareMatrix& m, const SweepOptions& opts = {});

/// First A in ascending bitmask order with M + I_A non-singular.  Always
/// exists; exhausting the search raises InternalInvariantError.
IndexSubset find_nonsingular_diagonal(const SquareMatrix& m);

/// P_<op>(M) == P_<op>(M[V1]) P_<op>(M[V2]) for all five operators.
/// Requires M block-diagonal w.r.t. the partition V1 | V2.
bool verify_product_formula(const SquareMatrix& m, const IndexSubset& v1, const IndexSubset& v2,
                            const SweepOptions& opts = {});

/// P_<delta>(M) == P_<delta>(M * X).
bool verify_pivot_invariance(const SquareMatrix& m, const IndexSubset& x,
                             const SweepOptions& opts = {});

/// P_<taudeltatau>(M) == P_<tau>(M^-1) and P_<deltatau>(M) == P_<taudelta>(M^-1).
bool verify_inverse_duality(const SquareMatrix& m, const SweepOptions& opts = {});

}  // namespace twupoly
