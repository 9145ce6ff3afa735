// Integer polynomials in z with nonnegative coefficients, and the
// support/gap analysis used by the interpolation theorems.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twupoly/errors.hpp"

namespace twupoly {

class IntPolynomial {
public:
    IntPolynomial() = default;  // the zero polynomial
    explicit IntPolynomial(std::vector<std::uint64_t> coefficients);

    static IntPolynomial constant(std::uint64_t c);
    static IntPolynomial monomial(std::uint64_t c, int exponent);

    bool is_zero() const { return c_.empty(); }
    /// Largest/smallest exponent with nonzero coefficient; throws
    /// ZeroPolynomialError on the zero polynomial.
    int degree() const;
    int min_degree() const;

    std::uint64_t coefficient(int exponent) const;
    const std::vector<std::uint64_t>& coefficients() const { return c_; }
    std::uint64_t coefficient_sum() const;

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial& other) const { return c_ == other.c_; }

    /// Text form: terms ascending by exponent, `c`, `c*z`, `c*z^k`,
    /// joined with ` + `; the zero polynomial prints `0`.
    std::string to_text() const;

private:
    void trim();
    std::vector<std::uint64_t> c_;  // index = exponent, trailing zeros trimmed
};

struct GapRun {
    int start;  // first missing exponent
    int size;   // number of consecutive missing exponents

    bool operator==(const GapRun& other) const {
        return start == other.start && size == other.size;
    }
};

/// Support/gap/interpolation facts about a nonzero polynomial.  The
/// log-concavity and unimodality flags are informational only; nothing
/// in the library asserts them.
struct GapReport {
    std::vector<int> support;
    int min_deg = 0;
    int deg = 0;
    std::vector<GapRun> gaps;
    bool is_interpolating = false;
    bool is_even_polynomial = false;
    bool is_odd_polynomial = false;
    bool is_even_interpolating = false;
    bool is_odd_interpolating = false;
    bool is_log_concave = false;
    bool is_unimodal = false;

    bool has_gap_of_size_at_least(int k) const;
};

/// Throws ZeroPolynomialError on the zero polynomial.
GapReport gap_report(const IntPolynomial& p);

}  // namespace twupoly
