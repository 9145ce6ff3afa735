// Coefficient fields: GF(2), GF(p) for prime p < 2^31, and the rationals.
//
// Scalars are a tagged value type; all arithmetic goes through the owning
// Field so a GF(p) scalar knows nothing about its modulus on its own.
// Rational arithmetic is exact (GMP), always in lowest terms with positive
// denominator.
#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "twupoly/errors.hpp"

namespace twupoly {

using Rational = mpq_class;

enum class FieldKind { gf2, gfp, rational };

/// A field element.  gf2/gfp elements live in the integer alternative as
/// canonical representatives (0/1, resp. [0, p)); rationals carry an
/// exact GMP value.
using Scalar = std::variant<std::uint64_t, Rational>;

class Field {
public:
    static Field gf2() { return Field(FieldKind::gf2, 2); }
    static Field gfp(std::uint32_t p);
    static Field rationals() { return Field(FieldKind::rational, 0); }

    FieldKind kind() const { return kind_; }

    /// The modulus; valid for gf2 (2) and gfp only.
    std::uint32_t modulus() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws ContractError on zero

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    /// Parses one entry token ("1", "-3", "2/5", ...).  Throws
    /// std::invalid_argument with a bare message; io.cpp wraps it with
    /// line/column context.
    Scalar parse(const std::string& token) const;
    std::string to_string(const Scalar& a) const;

    /// Tag as it appears after "field " in the matrix text format:
    /// "gf2", "gfp <p>", or "q".
    std::string tag() const;

    bool operator==(const Field& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }

private:
    Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace twupoly
