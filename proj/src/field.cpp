#include "twupoly/field.hpp"

#include <cstdlib>

namespace twupoly {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::gfp(std::uint32_t p) {
    if (p >= (1u << 31)) throw ContractError("gfp modulus must be < 2^31");
    if (!is_prime_u32(p)) {
        throw ContractError("gfp modulus " + std::to_string(p) + " is not prime");
    }
    return Field(FieldKind::gfp, p);
}

namespace {

std::uint64_t u(const Scalar& s) { return std::get<std::uint64_t>(s); }
const Rational& q(const Scalar& s) { return std::get<Rational>(s); }

// Extended Euclid: multiplicative inverse of a mod p, 0 < a < p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Field::zero() const {
    if (kind_ == FieldKind::rational) return Scalar(Rational(0));
    return Scalar(std::uint64_t{0});
}

Scalar Field::one() const {
    if (kind_ == FieldKind::rational) return Scalar(Rational(1));
    return Scalar(std::uint64_t{1});
}

Scalar Field::from_int(long long v) const {
    if (kind_ == FieldKind::rational) return Scalar(Rational(static_cast<long>(v)));
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    if (r < 0) r += m;
    return Scalar(static_cast<std::uint64_t>(r));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rational) return Scalar(Rational(q(a) + q(b)));
    return Scalar((u(a) + u(b)) % p_);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rational) return Scalar(Rational(q(a) - q(b)));
    return Scalar((u(a) + p_ - u(b)) % p_);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rational) return Scalar(Rational(q(a) * q(b)));
    return Scalar((u(a) * u(b)) % p_);  // p < 2^31, so the product fits
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::rational) return Scalar(Rational(-q(a)));
    return Scalar((p_ - u(a)) % p_);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw ContractError("division by zero field element");
    if (kind_ == FieldKind::rational) return Scalar(Rational(1 / q(a)));
    if (kind_ == FieldKind::gf2) return a;
    return Scalar(mod_inverse(u(a), p_));
}

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == FieldKind::rational) return sgn(q(a)) == 0;
    return u(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (kind_ == FieldKind::rational) return q(a) == 1;
    return u(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rational) return q(a) == q(b);
    return u(a) == u(b);
}

Scalar Field::parse(const std::string& token) const {
    if (token.empty()) throw std::invalid_argument("empty entry");
    if (kind_ == FieldKind::rational) {
        Rational r;
        if (r.set_str(token, 10) != 0) {
            throw std::invalid_argument("bad rational '" + token + "'");
        }
        if (sgn(r.get_den()) == 0) {
            throw std::invalid_argument("zero denominator in '" + token + "'");
        }
        r.canonicalize();
        return Scalar(r);
    }
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(token, &pos, 10);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + token + "'");
    }
    if (pos != token.size()) throw std::invalid_argument("bad integer '" + token + "'");
    if (kind_ == FieldKind::gf2 && v != 0 && v != 1) {
        throw std::invalid_argument("gf2 entry must be 0 or 1, got '" + token + "'");
    }
    return from_int(v);
}

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == FieldKind::rational) {
        const Rational& r = q(a);
        if (r.get_den() == 1) return r.get_num().get_str();
        return r.get_num().get_str() + "/" + r.get_den().get_str();
    }
    return std::to_string(u(a));
}

std::string Field::tag() const {
    switch (kind_) {
        case FieldKind::gf2: return "gf2";
        case FieldKind::gfp: return "gfp " + std::to_string(p_);
        case FieldKind::rational: return "q";
    }
    return "?";
}

}  // namespace twupoly
