#include "twupoly/polynomial.hpp"

namespace twupoly {

IntPolynomial::IntPolynomial(std::vector<std::uint64_t> coefficients) : c_(std::move(coefficients)) {
    trim();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(std::uint64_t c) {
    return IntPolynomial(std::vector<std::uint64_t>{c});
}

IntPolynomial IntPolynomial::monomial(std::uint64_t c, int exponent) {
    if (c == 0) return IntPolynomial();
    std::vector<std::uint64_t> v(exponent + 1, 0);
    v[exponent] = c;
    return IntPolynomial(std::move(v));
}

int IntPolynomial::degree() const {
    if (is_zero()) throw ZeroPolynomialError("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

int IntPolynomial::min_degree() const {
    if (is_zero()) throw ZeroPolynomialError("min degree of the zero polynomial");
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) return static_cast<int>(i);
    }
    return 0;  // unreachable
}

std::uint64_t IntPolynomial::coefficient(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return 0;
    return c_[exponent];
}

std::uint64_t IntPolynomial::coefficient_sum() const {
    std::uint64_t s = 0;
    for (std::uint64_t c : c_) s += c;
    return s;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<std::uint64_t> out(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] += other.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return IntPolynomial();
    std::vector<std::uint64_t> out(c_.size() + other.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            out[i + j] += c_[i] * other.c_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(c_[k]);
        if (k == 1) {
            out += "*z";
        } else if (k >= 2) {
            out += "*z^" + std::to_string(k);
        }
    }
    return out;
}

bool GapReport::has_gap_of_size_at_least(int k) const {
    for (const GapRun& g : gaps) {
        if (g.size >= k) return true;
    }
    return false;
}

namespace {

// Interpolation check for an already-extracted coefficient slice:
// nonzero and support contiguous.
bool slice_interpolating(const std::vector<std::uint64_t>& c) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] != 0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    if (lo < 0) return false;
    for (int i = lo; i <= hi; ++i) {
        if (c[i] == 0) return false;
    }
    return true;
}

}  // namespace

GapReport gap_report(const IntPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("gap report of the zero polynomial");

    GapReport rep;
    rep.min_deg = p.min_degree();
    rep.deg = p.degree();
    for (int i = rep.min_deg; i <= rep.deg; ++i) {
        if (p.coefficient(i) != 0) rep.support.push_back(i);
    }

    // Maximal zero runs strictly inside [min_deg, deg].
    int i = rep.min_deg;
    while (i <= rep.deg) {
        if (p.coefficient(i) == 0) {
            int start = i;
            while (i <= rep.deg && p.coefficient(i) == 0) ++i;
            rep.gaps.push_back(GapRun{start, i - start});
        } else {
            ++i;
        }
    }
    rep.is_interpolating = rep.gaps.empty();

    std::vector<std::uint64_t> even, odd;
    for (int k = rep.min_deg; k <= rep.deg; ++k) {
        std::uint64_t c = p.coefficient(k);
        if (k % 2 == 0) {
            even.resize(k / 2 + 1, 0);
            even[k / 2] = c;
        } else {
            odd.resize(k / 2 + 1, 0);
            odd[k / 2] = c;
        }
    }
    auto all_zero = [](const std::vector<std::uint64_t>& v) {
        for (std::uint64_t c : v) {
            if (c != 0) return false;
        }
        return true;
    };
    rep.is_even_polynomial = all_zero(odd);
    rep.is_odd_polynomial = all_zero(even);
    rep.is_even_interpolating = slice_interpolating(even);
    rep.is_odd_interpolating = slice_interpolating(odd);

    // Informational flags; log-concavity here requires contiguous
    // support.
    rep.is_log_concave = rep.is_interpolating;
    if (rep.is_log_concave) {
        for (int k = rep.min_deg + 1; k < rep.deg; ++k) {
            unsigned __int128 mid =
                static_cast<unsigned __int128>(p.coefficient(k)) * p.coefficient(k);
            unsigned __int128 sides =
                static_cast<unsigned __int128>(p.coefficient(k - 1)) * p.coefficient(k + 1);
            if (mid < sides) {
                rep.is_log_concave = false;
                break;
            }
        }
    }
    rep.is_unimodal = true;
    {
        int k = rep.min_deg;
        while (k < rep.deg && p.coefficient(k) <= p.coefficient(k + 1)) ++k;
        while (k < rep.deg && p.coefficient(k) >= p.coefficient(k + 1)) ++k;
        if (k != rep.deg) rep.is_unimodal = false;
    }
    return rep;
}

}  // namespace twupoly
