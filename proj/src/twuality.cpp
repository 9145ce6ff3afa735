#include "twupoly/twuality.hpp"

#include <algorithm>
#include <mutex>
#include <span>
#include <thread>

#include "twupoly/gf2kernel.hpp"

namespace twupoly {

std::string_view twuality_name(Twuality op) {
    switch (op) {
        case Twuality::delta: return "delta";
        case Twuality::tau: return "tau";
        case Twuality::deltatau: return "deltatau";
        case Twuality::taudelta: return "taudelta";
        case Twuality::taudeltatau: return "taudeltatau";
    }
    return "?";
}

std::optional<Twuality> twuality_from_name(std::string_view name) {
    for (Twuality op : kAllTwualities) {
        if (twuality_name(op) == name) return op;
    }
    return std::nullopt;
}

namespace {

constexpr int kHardSweepLimit = 62;  // uint64 masks and coefficients <= 2^n

struct RankNeeds {
    bool sub = false;          // rank(M[A])
    bool sub_comp = false;     // rank(M[A^c])
    bool shifted = false;      // rank(M + I_A)
    bool shifted_sub = false;  // rank((M + I_A)[A])
};

RankNeeds needs_for(std::span<const Twuality> ops) {
    RankNeeds n;
    for (Twuality op : ops) {
        switch (op) {
            case Twuality::delta: n.sub = n.sub_comp = true; break;
            case Twuality::tau: n.shifted = true; break;
            case Twuality::deltatau: n.shifted_sub = n.sub_comp = true; break;
            case Twuality::taudelta: n.shifted = n.sub = true; break;
            case Twuality::taudeltatau: n.shifted_sub = true; break;
        }
    }
    return n;
}

long long exponent_from_ranks(Twuality op, int ra, int rac, int rtau, int rma, int rank_m,
                              int asize) {
    switch (op) {
        case Twuality::delta: return static_cast<long long>(ra) + rac;
        case Twuality::tau: return rtau;
        case Twuality::deltatau: return static_cast<long long>(rma) + rac;
        case Twuality::taudelta: return static_cast<long long>(rtau) - (asize - ra);
        case Twuality::taudeltatau: return static_cast<long long>(rank_m) - (asize - rma);
    }
    return -1;
}

using Counts = std::array<std::vector<std::uint64_t>, 5>;

void record(Counts& counts, std::span<const Twuality> ops, int n, int ra, int rac, int rtau,
            int rma, int rank_m, int asize) {
    for (Twuality op : ops) {
        long long e = exponent_from_ranks(op, ra, rac, rtau, rma, rank_m, asize);
        if (e < 0 || e > n) {
            throw InternalInvariantError("exponent out of [0, n] for operator " +
                                         std::string(twuality_name(op)));
        }
        ++counts[static_cast<int>(op)][static_cast<std::size_t>(e)];
    }
}

void sweep_range_gf2(const std::vector<std::uint64_t>& rows, int n, int rank_m,
                     std::span<const Twuality> ops, std::uint64_t lo, std::uint64_t hi,
                     Counts& counts) {
    RankNeeds need = needs_for(ops);
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    const std::uint64_t* r = rows.data();
    for (std::uint64_t amask = lo; amask < hi; ++amask) {
        int asize = __builtin_popcountll(amask);
        int ra = need.sub ? gf2::rank_principal(r, amask) : 0;
        int rac = need.sub_comp ? gf2::rank_principal(r, full & ~amask) : 0;
        int rtau = need.shifted ? gf2::rank_shifted(r, n, amask) : 0;
        int rma = need.shifted_sub ? gf2::rank_shifted_principal(r, amask) : 0;
        record(counts, ops, n, ra, rac, rtau, rma, rank_m, asize);
    }
}

// Ranks for the generic (GF(p) / rational) path; one buffer per call
// site keeps allocations off the per-subset path where possible.
int rank_principal_generic(const SquareMatrix& m, std::uint64_t amask) {
    int n = m.size();
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        if ((amask >> i) & 1u) keep.push_back(i);
    }
    int k = static_cast<int>(keep.size());
    std::vector<Scalar> buf;
    buf.reserve(static_cast<std::size_t>(k) * k);
    for (int i : keep) {
        for (int j : keep) buf.push_back(m.at(i, j));
    }
    return rank_dense(m.field(), std::move(buf), k);
}

int rank_shifted_generic(const SquareMatrix& m, std::uint64_t amask) {
    int n = m.size();
    std::vector<Scalar> buf;
    buf.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) buf.push_back(m.at(i, j));
    }
    const Field& f = m.field();
    for (int i = 0; i < n; ++i) {
        if ((amask >> i) & 1u) {
            Scalar& d = buf[static_cast<std::size_t>(i) * n + i];
            d = f.add(d, f.one());
        }
    }
    return rank_dense(f, std::move(buf), n);
}

int rank_shifted_principal_generic(const SquareMatrix& m, std::uint64_t amask) {
    int n = m.size();
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        if ((amask >> i) & 1u) keep.push_back(i);
    }
    int k = static_cast<int>(keep.size());
    const Field& f = m.field();
    std::vector<Scalar> buf;
    buf.reserve(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            Scalar v = m.at(keep[a], keep[b]);
            if (a == b) v = f.add(v, f.one());
            buf.push_back(std::move(v));
        }
    }
    return rank_dense(f, std::move(buf), k);
}

void sweep_range_generic(const SquareMatrix& m, int rank_m, std::span<const Twuality> ops,
                         std::uint64_t lo, std::uint64_t hi, Counts& counts) {
    RankNeeds need = needs_for(ops);
    int n = m.size();
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t amask = lo; amask < hi; ++amask) {
        int asize = __builtin_popcountll(amask);
        int ra = need.sub ? rank_principal_generic(m, amask) : 0;
        int rac = need.sub_comp ? rank_principal_generic(m, full & ~amask) : 0;
        int rtau = need.shifted ? rank_shifted_generic(m, amask) : 0;
        int rma = need.shifted_sub ? rank_shifted_principal_generic(m, amask) : 0;
        record(counts, ops, n, ra, rac, rtau, rma, rank_m, asize);
    }
}

void check_sweep_size(const SquareMatrix& m, const SweepOptions& opts) {
    int n = m.size();
    if (n > opts.max_n) {
        throw SizeCapError("index set of size " + std::to_string(n) +
                           " exceeds the configured cap of " + std::to_string(opts.max_n));
    }
    if (n > kHardSweepLimit) {
        throw SizeCapError("index set of size " + std::to_string(n) +
                           " exceeds the hard enumeration limit of " +
                           std::to_string(kHardSweepLimit));
    }
}

Counts subset_sweep(const SquareMatrix& m, std::span<const Twuality> ops,
                    const SweepOptions& opts) {
    int n = m.size();
    int rank_m = m.rank();
    Counts counts;
    for (Twuality op : ops) {
        counts[static_cast<int>(op)].assign(static_cast<std::size_t>(n) + 1, 0);
    }
    std::uint64_t total = std::uint64_t{1} << n;

    bool gf2_path = m.field().kind() == FieldKind::gf2;
    std::vector<std::uint64_t> rows;
    if (gf2_path) rows = m.packed_rows();

    int workers = opts.threads;
    if (workers < 1) workers = 1;
    if (total < 1024 || workers == 1) {
        if (gf2_path) {
            sweep_range_gf2(rows, n, rank_m, ops, 0, total, counts);
        } else {
            sweep_range_generic(m, rank_m, ops, 0, total, counts);
        }
        return counts;
    }

    // Contiguous chunks, one per worker; each accumulates privately and
    // the results merge by element-wise addition.
    std::vector<Counts> partial(workers);
    for (auto& pc : partial) {
        for (Twuality op : ops) {
            pc[static_cast<int>(op)].assign(static_cast<std::size_t>(n) + 1, 0);
        }
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        std::uint64_t len = total / workers + (static_cast<std::uint64_t>(w) < total % workers);
        pool.emplace_back([&, w, lo, len] {
            try {
                if (gf2_path) {
                    sweep_range_gf2(rows, n, rank_m, ops, lo, lo + len, partial[w]);
                } else {
                    sweep_range_generic(m, rank_m, ops, lo, lo + len, partial[w]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    for (const Counts& pc : partial) {
        for (Twuality op : ops) {
            auto& dst = counts[static_cast<int>(op)];
            const auto& src = pc[static_cast<int>(op)];
            for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
        }
    }
    return counts;
}

}  // namespace

long long exponent(Twuality op, const SquareMatrix& m, const IndexSubset& a) {
    m.check_universe(a);
    int asize = a.size();
    int ra = 0, rac = 0, rtau = 0, rma = 0, rank_m = 0;
    RankNeeds need = needs_for(std::span<const Twuality>(&op, 1));
    if (need.sub) ra = m.principal_submatrix(a).rank();
    if (need.sub_comp) rac = m.principal_submatrix(a.complement()).rank();
    if (need.shifted) rtau = m.add_diagonal_indicator(a).rank();
    if (need.shifted_sub) rma = m.add_diagonal_indicator(a).principal_submatrix(a).rank();
    if (op == Twuality::taudeltatau) rank_m = m.rank();
    long long e = exponent_from_ranks(op, ra, rac, rtau, rma, rank_m, asize);
    if (e < 0) {
        throw InternalInvariantError("negative exponent for operator " +
                                     std::string(twuality_name(op)));
    }
    return e;
}

IntPolynomial polynomial(Twuality op, const SquareMatrix& m, const SweepOptions& opts) {
    check_sweep_size(m, opts);
    Counts counts = subset_sweep(m, std::span<const Twuality>(&op, 1), opts);
    return IntPolynomial(std::move(counts[static_cast<int>(op)]));
}

std::map<Twuality, IntPolynomial> all_polynomials(const SquareMatrix& m,
                                                  const SweepOptions& opts) {
    check_sweep_size(m, opts);
    Counts counts = subset_sweep(m, kAllTwualities, opts);
    std::map<Twuality, IntPolynomial> out;
    for (Twuality op : kAllTwualities) {
        out.emplace(op, IntPolynomial(std::move(counts[static_cast<int>(op)])));
    }
    return out;
}

CorankDistribution interlace_polynomial(const SquareMatrix& m, const SweepOptions& opts) {
    check_sweep_size(m, opts);
    int n = m.size();
    std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    if (m.field().kind() == FieldKind::gf2) {
        auto rows = m.packed_rows();
        for (std::uint64_t amask = 0; amask < total; ++amask) {
            int corank = __builtin_popcountll(amask) - gf2::rank_principal(rows.data(), amask);
            ++counts[static_cast<std::size_t>(corank)];
        }
    } else {
        for (std::uint64_t amask = 0; amask < total; ++amask) {
            int corank = __builtin_popcountll(amask) - rank_principal_generic(m, amask);
            ++counts[static_cast<std::size_t>(corank)];
        }
    }
    CorankDistribution dist;
    for (int c = 0; c <= n; ++c) {
        if (counts[c] != 0) dist.counts[c] = counts[c];
    }
    return dist;
}

bool check_tdt_interlace_identity(const SquareMatrix& m, const SweepOptions& opts) {
    int rank_m = m.rank();
    IntPolynomial p = polynomial(Twuality::taudeltatau, m, opts);
    CorankDistribution dist =
        interlace_polynomial(m.add_diagonal_indicator(IndexSubset::full(m)), opts);
    for (int c = 0; c <= m.size(); ++c) {
        auto it = dist.counts.find(c);
        std::uint64_t want = (it == dist.counts.end()) ? 0 : it->second;
        std::uint64_t got = (rank_m - c >= 0) ? p.coefficient(rank_m - c) : 0;
        if (want != got) return false;
    }
    return true;
}

IndexSubset find_nonsingular_diagonal(const SquareMatrix& m) {
    int n = m.size();
    if (n > kHardSweepLimit) {
        throw ContractError("find_nonsingular_diagonal: index set too large to enumerate");
    }
    std::uint64_t total = std::uint64_t{1} << n;
    if (m.field().kind() == FieldKind::gf2 && n <= 64) {
        auto rows = m.packed_rows();
        for (std::uint64_t amask = 0; amask < total; ++amask) {
            if (gf2::rank_shifted(rows.data(), n, amask) == n) {
                return IndexSubset(m.labels_ptr(), amask);
            }
        }
    } else {
        for (std::uint64_t amask = 0; amask < total; ++amask) {
            if (rank_shifted_generic(m, amask) == n) {
                return IndexSubset(m.labels_ptr(), amask);
            }
        }
    }
    throw InternalInvariantError(
        "no diagonal 0/1 perturbation made the matrix non-singular; "
        "this contradicts the nonsingular-completion lemma");
}

bool verify_product_formula(const SquareMatrix& m, const IndexSubset& v1, const IndexSubset& v2,
                            const SweepOptions& opts) {
    if (!m.is_block_diagonal(v1, v2)) {
        throw NotBlockDiagonalError("matrix is not block-diagonal for the given partition");
    }
    auto whole = all_polynomials(m, opts);
    auto left = all_polynomials(m.principal_submatrix(v1), opts);
    auto right = all_polynomials(m.principal_submatrix(v2), opts);
    for (Twuality op : kAllTwualities) {
        if (!(whole.at(op) == left.at(op) * right.at(op))) return false;
    }
    return true;
}

bool verify_pivot_invariance(const SquareMatrix& m, const IndexSubset& x,
                             const SweepOptions& opts) {
    SquareMatrix pivoted = m.pivot(x);
    return polynomial(Twuality::delta, m, opts) == polynomial(Twuality::delta, pivoted, opts);
}

bool verify_inverse_duality(const SquareMatrix& m, const SweepOptions& opts) {
    SquareMatrix inv = m.inverse();
    if (!(polynomial(Twuality::taudeltatau, m, opts) == polynomial(Twuality::tau, inv, opts))) {
        return false;
    }
    return polynomial(Twuality::deltatau, m, opts) == polynomial(Twuality::taudelta, inv, opts);
}

}  // namespace twupoly
