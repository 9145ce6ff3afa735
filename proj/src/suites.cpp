#include "twupoly/suites.hpp"

#include <sstream>

#include "twupoly/io.hpp"
#include "twupoly/samplers.hpp"

namespace twupoly::suites {

namespace {

using samplers::Rng;

std::string matrix_dump(const SquareMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

std::string graft_dump(const Graft& g) {
    std::ostringstream os;
    write_graft(os, g);
    return os.str();
}

std::string bouquet_dump(const Bouquet& b) {
    std::ostringstream os;
    write_bouquet(os, b);
    return os.str();
}

std::vector<Field> sample_fields(const std::optional<Field>& only) {
    if (only) return {*only};
    return {Field::gf2(), Field::gfp(3), Field::rationals()};
}

// Collects per-property outcomes; a property fails on the first
// counterexample and keeps its dump.
struct Prop {
    PropertyResult res;

    explicit Prop(std::string name) { res.name = std::move(name); }

    void count(bool ok, const std::function<std::string()>& dump) {
        ++res.cases;
        if (!ok && res.passed) {
            res.passed = false;
            res.detail = dump();
        }
    }
};

// ------------------------------------------------------------------
// degrees: Propositions 3.5 / 3.9 plus the forced coefficient sum.

SuiteReport suite_degrees(std::uint64_t seed, const SweepOptions& opts,
                          const std::optional<Field>& only_field) {
    Rng rng(seed);
    Prop nonneg("min_deg >= 0 for all five operators");
    Prop tau_deg("deg P_tau = n exactly");
    Prop others_deg("deg of the other four polynomials <= n");
    Prop coeff_sum("coefficient sum = 2^n");

    for (const Field& field : sample_fields(only_field)) {
        for (int n = 0; n <= 6; ++n) {
            for (int rep = 0; rep < (n == 0 ? 1 : 25); ++rep) {
                SquareMatrix m = samplers::random_matrix(field, n, rng);
                auto polys = all_polynomials(m, opts);
                auto dump = [&] { return matrix_dump(m); };
                for (Twuality op : kAllTwualities) {
                    const IntPolynomial& p = polys.at(op);
                    nonneg.count(!p.is_zero() && p.min_degree() >= 0, dump);
                    if (op == Twuality::tau) {
                        tau_deg.count(p.degree() == n, dump);
                    } else {
                        others_deg.count(p.degree() <= n, dump);
                    }
                    coeff_sum.count(p.coefficient_sum() == (std::uint64_t{1} << n), dump);
                }
            }
        }
    }
    return SuiteReport{"degrees",
                       {nonneg.res, tau_deg.res, others_deg.res, coeff_sum.res}};
}

// ------------------------------------------------------------------
// interpolation: Theorem 4.2.

SuiteReport suite_interpolation(std::uint64_t seed, const SweepOptions& opts,
                                const std::optional<Field>& only_field) {
    Rng rng(seed);
    Prop tau_interp("P_tau and P_taudeltatau are interpolating");
    Prop no_big_gaps("P_delta, P_deltatau, P_taudelta have no gaps of size >= 2");
    Prop parity("even (odd) polynomials among those three are even- (odd-) interpolating");
    Prop sym_zero("symmetric zero-diagonal => P_delta even-interpolating");

    auto check_one = [&](const SquareMatrix& m) {
        auto polys = all_polynomials(m, opts);
        auto dump = [&] { return matrix_dump(m); };
        for (Twuality op : kAllTwualities) {
            GapReport rep = gap_report(polys.at(op));
            if (op == Twuality::tau || op == Twuality::taudeltatau) {
                tau_interp.count(rep.is_interpolating, dump);
            } else {
                no_big_gaps.count(!rep.has_gap_of_size_at_least(2), dump);
                if (rep.is_even_polynomial) {
                    parity.count(rep.is_even_interpolating, dump);
                } else if (rep.is_odd_polynomial) {
                    parity.count(rep.is_odd_interpolating, dump);
                }
            }
        }
    };

    // Exhaustive GF(2), n = 3: all 512 matrices.
    for (int bits = 0; bits < 512; ++bits) {
        std::vector<std::vector<long long>> rows(3, std::vector<long long>(3));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) rows[i][j] = (bits >> (3 * i + j)) & 1;
        }
        check_one(SquareMatrix::from_ints(Field::gf2(), rows));
    }
    for (const Field& field : sample_fields(only_field)) {
        for (int rep = 0; rep < 60; ++rep) {
            int n = 1 + static_cast<int>(samplers::below(rng, 6));
            check_one(samplers::random_matrix(field, n, rng));
            SquareMatrix s = samplers::random_symmetric_zero_diagonal(field, n, rng);
            GapReport rep_delta = gap_report(polynomial(Twuality::delta, s, opts));
            sym_zero.count(rep_delta.is_even_interpolating, [&] { return matrix_dump(s); });
        }
    }
    return SuiteReport{"interpolation",
                       {tau_interp.res, no_big_gaps.res, parity.res, sym_zero.res}};
}

// ------------------------------------------------------------------
// product: Proposition 3.1.

SuiteReport suite_product(std::uint64_t seed, const SweepOptions& opts,
                          const std::optional<Field>& only_field) {
    Rng rng(seed);
    Prop product("block-diagonal matrices factor through all five operators");
    Prop rejects("non-block-diagonal input is rejected");

    for (const Field& field : sample_fields(only_field)) {
        for (int rep = 0; rep < 25; ++rep) {
            int n1 = 1 + static_cast<int>(samplers::below(rng, 3));
            int n2 = 1 + static_cast<int>(samplers::below(rng, 3));
            SquareMatrix a = samplers::random_matrix(field, n1, rng);
            SquareMatrix b = samplers::random_matrix(field, n2, rng);
            int n = n1 + n2;
            std::vector<Scalar> entries(static_cast<std::size_t>(n) * n, field.zero());
            for (int i = 0; i < n1; ++i) {
                for (int j = 0; j < n1; ++j) {
                    entries[static_cast<std::size_t>(i) * n + j] = a.at(i, j);
                }
            }
            for (int i = 0; i < n2; ++i) {
                for (int j = 0; j < n2; ++j) {
                    entries[static_cast<std::size_t>(n1 + i) * n + (n1 + j)] = b.at(i, j);
                }
            }
            SquareMatrix m(field, SquareMatrix::default_labels(n), std::move(entries));
            IndexSubset v1 = IndexSubset::of_mask(m, (std::uint64_t{1} << n1) - 1);
            product.count(verify_product_formula(m, v1, v1.complement(), opts),
                          [&] { return matrix_dump(m); });
        }
    }

    SquareMatrix dense = SquareMatrix::from_ints(Field::gf2(), {{0, 1}, {1, 0}});
    bool threw = false;
    try {
        verify_product_formula(dense, IndexSubset::of(dense, {0}), IndexSubset::of(dense, {1}),
                               opts);
    } catch (const NotBlockDiagonalError&) {
        threw = true;
    }
    rejects.count(threw, [&] { return matrix_dump(dense); });

    return SuiteReport{"product", {product.res, rejects.res}};
}

// ------------------------------------------------------------------
// isolated: Proposition 3.3 (GF(2)).

IntPolynomial isolated_factor(Twuality op, bool diag_one) {
    std::vector<std::uint64_t> two_z = {0, 2}, two = {2}, z_plus_1 = {1, 1};
    switch (op) {
        case Twuality::delta: return IntPolynomial(diag_one ? two_z : two);
        case Twuality::tau:
        case Twuality::deltatau: return IntPolynomial(z_plus_1);
        case Twuality::taudelta:
        case Twuality::taudeltatau: return IntPolynomial(diag_one ? z_plus_1 : two);
    }
    return IntPolynomial();
}

SuiteReport suite_isolated(std::uint64_t seed, const SweepOptions& opts,
                           const std::optional<Field>&) {
    Rng rng(seed);
    Prop factor("isolated vertex contributes the c_* factor (GF(2))");
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(samplers::below(rng, 5));
        SquareMatrix rest = samplers::random_matrix(Field::gf2(), n, rng);
        bool diag_one = samplers::below(rng, 2) == 1;
        int v = static_cast<int>(samplers::below(rng, n + 1));  // where to plant v

        Field f = Field::gf2();
        int total = n + 1;
        std::vector<Scalar> entries(static_cast<std::size_t>(total) * total, f.zero());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int gi = i < v ? i : i + 1;
                int gj = j < v ? j : j + 1;
                entries[static_cast<std::size_t>(gi) * total + gj] = rest.at(i, j);
            }
        }
        if (diag_one) entries[static_cast<std::size_t>(v) * total + v] = f.one();
        SquareMatrix m(f, SquareMatrix::default_labels(total), std::move(entries));

        auto whole = all_polynomials(m, opts);
        auto sub = all_polynomials(rest, opts);
        for (Twuality op : kAllTwualities) {
            bool ok = whole.at(op) == isolated_factor(op, diag_one) * sub.at(op);
            factor.count(ok, [&] {
                return "operator " + std::string(twuality_name(op)) + "\n" + matrix_dump(m);
            });
        }
    }
    return SuiteReport{"isolated", {factor.res}};
}

// ------------------------------------------------------------------
// leaf: Propositions 3.2 and 3.4.

SuiteReport suite_leaf(std::uint64_t seed, const SweepOptions& opts, const std::optional<Field>&) {
    Rng rng(seed);
    Prop delta_rec("leaf recursion for P_delta (x unmarked)");
    Prop tau_rec("leaf recursion for P_tau");
    for (int rep = 0; rep < 50; ++rep) {
        int n = 2 + static_cast<int>(samplers::below(rng, 4));
        Graft base = samplers::random_graft(n, rng);
        // Plant a fresh leaf x attached to a random existing vertex y.
        LabelList vertices = base.vertices();
        std::string x = "leaf";
        std::string y = vertices[samplers::below(rng, vertices.size())];
        vertices.push_back(x);
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [u, v] : base.edge_indices()) {
            edges.emplace_back(base.vertices()[u], base.vertices()[v]);
        }
        edges.emplace_back(x, y);
        Graft g(vertices, edges, base.marked_labels());  // x stays unmarked
        auto dump = [&] { return graft_dump(g) + "leaf x=" + x + " y=" + y + "\n"; };
        delta_rec.count(leaf_reduce_check_delta(g, x, y, opts), dump);
        tau_rec.count(leaf_reduce_check_tau(g, x, y, opts), dump);
    }
    return SuiteReport{"leaf", {delta_rec.res, tau_rec.res}};
}

// ------------------------------------------------------------------
// pivot: Theorem 5.2, Lemma 5.1, involution, symmetry preservation.

std::optional<IndexSubset> random_admissible_pivot(const SquareMatrix& m, Rng& rng,
                                                   int max_tries = 50) {
    int n = m.size();
    for (int t = 0; t < max_tries; ++t) {
        std::uint64_t xmask =
            samplers::below(rng, std::uint64_t{1} << n);
        IndexSubset x = IndexSubset::of_mask(m, xmask);
        if (m.principal_submatrix(x).rank() == x.size()) return x;
    }
    return std::nullopt;
}

SuiteReport suite_pivot(std::uint64_t seed, const SweepOptions& opts,
                        const std::optional<Field>& only_field) {
    Rng rng(seed);
    Prop invariance("P_delta is invariant under admissible pivots (GF(2) symmetric)");
    Prop corank_eq("corank M[A] = corank (M*X)[A delta X]");
    Prop involution("(M*X)*X = M");
    Prop symmetry("GF(2): pivot of a symmetric matrix is symmetric");

    for (int rep = 0; rep < 40; ++rep) {
        int n = 1 + static_cast<int>(samplers::below(rng, 6));
        SquareMatrix m = samplers::random_symmetric_gf2(n, rng);
        auto x = random_admissible_pivot(m, rng);
        if (!x) continue;
        auto dump = [&] {
            return matrix_dump(m) + "pivot set mask " + std::to_string(x->mask()) + "\n";
        };
        invariance.count(verify_pivot_invariance(m, *x, opts), dump);
        SquareMatrix piv = m.pivot(*x);
        symmetry.count(piv.is_symmetric(), dump);
        involution.count(piv.pivot(*x) == m, dump);
        std::uint64_t amask = samplers::below(rng, std::uint64_t{1} << n);
        IndexSubset a = IndexSubset::of_mask(m, amask);
        corank_eq.count(m.principal_submatrix(a).corank() ==
                            piv.principal_submatrix(a.symmetric_difference(*x)).corank(),
                        dump);
    }
    // Involution and Lemma 5.1 over the other fields too.
    for (const Field& field : sample_fields(only_field)) {
        for (int rep = 0; rep < 20; ++rep) {
            int n = 1 + static_cast<int>(samplers::below(rng, 5));
            SquareMatrix m = samplers::random_matrix(field, n, rng);
            auto x = random_admissible_pivot(m, rng);
            if (!x) continue;
            auto dump = [&] {
                return matrix_dump(m) + "pivot set mask " + std::to_string(x->mask()) + "\n";
            };
            SquareMatrix piv = m.pivot(*x);
            involution.count(piv.pivot(*x) == m, dump);
            std::uint64_t amask = samplers::below(rng, std::uint64_t{1} << n);
            IndexSubset a = IndexSubset::of_mask(m, amask);
            corank_eq.count(m.principal_submatrix(a).corank() ==
                                piv.principal_submatrix(a.symmetric_difference(*x)).corank(),
                            dump);
        }
    }
    return SuiteReport{"pivot", {invariance.res, corank_eq.res, involution.res, symmetry.res}};
}

// ------------------------------------------------------------------
// duality: Theorem 5.5.

SuiteReport suite_duality(std::uint64_t seed, const SweepOptions& opts,
                          const std::optional<Field>& only_field) {
    Rng rng(seed);
    Prop duality("P_taudeltatau(M) = P_tau(M^-1) and P_deltatau(M) = P_taudelta(M^-1)");
    for (const Field& field : sample_fields(only_field)) {
        for (int rep = 0; rep < 25; ++rep) {
            int n = 1 + static_cast<int>(samplers::below(rng, 6));
            SquareMatrix m = samplers::random_nonsingular(field, n, rng);
            duality.count(verify_inverse_duality(m, opts), [&] { return matrix_dump(m); });
        }
    }
    return SuiteReport{"duality", {duality.res}};
}

// ------------------------------------------------------------------
// equivalence: Theorem 2.12 + Lemma 2.5 + per-subset Theorem 2.7.

SuiteReport suite_equivalence(std::uint64_t, const SweepOptions& opts,
                              const std::optional<Field>&) {
    Prop equal_polys("topological polynomial = matrix polynomial, all five operators");
    Prop faces("f(B) = corank(adjacency of intersection graft) + 1");
    Prop per_subset("per-subset Euler genus = matrix exponent, all five operators");

    for (int n = 0; n <= 4; ++n) {
        samplers::for_each_bouquet(n, [&](const Bouquet& b) {
            auto dump = [&] { return bouquet_dump(b); };
            equal_polys.count(b.check_equivalence(opts), dump);
            SquareMatrix adj = b.intersection_graft().adjacency_matrix();
            faces.count(b.boundary_components() == adj.corank() + 1, dump);
            std::uint64_t total = std::uint64_t{1} << n;
            bool all_ok = true;
            for (std::uint64_t fmask = 0; fmask < total && all_ok; ++fmask) {
                for (Twuality op : kAllTwualities) {
                    long long want = exponent(op, adj, IndexSubset::of_mask(adj, fmask));
                    if (b.twuality_euler_genus_mask(op, fmask) != want) {
                        all_ok = false;
                        break;
                    }
                }
            }
            per_subset.count(all_ok, dump);
        });
    }
    return SuiteReport{"equivalence", {equal_polys.res, faces.res, per_subset.res}};
}

// ------------------------------------------------------------------
// interlace: the corank-distribution identities.

SuiteReport suite_interlace(std::uint64_t seed, const SweepOptions& opts,
                            const std::optional<Field>& only_field) {
    Rng rng(seed);
    Prop matrices("P_taudeltatau(M) = z^rank q(M+I, 1+1/z) (corank distribution form)");
    Prop grafts("graft form via (G, V \\ L) corank distribution");
    for (const Field& field : sample_fields(only_field)) {
        for (int rep = 0; rep < 25; ++rep) {
            int n = 1 + static_cast<int>(samplers::below(rng, 6));
            SquareMatrix m = samplers::random_matrix(field, n, rng);
            matrices.count(check_tdt_interlace_identity(m, opts), [&] { return matrix_dump(m); });
        }
    }
    for (int rep = 0; rep < 25; ++rep) {
        int n = 1 + static_cast<int>(samplers::below(rng, 6));
        Graft g = samplers::random_graft(n, rng);
        grafts.count(check_tdt_interlace_identity(g.adjacency_matrix(), opts),
                     [&] { return graft_dump(g); });
    }
    return SuiteReport{"interlace", {matrices.res, grafts.res}};
}

// ------------------------------------------------------------------
// kn: Example 2.13 closed forms.

SuiteReport suite_kn(std::uint64_t, const SweepOptions& opts, const std::optional<Field>&) {
    Prop match("closed form = brute force for n = 1..10");
    Prop rejects("delta/tau closed forms are rejected as unsupported");
    for (int n = 1; n <= 10; ++n) {
        SquareMatrix adj = kn_graft(n).adjacency_matrix();
        for (Twuality op : {Twuality::taudeltatau, Twuality::deltatau, Twuality::taudelta}) {
            IntPolynomial brute = polynomial(op, adj, opts);
            IntPolynomial closed = kn_closed_form(op, n);
            match.count(brute == closed, [&] {
                return "K_" + std::to_string(n) + " " + std::string(twuality_name(op)) +
                       "\nbrute force (ground truth): " + brute.to_text() +
                       "\nclosed form: " + closed.to_text() + "\n";
            });
        }
    }
    for (Twuality op : {Twuality::delta, Twuality::tau}) {
        bool threw = false;
        try {
            kn_closed_form(op, 3);
        } catch (const UnsupportedOperatorError&) {
            threw = true;
        }
        rejects.count(threw, [] { return std::string("no exception raised"); });
    }
    return SuiteReport{"kn", {match.res, rejects.res}};
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"degrees", "interpolation", "product", "isolated", "leaf",
            "pivot",   "duality",       "equivalence", "interlace", "kn"};
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, int threads,
                                    const std::optional<Field>& only_field) {
    SweepOptions opts;
    opts.threads = threads;
    using Runner = SuiteReport (*)(std::uint64_t, const SweepOptions&,
                                   const std::optional<Field>&);
    struct Entry {
        const char* name;
        Runner run;
    };
    static const Entry table[] = {
        {"degrees", suite_degrees}, {"interpolation", suite_interpolation},
        {"product", suite_product}, {"isolated", suite_isolated},
        {"leaf", suite_leaf},       {"pivot", suite_pivot},
        {"duality", suite_duality}, {"equivalence", suite_equivalence},
        {"interlace", suite_interlace}, {"kn", suite_kn},
    };
    std::vector<SuiteReport> out;
    bool all = (name == "all");
    for (const Entry& e : table) {
        if (all || name == e.name) out.push_back(e.run(seed, opts, only_field));
    }
    if (out.empty()) throw ContractError("unknown suite '" + name + "'");
    return out;
}

}  // namespace twupoly::suites
