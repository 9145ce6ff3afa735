#include "twupoly/graft.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace twupoly {

Graft::Graft(LabelList vertices, const std::vector<std::pair<std::string, std::string>>& edges,
             const LabelList& marked) {
    if (vertices.size() > 64) throw ContractError("graft: more than 64 vertices");
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!index.emplace(vertices[i], static_cast<int>(i)).second) {
            throw ContractError("graft: duplicate vertex label '" + vertices[i] + "'");
        }
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges) {
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu == index.end()) throw ContractError("graft: edge references unknown vertex '" + u + "'");
        if (iv == index.end()) throw ContractError("graft: edge references unknown vertex '" + v + "'");
        if (iu->second == iv->second) {
            throw ContractError("graft: loop edge at '" + u + "' is not allowed");
        }
        auto e = std::minmax(iu->second, iv->second);
        if (!seen.insert({e.first, e.second}).second) {
            throw ContractError("graft: duplicate edge " + u + "-" + v);
        }
    }
    edges_.assign(seen.begin(), seen.end());
    for (const std::string& m : marked) {
        auto it = index.find(m);
        if (it == index.end()) throw ContractError("graft: marked vertex '" + m + "' is unknown");
        marked_ |= std::uint64_t{1} << it->second;
    }
    vertices_ = std::make_shared<const LabelList>(std::move(vertices));
}

Graft Graft::empty() {
    Graft g;
    g.vertices_ = std::make_shared<const LabelList>();
    return g;
}

LabelList Graft::marked_labels() const {
    LabelList out;
    for (int i = 0; i < vertex_count(); ++i) {
        if ((marked_ >> i) & 1u) out.push_back((*vertices_)[i]);
    }
    return out;
}

bool Graft::adjacent(int u, int v) const {
    auto e = std::minmax(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair<int, int>(e.first, e.second));
}

int Graft::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) {
        if (a == v || b == v) ++d;
    }
    return d;
}

int Graft::vertex_index(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i) {
        if ((*vertices_)[i] == label) return i;
    }
    return -1;
}

SquareMatrix Graft::adjacency_matrix() const {
    Field f = Field::gf2();
    int n = vertex_count();
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, f.zero());
    for (const auto& [u, v] : edges_) {
        a[static_cast<std::size_t>(u) * n + v] = f.one();
        a[static_cast<std::size_t>(v) * n + u] = f.one();
    }
    for (int i = 0; i < n; ++i) {
        if ((marked_ >> i) & 1u) a[static_cast<std::size_t>(i) * n + i] = f.one();
    }
    return SquareMatrix(f, vertices_, std::move(a));
}

Graft Graft::induced(std::uint64_t keep_mask) const {
    Graft out;
    auto labels = std::make_shared<LabelList>();
    std::vector<int> new_index(vertex_count(), -1);
    for (int i = 0; i < vertex_count(); ++i) {
        if ((keep_mask >> i) & 1u) {
            new_index[i] = static_cast<int>(labels->size());
            labels->push_back((*vertices_)[i]);
            if ((marked_ >> i) & 1u) out.marked_ |= std::uint64_t{1} << new_index[i];
        }
    }
    for (const auto& [u, v] : edges_) {
        if (new_index[u] >= 0 && new_index[v] >= 0) {
            out.edges_.emplace_back(new_index[u], new_index[v]);
        }
    }
    std::sort(out.edges_.begin(), out.edges_.end());
    out.vertices_ = std::move(labels);
    return out;
}

Graft Graft::with_marked(std::uint64_t marked_mask) const {
    if (vertex_count() < 64 && (marked_mask >> vertex_count()) != 0) {
        throw ContractError("with_marked: mask has bits outside the vertex set");
    }
    Graft out = *this;
    out.marked_ = marked_mask;
    return out;
}

bool Graft::operator==(const Graft& other) const {
    return *vertices_ == *other.vertices_ && edges_ == other.edges_ && marked_ == other.marked_;
}

IntPolynomial graft_polynomial(Twuality op, const Graft& g, const SweepOptions& opts) {
    return polynomial(op, g.adjacency_matrix(), opts);
}

Graft kn_graft(int n) {
    if (n < 1) throw ContractError("kn_graft: n must be >= 1");
    LabelList vertices;
    for (int i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(vertices[i], vertices[j]);
    }
    return Graft(std::move(vertices), edges, {});
}

namespace {

// Signed dense polynomial scratch type for expanding the printed K_n
// closed forms exactly before converting to counts.
struct SignedPoly {
    std::vector<long long> c;

    static SignedPoly monomial(long long coeff, int exp) {
        SignedPoly p;
        p.c.assign(exp + 1, 0);
        p.c[exp] = coeff;
        return p;
    }

    // (1 + s z)^k for s in {+1, -1}.
    static SignedPoly one_plus_sz_pow(long long s, int k) {
        SignedPoly p;
        p.c = {1};
        for (int i = 0; i < k; ++i) {
            std::vector<long long> next(p.c.size() + 1, 0);
            for (std::size_t j = 0; j < p.c.size(); ++j) {
                next[j] += p.c[j];
                next[j + 1] += s * p.c[j];
            }
            p.c = std::move(next);
        }
        return p;
    }

    SignedPoly& operator+=(const SignedPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        return *this;
    }

    SignedPoly& operator-=(const SignedPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }

    SignedPoly& shift(int k) {  // multiply by z^k
        c.insert(c.begin(), k, 0);
        return *this;
    }

    SignedPoly& halve() {
        for (long long& v : c) {
            if (v % 2 != 0) throw InternalInvariantError("closed form: odd coefficient before /2");
            v /= 2;
        }
        return *this;
    }

    IntPolynomial to_int_polynomial() const {
        std::vector<std::uint64_t> out(c.size(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 0) {
                throw InternalInvariantError("closed form expanded to a negative coefficient");
            }
            out[i] = static_cast<std::uint64_t>(c[i]);
        }
        return IntPolynomial(std::move(out));
    }
};

}  // namespace

IntPolynomial kn_closed_form(Twuality op, int n) {
    if (n < 1) throw ContractError("kn_closed_form: n must be >= 1");
    if (n > 60) throw ContractError("kn_closed_form: n too large for exact 64-bit expansion");
    bool even = (n % 2 == 0);
    SignedPoly p;
    switch (op) {
        case Twuality::taudeltatau:
            if (even) {
                // z(1+z)^n + z^n - z^{n+1}
                p = SignedPoly::one_plus_sz_pow(+1, n).shift(1);
                p += SignedPoly::monomial(1, n);
                p -= SignedPoly::monomial(1, n + 1);
            } else {
                // (1+z)^n + z^{n-1} - z^n
                p = SignedPoly::one_plus_sz_pow(+1, n);
                p += SignedPoly::monomial(1, n - 1);
                p -= SignedPoly::monomial(1, n);
            }
            break;
        case Twuality::deltatau: {
            // [(1+z)^{n+1} - (1-z)^{n+1}] / 2, plus parity-dependent
            // corrections.
            p = SignedPoly::one_plus_sz_pow(+1, n + 1);
            p -= SignedPoly::one_plus_sz_pow(-1, n + 1);
            p.halve();
            if (even) {
                p += SignedPoly::monomial(1, n);
                p -= SignedPoly::monomial(1, n + 1);
            } else {
                p += SignedPoly::monomial(1, n - 1);
                p -= SignedPoly::monomial(1, n);
            }
            break;
        }
        case Twuality::taudelta: {
            if (even) {
                p = SignedPoly::one_plus_sz_pow(+1, n + 1);
                p -= SignedPoly::one_plus_sz_pow(-1, n + 1);
                p.halve();
                p += SignedPoly::monomial(1, n);
                p -= SignedPoly::monomial(1, n + 1);
            } else {
                p = SignedPoly::one_plus_sz_pow(+1, n + 1);
                p += SignedPoly::one_plus_sz_pow(-1, n + 1);
                p.halve();
                p += SignedPoly::monomial(1, n - 1);
                p -= SignedPoly::monomial(1, n + 1);
            }
            break;
        }
        case Twuality::delta:
        case Twuality::tau:
            throw UnsupportedOperatorError(
                "no closed form here for delta/tau; they live in prior work");
    }
    return p.to_int_polynomial();
}

namespace {

struct LeafCheck {
    int x;
    int y;
};

LeafCheck check_leaf(const Graft& g, const std::string& x, const std::string& y) {
    int xi = g.vertex_index(x);
    int yi = g.vertex_index(y);
    if (xi < 0) throw ContractError("leaf reduction: unknown vertex '" + x + "'");
    if (yi < 0) throw ContractError("leaf reduction: unknown vertex '" + y + "'");
    if (!g.adjacent(xi, yi)) {
        throw ContractError("leaf reduction: " + x + " and " + y + " are not adjacent");
    }
    if (g.degree(xi) != 1) throw ContractError("leaf reduction: '" + x + "' is not a leaf");
    return {xi, yi};
}

std::uint64_t all_but(const Graft& g, std::initializer_list<int> removed) {
    int n = g.vertex_count();
    std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (int r : removed) mask &= ~(std::uint64_t{1} << r);
    return mask;
}

}  // namespace

bool leaf_reduce_check_delta(const Graft& g, const std::string& x, const std::string& y,
                             const SweepOptions& opts) {
    LeafCheck lc = check_leaf(g, x, y);
    if ((g.marked_mask() >> lc.x) & 1u) {
        throw ContractError("leaf reduction (delta): '" + x + "' must not be marked");
    }
    IntPolynomial lhs = graft_polynomial(Twuality::delta, g, opts);
    IntPolynomial rhs =
        graft_polynomial(Twuality::delta, g.induced(all_but(g, {lc.x})), opts) +
        IntPolynomial::monomial(2, 2) *
            graft_polynomial(Twuality::delta, g.induced(all_but(g, {lc.x, lc.y})), opts);
    return lhs == rhs;
}

bool leaf_reduce_check_tau(const Graft& g, const std::string& x, const std::string& y,
                           const SweepOptions& opts) {
    LeafCheck lc = check_leaf(g, x, y);
    IntPolynomial lhs = graft_polynomial(Twuality::tau, g, opts);
    IntPolynomial rhs =
        IntPolynomial::monomial(1, 1) *
            graft_polynomial(Twuality::tau, g.induced(all_but(g, {lc.x})), opts) +
        IntPolynomial::monomial(2, 2) *
            graft_polynomial(Twuality::tau, g.induced(all_but(g, {lc.x, lc.y})), opts);
    return lhs == rhs;
}

Graft disjoint_union(const Graft& g1, const Graft& g2) {
    std::unordered_set<std::string> taken(g1.vertices().begin(), g1.vertices().end());
    LabelList vertices = g1.vertices();
    LabelList renamed;  // g2's vertices after collision fixes, in order
    for (const std::string& v : g2.vertices()) {
        std::string name = v;
        while (taken.count(name)) name += "#2";
        taken.insert(name);
        vertices.push_back(name);
        renamed.push_back(name);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g1.edge_indices()) {
        edges.emplace_back(g1.vertices()[u], g1.vertices()[v]);
    }
    for (const auto& [u, v] : g2.edge_indices()) {
        edges.emplace_back(renamed[u], renamed[v]);
    }
    LabelList marked = g1.marked_labels();
    for (int i = 0; i < g2.vertex_count(); ++i) {
        if ((g2.marked_mask() >> i) & 1u) marked.push_back(renamed[i]);
    }
    return Graft(std::move(vertices), edges, marked);
}

}  // namespace twupoly
