// Grafts: simple graphs with a distinguished vertex subset, their GF(2)
// adjacency matrices, K_n closed forms and leaf-reduction checks.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twupoly/matrix.hpp"
#include "twupoly/twuality.hpp"

namespace twupoly {

class Graft {
public:
    /// Vertices in matrix order; edges as unordered label pairs (loops
    /// and duplicates rejected); marked is the distinguished subset.
    Graft(LabelList vertices, const std::vector<std::pair<std::string, std::string>>& edges,
          const LabelList& marked);

    static Graft empty();

    int vertex_count() const { return static_cast<int>(vertices_->size()); }
    const LabelList& vertices() const { return *vertices_; }
    LabelsPtr vertices_ptr() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edge_indices() const { return edges_; }
    std::uint64_t marked_mask() const { return marked_; }
    LabelList marked_labels() const;

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    int vertex_index(const std::string& label) const;  // -1 when absent

    /// Symmetric GF(2) matrix: off-diagonal 1 iff adjacent, diagonal 1
    /// iff marked.
    SquareMatrix adjacency_matrix() const;

    /// Subgraft on the vertices of keep_mask (order preserved); marking
    /// is marked_mask restricted, unless an explicit new marking is
    /// given via with_marked first.
    Graft induced(std::uint64_t keep_mask) const;
    Graft with_marked(std::uint64_t marked_mask) const;

    bool operator==(const Graft& other) const;

private:
    Graft() = default;

    LabelsPtr vertices_;
    std::vector<std::pair<int, int>> edges_;  // i < j, sorted, unique
    std::uint64_t marked_ = 0;
};

IntPolynomial graft_polynomial(Twuality op, const Graft& g, const SweepOptions& opts = {});

/// (K_n, empty marking) with vertices "0".."n-1"; n >= 1.
Graft kn_graft(int n);

/// The printed closed form for P_<op>(K_n, empty), op one of
/// taudeltatau, deltatau, taudelta; delta and tau raise
/// UnsupportedOperatorError.
IntPolynomial kn_closed_form(Twuality op, int n);

/// P_<delta>(G, L) == P_<delta>(G-x, L) + 2z^2 P_<delta>(G-{x,y}, L-{y});
/// requires x a leaf adjacent to y with x not marked.
bool leaf_reduce_check_delta(const Graft& g, const std::string& x, const std::string& y,
                             const SweepOptions& opts = {});

/// P_<tau>(G, L) == z P_<tau>(G-x, L-{x}) + 2z^2 P_<tau>(G-{x,y}, L-{x,y});
/// requires x a leaf adjacent to y.
bool leaf_reduce_check_tau(const Graft& g, const std::string& x, const std::string& y,
                           const SweepOptions& opts = {});

/// Disjoint union; colliding labels in g2 gain "#2" suffixes until free.
Graft disjoint_union(const Graft& g1, const Graft& g2);

}  // namespace twupoly
