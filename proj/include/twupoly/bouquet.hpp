// One-vertex ribbon graphs as signed double-occurrence words: face
// tracing over darts, Euler genus under the five partial twualities,
// intersection grafts, and the topological polynomials.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twupoly/graft.hpp"
#include "twupoly/polynomial.hpp"
#include "twupoly/twuality.hpp"

namespace twupoly {

class Bouquet {
public:
    /// word: cyclic sequence of 2n tokens, each edge label exactly
    /// twice; twisted: the non-orientable loops.  The empty word is the
    /// lone vertex disc.
    Bouquet(std::vector<std::string> word, const std::vector<std::string>& twisted);

    int edge_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& word() const { return word_; }
    /// Edge labels in first-occurrence order; this is also the vertex
    /// order of the intersection graft.
    const std::vector<std::string>& labels() const { return labels_; }
    std::uint64_t twisted_mask() const { return twisted_; }
    std::vector<std::string> twisted_labels() const;

    /// Mask over labels() for a list of edge labels; throws
    /// ContractError on an unknown label.
    std::uint64_t label_mask(const std::vector<std::string>& edge_labels) const;

    Graft intersection_graft() const;

    /// Number of boundary components by dart-orbit tracing; 1 for the
    /// empty bouquet.
    int boundary_components() const;

    /// 2 + n - 1 - f(B); never negative.
    int euler_genus() const;

    Bouquet delete_edges(const std::vector<std::string>& edge_labels) const;
    Bouquet delete_edges_mask(std::uint64_t fmask) const;
    Bouquet partial_petrial(const std::vector<std::string>& edge_labels) const;
    Bouquet partial_petrial_mask(std::uint64_t fmask) const;

    /// Euler genus of B^<op>(F) through the bouquet reductions of the
    /// five twualities; F is a subset of the edge labels.
    int twuality_euler_genus(Twuality op, const std::vector<std::string>& edge_labels) const;
    int twuality_euler_genus_mask(Twuality op, std::uint64_t fmask) const;

    /// Sum over all F of z^genus(B^<op>(F)).
    IntPolynomial topological_polynomial(Twuality op, const SweepOptions& opts = {}) const;

    /// Topological polynomial equals the matrix polynomial of the
    /// intersection graft, for all five operators.
    bool check_equivalence(const SweepOptions& opts = {}) const;

    bool operator==(const Bouquet& other) const {
        return word_ == other.word_ && twisted_ == other.twisted_;
    }

private:
    std::vector<std::string> word_;
    std::vector<std::string> labels_;
    std::uint64_t twisted_ = 0;
    std::vector<int> edge_at_;    // position -> label index
    std::vector<int> other_pos_;  // position -> the label's other position

    void index_word();
};

}  // namespace twupoly
