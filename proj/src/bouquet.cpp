#include "twupoly/bouquet.hpp"

#include <algorithm>
#include <unordered_map>

namespace twupoly {

Bouquet::Bouquet(std::vector<std::string> word, const std::vector<std::string>& twisted)
    : word_(std::move(word)) {
    index_word();
    twisted_ = label_mask(twisted);
}

void Bouquet::index_word() {
    std::unordered_map<std::string, int> index;
    std::unordered_map<std::string, int> first_pos;
    for (std::size_t p = 0; p < word_.size(); ++p) {
        const std::string& tok = word_[p];
        auto it = index.find(tok);
        if (it == index.end()) {
            index.emplace(tok, static_cast<int>(labels_.size()));
            first_pos.emplace(tok, static_cast<int>(p));
            labels_.push_back(tok);
        } else {
            if (first_pos.count(tok) == 0) {
                throw ContractError("bouquet: label '" + tok + "' occurs more than twice");
            }
            first_pos.erase(tok);
        }
    }
    if (!first_pos.empty()) {
        throw ContractError("bouquet: label '" + first_pos.begin()->first +
                            "' occurs only once");
    }
    if (labels_.size() > 62) throw ContractError("bouquet: more than 62 edges");

    edge_at_.assign(word_.size(), -1);
    other_pos_.assign(word_.size(), -1);
    std::unordered_map<std::string, int> seen_at;
    for (std::size_t p = 0; p < word_.size(); ++p) {
        edge_at_[p] = index[word_[p]];
        auto it = seen_at.find(word_[p]);
        if (it == seen_at.end()) {
            seen_at.emplace(word_[p], static_cast<int>(p));
        } else {
            other_pos_[p] = it->second;
            other_pos_[it->second] = static_cast<int>(p);
        }
    }
}

std::vector<std::string> Bouquet::twisted_labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < edge_count(); ++i) {
        if ((twisted_ >> i) & 1u) out.push_back(labels_[i]);
    }
    return out;
}

std::uint64_t Bouquet::label_mask(const std::vector<std::string>& edge_labels) const {
    std::uint64_t mask = 0;
    for (const std::string& l : edge_labels) {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) throw ContractError("bouquet: unknown edge label '" + l + "'");
        mask |= std::uint64_t{1} << (it - labels_.begin());
    }
    return mask;
}

Graft Bouquet::intersection_graft() const {
    int n = edge_count();
    std::vector<std::pair<int, int>> occ(n, {-1, -1});
    for (std::size_t p = 0; p < word_.size(); ++p) {
        int e = edge_at_[p];
        if (occ[e].first < 0) {
            occ[e].first = static_cast<int>(p);
        } else {
            occ[e].second = static_cast<int>(p);
        }
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (int e = 0; e < n; ++e) {
        for (int f = e + 1; f < n; ++f) {
            // Interlaced iff exactly one occurrence of f lies strictly
            // between the two occurrences of e.
            bool in1 = occ[e].first < occ[f].first && occ[f].first < occ[e].second;
            bool in2 = occ[e].first < occ[f].second && occ[f].second < occ[e].second;
            if (in1 != in2) edges.emplace_back(labels_[e], labels_[f]);
        }
    }
    return Graft(labels_, edges, twisted_labels());
}

int Bouquet::boundary_components() const {
    int positions = static_cast<int>(word_.size());
    if (positions == 0) return 1;

    // Darts are (position, side); side flips when the edge is twisted.
    // dart id = 2*position + side.
    int dart_count = 2 * positions;
    std::vector<bool> visited(dart_count, false);
    auto step = [&](int dart) {
        int pos = dart >> 1;
        int side = dart & 1;
        int j = other_pos_[pos];
        int side2 = ((twisted_ >> edge_at_[pos]) & 1u) ? side ^ 1 : side;
        int next_pos = (side2 == 0) ? (j + 1) % positions : (j - 1 + positions) % positions;
        return 2 * next_pos + side2;
    };

    int orbits = 0;
    for (int d = 0; d < dart_count; ++d) {
        if (visited[d]) continue;
        ++orbits;
        int cur = d;
        do {
            visited[cur] = true;
            cur = step(cur);
        } while (cur != d);
    }
    if (orbits % 2 != 0) {
        throw InternalInvariantError("dart orbit count is odd; face tracing is broken");
    }
    return orbits / 2;
}

int Bouquet::euler_genus() const {
    int genus = 2 + edge_count() - 1 - boundary_components();
    if (genus < 0) throw InternalInvariantError("negative Euler genus from face tracing");
    return genus;
}

Bouquet Bouquet::delete_edges(const std::vector<std::string>& edge_labels) const {
    return delete_edges_mask(label_mask(edge_labels));
}

Bouquet Bouquet::delete_edges_mask(std::uint64_t fmask) const {
    std::vector<std::string> word;
    word.reserve(word_.size());
    for (std::size_t p = 0; p < word_.size(); ++p) {
        if (!((fmask >> edge_at_[p]) & 1u)) word.push_back(word_[p]);
    }
    std::vector<std::string> twisted;
    for (int e = 0; e < edge_count(); ++e) {
        if (((twisted_ >> e) & 1u) && !((fmask >> e) & 1u)) twisted.push_back(labels_[e]);
    }
    return Bouquet(std::move(word), twisted);
}

Bouquet Bouquet::partial_petrial(const std::vector<std::string>& edge_labels) const {
    return partial_petrial_mask(label_mask(edge_labels));
}

Bouquet Bouquet::partial_petrial_mask(std::uint64_t fmask) const {
    if (edge_count() < 64 && (fmask >> edge_count()) != 0) {
        throw ContractError("partial_petrial: mask has bits outside the edge set");
    }
    Bouquet out = *this;
    out.twisted_ ^= fmask;
    return out;
}

int Bouquet::twuality_euler_genus(Twuality op, const std::vector<std::string>& edge_labels) const {
    return twuality_euler_genus_mask(op, label_mask(edge_labels));
}

int Bouquet::twuality_euler_genus_mask(Twuality op, std::uint64_t fmask) const {
    int n = edge_count();
    std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
    if ((fmask & ~full) != 0) {
        throw ContractError("twuality_euler_genus: mask has bits outside the edge set");
    }
    std::uint64_t comp = full & ~fmask;
    int genus;
    switch (op) {
        case Twuality::tau:
            return partial_petrial_mask(fmask).euler_genus();
        case Twuality::delta:
            genus = 2 + n - delete_edges_mask(fmask).boundary_components() -
                    delete_edges_mask(comp).boundary_components();
            break;
        case Twuality::deltatau:
            genus = 2 + n - delete_edges_mask(fmask).boundary_components() -
                    partial_petrial_mask(fmask).delete_edges_mask(comp).boundary_components();
            break;
        case Twuality::taudelta:
            genus = 2 + n - partial_petrial_mask(fmask).boundary_components() -
                    delete_edges_mask(comp).boundary_components();
            break;
        case Twuality::taudeltatau:
            genus = 2 + n - boundary_components() -
                    partial_petrial_mask(fmask).delete_edges_mask(comp).boundary_components();
            break;
        default:
            throw InternalInvariantError("unknown twuality operator");
    }
    if (genus < 0) {
        throw InternalInvariantError("negative twuality Euler genus from face tracing");
    }
    return genus;
}

IntPolynomial Bouquet::topological_polynomial(Twuality op, const SweepOptions& opts) const {
    int n = edge_count();
    if (n > opts.max_n) {
        throw SizeCapError("bouquet with " + std::to_string(n) +
                           " edges exceeds the configured cap of " + std::to_string(opts.max_n));
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t fmask = 0; fmask < total; ++fmask) {
        int genus = twuality_euler_genus_mask(op, fmask);
        if (genus > n) throw InternalInvariantError("twuality Euler genus exceeds edge count");
        ++counts[static_cast<std::size_t>(genus)];
    }
    return IntPolynomial(std::move(counts));
}

bool Bouquet::check_equivalence(const SweepOptions& opts) const {
    Graft graft = intersection_graft();
    for (Twuality op : kAllTwualities) {
        if (!(topological_polynomial(op, opts) == graft_polynomial(op, graft, opts))) {
            return false;
        }
    }
    return true;
}

}  // namespace twupoly
