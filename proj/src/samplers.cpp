#include "twupoly/samplers.hpp"

namespace twupoly::samplers {

namespace {

Scalar random_scalar(const Field& field, Rng& rng) {
    switch (field.kind()) {
        case FieldKind::gf2: return field.from_int(static_cast<long long>(rng() & 1));
        case FieldKind::gfp:
            return field.from_int(static_cast<long long>(below(rng, field.modulus())));
        case FieldKind::rational: {
            long long num = static_cast<long long>(below(rng, 9)) - 4;
            long long den = static_cast<long long>(below(rng, 3)) + 1;
            Rational r(static_cast<long>(num), static_cast<long>(den));
            r.canonicalize();
            return Scalar(r);
        }
    }
    return field.zero();
}

std::string bouquet_label(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "e" + std::to_string(i);
}

}  // namespace

SquareMatrix random_matrix(const Field& field, int n, Rng& rng) {
    std::vector<Scalar> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) a.push_back(random_scalar(field, rng));
    return SquareMatrix(field, SquareMatrix::default_labels(n), std::move(a));
}

SquareMatrix random_symmetric_gf2(int n, Rng& rng, bool zero_diagonal) {
    Field f = Field::gf2();
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, f.zero());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (i == j && zero_diagonal) continue;
            Scalar v = f.from_int(static_cast<long long>(rng() & 1));
            a[static_cast<std::size_t>(i) * n + j] = v;
            a[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return SquareMatrix(f, SquareMatrix::default_labels(n), std::move(a));
}

SquareMatrix random_symmetric_zero_diagonal(const Field& field, int n, Rng& rng) {
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, field.zero());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Scalar v = random_scalar(field, rng);
            a[static_cast<std::size_t>(i) * n + j] = v;
            a[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return SquareMatrix(field, SquareMatrix::default_labels(n), std::move(a));
}

SquareMatrix random_nonsingular(const Field& field, int n, Rng& rng) {
    for (int tries = 0; tries < 5000; ++tries) {
        SquareMatrix m = random_matrix(field, n, rng);
        if (m.rank() == n) return m;
    }
    throw InternalInvariantError("random_nonsingular: no non-singular sample in 5000 tries");
}

Graft random_graft(int n, Rng& rng) {
    LabelList vertices;
    for (int i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() & 1) edges.emplace_back(vertices[i], vertices[j]);
        }
    }
    LabelList marked;
    for (int i = 0; i < n; ++i) {
        if (rng() & 1) marked.push_back(vertices[i]);
    }
    return Graft(std::move(vertices), edges, marked);
}

Bouquet random_bouquet(int n, Rng& rng) {
    std::vector<int> word;
    word.reserve(2 * n);
    for (int e = 0; e < n; ++e) {
        word.push_back(e);
        word.push_back(e);
    }
    for (std::size_t i = word.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(below(rng, i));
        std::swap(word[i - 1], word[j]);
    }
    std::vector<std::string> tokens;
    tokens.reserve(word.size());
    for (int e : word) tokens.push_back(bouquet_label(e));
    std::uint64_t tmask = (n == 0) ? 0 : below(rng, std::uint64_t{1} << n);
    std::vector<std::string> twisted;
    for (int e = 0; e < n; ++e) {
        if ((tmask >> e) & 1u) twisted.push_back(bouquet_label(e));
    }
    return Bouquet(std::move(tokens), twisted);
}

namespace {

void words_rec(int n, std::vector<int>& word, std::vector<int>& remaining, std::size_t pos,
               const std::function<void(const std::vector<int>&)>& visit) {
    if (pos == word.size()) {
        visit(word);
        return;
    }
    for (int e = 0; e < n; ++e) {
        if (remaining[e] == 0) continue;
        --remaining[e];
        word[pos] = e;
        words_rec(n, word, remaining, pos + 1, visit);
        ++remaining[e];
    }
}

}  // namespace

void for_each_bouquet(int n, const std::function<void(const Bouquet&)>& visit) {
    std::vector<int> word(static_cast<std::size_t>(2) * n, -1);
    std::vector<int> remaining(n, 2);
    std::uint64_t patterns = std::uint64_t{1} << n;
    words_rec(n, word, remaining, 0, [&](const std::vector<int>& w) {
        std::vector<std::string> tokens;
        tokens.reserve(w.size());
        for (int e : w) tokens.push_back(bouquet_label(e));
        for (std::uint64_t tmask = 0; tmask < patterns; ++tmask) {
            std::vector<std::string> twisted;
            for (int e = 0; e < n; ++e) {
                if ((tmask >> e) & 1u) twisted.push_back(bouquet_label(e));
            }
            visit(Bouquet(tokens, twisted));
        }
    });
}

}  // namespace twupoly::samplers
