// Deterministic instance generators for the verification suites:
// seeded random matrices/grafts/bouquets and exhaustive bouquet
// enumeration.  Randomness uses raw engine draws (no std distributions)
// so a seed produces the same instances everywhere.
#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "twupoly/bouquet.hpp"
#include "twupoly/graft.hpp"
#include "twupoly/matrix.hpp"

namespace twupoly::samplers {

using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

SquareMatrix random_matrix(const Field& field, int n, Rng& rng);
SquareMatrix random_symmetric_gf2(int n, Rng& rng, bool zero_diagonal = false);
SquareMatrix random_symmetric_zero_diagonal(const Field& field, int n, Rng& rng);
/// Rejection-samples until non-singular.
SquareMatrix random_nonsingular(const Field& field, int n, Rng& rng);

Graft random_graft(int n, Rng& rng);
Bouquet random_bouquet(int n, Rng& rng);

/// All double-occurrence words on n fixed labels (no symmetry dedup),
/// each with all 2^n twist patterns, in deterministic order.
void for_each_bouquet(int n, const std::function<void(const Bouquet&)>& visit);

}  // namespace twupoly::samplers
