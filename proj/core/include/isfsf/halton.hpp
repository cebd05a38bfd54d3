#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace isfsf {

// The prime-base table covers the first 50 primes.
inline constexpr int kMaxHaltonDimension = 50;

// Per-dimension digit permutations; entry j permutes the digits {0..b_j-1}
// of the j-th prime base. Every permutation fixes 0, which keeps all points
// strictly inside (0,1).
using DigitPermutations = std::vector<std::vector<int>>;

DigitPermutations identity_permutations(int dim);

// Deterministic per-base scramble derived from `seed`: 0 stays fixed and the
// remaining digits are Fisher-Yates shuffled.
DigitPermutations scrambled_permutations(int dim, std::uint64_t seed);

// n x dim low-discrepancy points in (0,1). Index 0 (the origin) is always
// skipped; `burn_in` additionally drops that many leading points.
Eigen::MatrixXd halton_sequence(int n, int dim, const DigitPermutations& permutations,
                                int burn_in = 0);

// Standard (generalized = false) or digit-scrambled Halton. `seed` is unused
// in the standard case.
Eigen::MatrixXd halton_sequence(int n, int dim, bool generalized, std::uint64_t seed,
                                int burn_in = 0);

}  // namespace isfsf
