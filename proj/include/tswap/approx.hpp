#pragma once

#include <optional>

#include "tswap/core.hpp"

namespace tswap {

/// Happy swaps first, shoves otherwise, lowest edge index within each kind.
SwapSequence happy_swap_algorithm(const Instance& inst);

/// Sorts the permutation cycle by cycle. Each token but the last of a cycle
/// walks toward the current vertex of the next one and stops one short.
SwapSequence cycle_algorithm(const Instance& inst);

/// Builds the sequence from both ends: happy swaps go to the front, swaps
/// that retarget the final assignment (operations B and C) to the back.
SwapSequence vaughan_algorithm(const Instance& inst);

struct BoundReport {
  std::int64_t D = 0;
  int c = 0;
  std::int64_t M = 0;  // D - (n - c)
  std::optional<int> gamma;
};

BoundReport akers_bound(const Instance& inst);

/// Recursive diameter bound: peel the vertex of largest distance sum, adding
/// its eccentricity, until a star remains (worth floor(3(n-1)/2)).
int chitturi_bound(const Tree& tree);

}  // namespace tswap
