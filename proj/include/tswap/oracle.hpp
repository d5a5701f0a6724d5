#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tswap/core.hpp"

namespace tswap {

std::uint64_t factorial(int n);

/// Lehmer-code rank of a permutation of 0..n-1 (n <= 20).
std::uint64_t rank_permutation(std::span<const int> perm);
void unrank_permutation(std::uint64_t rank, std::span<int> perm);

struct SearchOptions {
  /// No swap may touch these vertices.
  std::vector<Vertex> forbidden;
  /// Vertex cap for plain (uncoloured, unweighted) breadth-first search.
  int max_n = 10;
  /// Vertex cap for weighted or coloured searches.
  int max_n_weighted = 8;
};

struct SearchResult {
  Cost cost = 0;
  std::int64_t length = 0;
  SwapSequence swaps;
  std::uint64_t states_expanded = 0;
};

/// Certified optimum by explicit search of the configuration graph.
///
/// Plain instances use breadth-first search over Lehmer-ranked placements.
/// Weighted and/or coloured instances run uniform-cost search over colour
/// arrangements (tokens of one colour are interchangeable), with the goal
/// tested by predicate. Throws TooLarge above the caps and Unreachable when
/// the forbidden set isolates the goal.
SearchResult optimal(const Instance& inst, const SearchOptions& options = {});

/// Swap distance from the identity to every placement of a tree. Entry
/// rank_permutation(p) is the optimum for the plain instance (tree, p).
class DistanceTable {
 public:
  DistanceTable(int n, std::vector<std::uint8_t> dist)
      : n_(n), dist_(std::move(dist)) {}

  int vertices() const noexcept { return n_; }
  std::size_t size() const noexcept { return dist_.size(); }
  int at_rank(std::uint64_t rank) const { return dist_[rank]; }
  int at(std::span<const Token> placement) const {
    return dist_[rank_permutation(placement)];
  }
  int max() const;
  std::span<const std::uint8_t> raw() const noexcept { return dist_; }

 private:
  int n_;
  std::vector<std::uint8_t> dist_;
};

DistanceTable all_distances(const Tree& tree, int max_n = 10);

/// Diameter of the Cayley graph generated by the tree's edge transpositions.
int diameter(const Tree& tree, int max_n = 10);

}  // namespace tswap
