#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "tswap/core.hpp"

namespace tswap {

/// A placement whose happy leaves, once pinned, make sorting strictly more
/// expensive: the distance on the tree minus those leaves exceeds the
/// distance on the whole tree.
struct HappyLeafCounterexample {
  std::vector<Edge> edges;
  Configuration placement;
  std::vector<Vertex> happy_leaves;
  int distance = 0;
  int pinned_distance = 0;
};

struct HappyLeafSizeReport {
  int n = 0;
  int trees = 0;
  std::uint64_t placements = 0;
  std::uint64_t counterexamples = 0;
};

struct HappyLeafReport {
  std::vector<HappyLeafSizeReport> sizes;
  std::uint64_t counterexamples = 0;
  /// Up to `max_examples` witnesses, ordered by tree and placement rank.
  std::vector<HappyLeafCounterexample> examples;
};

struct HappyLeafOptions {
  int max_n = 8;     // capped at 10
  int threads = 0;   // 0 = hardware concurrency
  std::size_t max_examples = 20;
};

/// Every tree on 1..max_n vertices up to isomorphism, every placement.
HappyLeafReport happy_leaf_search(const HappyLeafOptions& options);

/// The same check for one tree.
HappyLeafReport happy_leaf_search(const Tree& tree, std::size_t max_examples = 20);

enum class RatioFamily { Tk, Tkb };

struct RatioRow {
  RatioFamily family;
  int k = 0;
  int b = 0;  // unused for Tk
  int n = 0;
  std::int64_t companion = 0;
  std::optional<std::int64_t> reversal;  // Tk only
  std::int64_t happy_swap = 0;
  std::int64_t cycle = 0;
  std::int64_t vaughan = 0;
};

/// One row per parameter point; Tk takes `ks`, Tkb pairs ks[i] with bs[i].
std::vector<RatioRow> ratio_experiment(RatioFamily family,
                                       const std::vector<int>& ks,
                                       const std::vector<int>& bs = {});

void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows);

}  // namespace tswap
