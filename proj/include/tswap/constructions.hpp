#pragma once

#include <optional>
#include <vector>

#include "tswap/core.hpp"

namespace tswap {

struct GeneratedInstance {
  Instance instance;
  /// A sorting sequence built alongside the instance.
  SwapSequence companion;
};

/// Ten vertices: the path 0..8 plus leaf 9 on vertex 2. The path holds its
/// tokens reversed and leaf 9 is happy. The companion first walks token 9
/// to vertex 0 and sorts in 34 swaps; fixing the leaf costs 36.
GeneratedInstance happy_leaf_counterexample();

struct TkInstance {
  Instance instance;
  SwapSequence companion;
  std::int64_t reversal_cost = 0;  // C(2k+1, 2)
  std::int64_t step_one_cost = 0;  // first exchange alone
};

/// Path of 2k+1 vertices (vertex i is path position i, center k) with k
/// happy leaves 2k+1..3k on the center; the path tokens are reversed.
/// k must be even and >= 2 (OddK).
TkInstance make_tk(int k);

/// b arms of k vertices around center 0 plus k happy leaves on the center.
/// Arm i (1-based) at distance j is vertex 1 + (i-1)k + (j-1); leaf m is
/// 1 + bk + m. Arm tokens rotate to the next arm at the same depth.
/// b must be odd and >= 3 (EvenB); k >= 1.
GeneratedInstance make_tkb(int k, int b);

/// make_tkb without the parity check (b >= 2). For even b the rotation
/// leaves the leaf tokens reversed and the companion ends with a star sort
/// of the leaves, 3 floor(k/2) extra swaps.
GeneratedInstance make_tkb_general(int k, int b);

/// Closed forms for the companions.
std::int64_t tk_companion_cost(int k);       // 3k^2/2 + 9k
std::int64_t tkb_companion_cost(int k, int b);  // (b+1)(C(k+1,2) + 2k)

// ---------------------------------------------------------------------------
// Vertex cover reduction

struct VertexCoverInput {
  int n = 0;
  std::vector<Edge> edges;
  int q = 0;
};

inline constexpr Colour kRed = 0;
inline constexpr Colour kBlue = 1;
inline constexpr Colour kDarkgray = 2;
/// Edge e (index into the sorted edge list) has colour kEdgeColourBase + e.
inline constexpr Colour kEdgeColourBase = 3;

struct ReductionOutput {
  Instance instance;
  VertexCoverInput source;  // edges normalised (u < v) and sorted
  std::int64_t lr = 0;
  std::int64_t heavy_weight = 0;  // n^5
  std::int64_t beta = 0;
  std::int64_t beta_prime = 0;
  std::int64_t budget = 0;
  int path_vertices = 0;  // path occupies vertices 0..path_vertices-1
  int root = 0;

  int v_vertex(int x) const { return path_vertices + x; }
  /// side 0 hangs below the smaller endpoint, side 1 below the larger.
  int e_vertex(int e, int side) const {
    return path_vertices + source.n + 2 * e + side;
  }
};

/// Builds the reduction tree. `lr_override` replaces L_r = n^7; the hardness
/// argument needs the full value, smaller ones only serve structural tests.
/// Rejects n < 2, |E| = 0, self-loops and duplicate edges (InvalidArgument),
/// and instances above 2^24 vertices or overflowing 64-bit costs (TooLarge).
ReductionOutput build_vc_reduction(const VertexCoverInput& vc,
                                   std::optional<std::int64_t> lr_override = {});

/// Evict the cover's darkgray tokens, pull one token per edge colour out onto
/// the path, slide the reds to the right end, push the edge tokens back and
/// restore the darkgray tokens. Throws NotACover, or InvalidArgument when
/// |cover| != q or a vertex is out of range.
SwapSequence vc_to_sequence(const ReductionOutput& red,
                            const std::vector<int>& cover);

/// Source vertices whose darkgray token moved at least once. Throws
/// NotSorted when `seq` misses the goal and OverBudget when its cost
/// exceeds `budget` (the reduction budget unless overridden).
std::vector<int> sequence_to_cover(const ReductionOutput& red,
                                   std::span<const Edge> seq,
                                   std::optional<Cost> budget = {});

}  // namespace tswap
