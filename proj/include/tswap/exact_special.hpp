#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "tswap/core.hpp"

namespace tswap {

// ---------------------------------------------------------------------------
// Paths

/// Adjacent-transposition sort; length equals the inversion count.
SwapSequence solve_path(const Instance& inst);

/// Inversions of the start placement read along the path.
std::int64_t path_inversions(const Instance& inst);

/// The i-th token of each colour along the path goes to the i-th vertex of
/// that colour; the resulting inversions are then sorted out, each inverted
/// pair swapping exactly once.
SwapSequence solve_weighted_coloured_path(const Instance& inst);

// ---------------------------------------------------------------------------
// Stars

/// Optimal plain star sort, n_U + l swaps.
SwapSequence solve_star(const Instance& inst);

/// Quantities that fix the optimum of a weighted star.
struct StarWeightSummary {
  Cost weighted_distance = 0;            // D_w
  Cost min_unlocked = 0;                 // w(x), cheapest token of the unlocked cycle
  Cost min_active = 0;                   // w(a), cheapest token off a happy leaf
  std::optional<Cost> min_happy;         // w(h), absent without happy leaves
  int locked_cycles = 0;                 // l
  int strategy = 1;                      // 1, 2 or 3
  Cost cost = 0;                         // cost of the emitted sequence
};

/// D_w + 2 w(x) + 2 min{w(a)(l-1), w(h)(l+1)}, recomputed from the summary
/// fields alone.
Cost star_weight_formula(const StarWeightSummary& s);

struct WeightedStarSolution {
  SwapSequence swaps;
  StarWeightSummary summary;
};

/// Cheapest of the three unlocking strategies on a distinct-colour star.
WeightedStarSolution solve_weighted_star(const Instance& inst);

/// Auxiliary multigraph of a coloured star: one node per colour, one arc per
/// star vertex from the vertex colour to its start token's colour.
struct ColourMultigraph {
  struct Arc {
    Colour from;
    Colour to;
    Vertex vertex;
  };
  std::vector<Colour> colours;
  std::vector<Arc> arcs;
  int leaf_loops = 0;  // lambda
  int kappa = 0;       // non-trivial components avoiding the center arc
};

ColourMultigraph colour_multigraph(const Instance& inst);

struct ColouredStarSolution {
  /// assignment[v] = target vertex of the token starting on v.
  std::vector<Vertex> assignment;
  SwapSequence swaps;
  ColourMultigraph graph;
};

/// Token-vertex assignment from Eulerian tours of the colour multigraph,
/// then the plain star sort; (n-1-lambda) + kappa swaps.
ColouredStarSolution solve_coloured_star(const Instance& inst);

/// Colour assignment ignoring weights, then the weighted star solver.
SwapSequence solve_weighted_coloured_star(const Instance& inst);

// ---------------------------------------------------------------------------
// Brooms

/// Star leaves hang off `path[0]` (the center); `path` runs outward from the
/// center. A path is laid out with no star leaves, starting at its
/// lower-indexed endpoint.
struct BroomLayout {
  std::vector<Vertex> leaves;
  std::vector<Vertex> path;
};

std::optional<BroomLayout> broom_layout(const Tree& tree);

inline constexpr int kNoStarLeaf = std::numeric_limits<int>::max();

struct BroomTrace {
  struct PathToken {
    Vertex home;
    int to_home_from_leaf;  // d(p); kNoStarLeaf when the broom has no leaves
    int smaller_to_right;   // r(p)
  };
  std::vector<PathToken> path_tokens;
  int unhomed_star_tokens = 0;  // S_U, star tokens outside star-only cycles
  int lucky = 0;                // L, executions of the chain step
  int phase_one_swaps = 0;      // W
  int star_cycle_tokens = 0;    // n_S
  int star_cycles = 0;          // l_S
  int star_phase_swaps = 0;
};

struct BroomSolution {
  SwapSequence swaps;
  BroomTrace trace;
};

/// Homes path tokens largest first, resolving centered star chains, then
/// sorts the residual star.
BroomSolution solve_broom(const Instance& inst);

/// Recomputes W = sum min{d(p), r(p)} + S_U - L from the start placement and
/// the traced L. Throws TraceMismatch when it disagrees with the trace.
std::int64_t broom_count_formula(const BroomTrace& trace, const Instance& inst);

}  // namespace tswap
