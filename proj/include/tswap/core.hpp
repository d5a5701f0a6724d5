#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tswap/error.hpp"
#include "tswap/tree.hpp"

namespace tswap {

using Token = int;
using Colour = int;
using Cost = std::int64_t;

/// placement[v] is the token on vertex v. Token t's home is vertex t.
using Configuration = std::vector<Token>;

/// Ordered swaps; each swap exchanges the tokens on its two endpoints.
using SwapSequence = std::vector<Edge>;

struct Colouring {
  std::vector<Colour> vertex_colour;
  /// Colour of the token that starts on each vertex (indexed by vertex).
  std::vector<Colour> token_colour;
};

/// Colour -> non-negative weight. A swap of colours c and c' costs
/// weight(c) + weight(c').
struct WeightTable {
  std::map<Colour, Cost> weight;

  Cost of(Colour c) const;
};

/// Tree plus start configuration, optionally coloured and weighted.
///
/// Without a colouring every token is distinct and must reach its own home.
/// Without a weight table the cost of a sequence is its length (the
/// "every weight is one half" convention), so costs and lengths coincide.
struct Instance {
  Tree tree;
  Configuration start;
  std::optional<Colouring> colouring;
  std::optional<WeightTable> weights;
};

/// Checks every Instance invariant; throws InvalidInstance or
/// ColourCountMismatch.
void validate_instance(const Instance& inst);

Instance make_instance(Tree tree, Configuration start,
                       std::optional<Colouring> colouring = std::nullopt,
                       std::optional<WeightTable> weights = std::nullopt);

Configuration identity_configuration(int n);
bool is_permutation(std::span<const Token> placement);

/// True when every token has its own colour, i.e. the target of each token
/// is forced.
bool has_distinct_colours(const Instance& inst);

/// dest[v] = target vertex of the token that starts on v. Only defined for
/// distinct-colour instances; throws ColouredInstance otherwise.
std::vector<Vertex> destinations(const Instance& inst);

/// Weight of the token that starts on each vertex (1 without a table).
std::vector<Cost> start_weights(const Instance& inst);

/// Colour of each token id (token ids are the values of `start`).
std::vector<Colour> token_colours_by_id(const Instance& inst);

/// Whether `placement` satisfies the instance goal: sorted for plain
/// instances, colour-matching for coloured ones.
bool is_goal(const Instance& inst, std::span<const Token> placement);

struct ApplyResult {
  Configuration final_placement;
  std::int64_t length = 0;
  Cost cost = 0;
};

/// Replays `seq` from the start configuration. Throws NonEdgeSwap.
ApplyResult apply_sequence(const Instance& inst, std::span<const Edge> seq);

/// Swap cost for the given token ids under the instance weights.
Cost swap_cost(const Instance& inst, std::span<const Colour> colour_of_token,
               Token a, Token b);

struct StarCycleInfo {
  /// Index into `cycles` of the cycle containing the center vertex.
  int unlocked = -1;
  /// Non-trivial cycles not containing the center (l).
  int locked_nontrivial = 0;
  int unhappy_leaves = 0;
  int happy_leaves = 0;
};

struct CycleDecomposition {
  /// Each cycle lists start vertices v, dest(v), dest(dest(v)), ...
  std::vector<std::vector<Vertex>> cycles;
  int count = 0;
  int nontrivial = 0;
  std::optional<StarCycleInfo> star;
};

CycleDecomposition cycle_decomposition(const Instance& inst);

struct DistanceMetrics {
  std::int64_t total = 0;  // D
  Cost weighted = 0;       // D_w
};

/// D = sum of token distances; D_w weighs each token by its colour weight
/// (unit weights without a table). Distinct-colour instances only.
DistanceMetrics distance_metrics(const Instance& inst);

/// Star-only alternate form of D_w: sum over unhappy leaves of the weights of
/// the start token and of the token that finishes there.
Cost star_alternate_weighted_distance(const Instance& inst);

}  // namespace tswap
