#include "tswap/core.hpp"

#include <algorithm>
#include <string>

namespace tswap {

Cost WeightTable::of(Colour c) const {
  auto it = weight.find(c);
  if (it == weight.end()) {
    throw Error(ErrorCode::InvalidInstance,
                "no weight for colour " + std::to_string(c));
  }
  return it->second;
}

Configuration identity_configuration(int n) {
  Configuration p(n);
  for (int v = 0; v < n; ++v) p[v] = v;
  return p;
}

bool is_permutation(std::span<const Token> placement) {
  const int n = static_cast<int>(placement.size());
  std::vector<char> seen(n, 0);
  for (Token t : placement) {
    if (t < 0 || t >= n || seen[t]) return false;
    seen[t] = 1;
  }
  return true;
}

void validate_instance(const Instance& inst) {
  const int n = inst.tree.size();
  if (static_cast<int>(inst.start.size()) != n) {
    throw Error(ErrorCode::InvalidInstance,
                "start configuration has " + std::to_string(inst.start.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  if (!is_permutation(inst.start)) {
    throw Error(ErrorCode::InvalidInstance,
                "start configuration is not a permutation of 0..n-1");
  }
  if (inst.weights && !inst.colouring) {
    throw Error(ErrorCode::InvalidInstance, "weights require a colouring");
  }
  if (inst.colouring) {
    const auto& col = *inst.colouring;
    if (static_cast<int>(col.vertex_colour.size()) != n ||
        static_cast<int>(col.token_colour.size()) != n) {
      throw Error(ErrorCode::InvalidInstance, "colour arrays must have length n");
    }
    auto a = col.vertex_colour;
    auto b = col.token_colour;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw Error(ErrorCode::ColourCountMismatch,
                  "vertex and token colour counts differ");
    }
  }
  if (inst.weights) {
    for (const auto& [c, w] : inst.weights->weight) {
      if (w < 0) {
        throw Error(ErrorCode::InvalidInstance,
                    "negative weight for colour " + std::to_string(c));
      }
    }
    for (Colour c : inst.colouring->token_colour) inst.weights->of(c);
  }
}

Instance make_instance(Tree tree, Configuration start,
                       std::optional<Colouring> colouring,
                       std::optional<WeightTable> weights) {
  Instance inst{std::move(tree), std::move(start), std::move(colouring),
                std::move(weights)};
  validate_instance(inst);
  return inst;
}

bool has_distinct_colours(const Instance& inst) {
  if (!inst.colouring) return true;
  auto c = inst.colouring->token_colour;
  std::sort(c.begin(), c.end());
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

std::vector<Vertex> destinations(const Instance& inst) {
  const int n = inst.tree.size();
  if (!inst.colouring) return inst.start;
  if (!has_distinct_colours(inst)) {
    throw Error(ErrorCode::ColouredInstance,
                "token targets are not forced when colours repeat");
  }
  std::map<Colour, Vertex> vertex_of;
  for (int v = 0; v < n; ++v) vertex_of[inst.colouring->vertex_colour[v]] = v;
  std::vector<Vertex> dest(n);
  for (int v = 0; v < n; ++v) {
    dest[v] = vertex_of.at(inst.colouring->token_colour[v]);
  }
  return dest;
}

std::vector<Cost> start_weights(const Instance& inst) {
  const int n = inst.tree.size();
  std::vector<Cost> w(n, 1);
  if (inst.weights) {
    for (int v = 0; v < n; ++v) {
      w[v] = inst.weights->of(inst.colouring->token_colour[v]);
    }
  }
  return w;
}

std::vector<Colour> token_colours_by_id(const Instance& inst) {
  const int n = inst.tree.size();
  std::vector<Colour> c(n);
  for (int v = 0; v < n; ++v) {
    c[inst.start[v]] = inst.colouring ? inst.colouring->token_colour[v]
                                      : inst.start[v];
  }
  return c;
}

bool is_goal(const Instance& inst, std::span<const Token> placement) {
  const int n = inst.tree.size();
  if (!inst.colouring) {
    for (int v = 0; v < n; ++v) {
      if (placement[v] != v) return false;
    }
    return true;
  }
  const auto colour = token_colours_by_id(inst);
  for (int v = 0; v < n; ++v) {
    if (colour[placement[v]] != inst.colouring->vertex_colour[v]) return false;
  }
  return true;
}

Cost swap_cost(const Instance& inst, std::span<const Colour> colour_of_token,
               Token a, Token b) {
  if (!inst.weights) return 1;
  return inst.weights->of(colour_of_token[a]) +
         inst.weights->of(colour_of_token[b]);
}

ApplyResult apply_sequence(const Instance& inst, std::span<const Edge> seq) {
  ApplyResult r{inst.start, 0, 0};
  const auto colour = token_colours_by_id(inst);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& e = seq[i];
    if (!inst.tree.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::NonEdgeSwap,
                  "swap " + std::to_string(i) + " (" + std::to_string(e.u) +
                      "," + std::to_string(e.v) + ") is not a tree edge");
    }
    auto& p = r.final_placement;
    r.cost += swap_cost(inst, colour, p[e.u], p[e.v]);
    std::swap(p[e.u], p[e.v]);
    ++r.length;
  }
  return r;
}

CycleDecomposition cycle_decomposition(const Instance& inst) {
  const auto dest = destinations(inst);
  const int n = inst.tree.size();
  CycleDecomposition out;
  std::vector<int> cycle_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (cycle_of[v] >= 0) continue;
    std::vector<Vertex> cycle;
    for (Vertex u = v; cycle_of[u] < 0; u = dest[u]) {
      cycle_of[u] = static_cast<int>(out.cycles.size());
      cycle.push_back(u);
    }
    if (cycle.size() > 1) ++out.nontrivial;
    out.cycles.push_back(std::move(cycle));
  }
  out.count = static_cast<int>(out.cycles.size());

  if (auto center = star_center(inst.tree)) {
    StarCycleInfo info;
    info.unlocked = cycle_of[*center];
    for (int i = 0; i < out.count; ++i) {
      if (i != info.unlocked && out.cycles[i].size() > 1) {
        ++info.locked_nontrivial;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (v == *center) continue;
      if (dest[v] == v) {
        ++info.happy_leaves;
      } else {
        ++info.unhappy_leaves;
      }
    }
    out.star = info;
  }
  return out;
}

DistanceMetrics distance_metrics(const Instance& inst) {
  const auto dest = destinations(inst);
  const auto w = start_weights(inst);
  DistanceMetrics m;
  for (int v = 0; v < inst.tree.size(); ++v) {
    const int d = inst.tree.distance(v, dest[v]);
    m.total += d;
    m.weighted += w[v] * d;
  }
  return m;
}

Cost star_alternate_weighted_distance(const Instance& inst) {
  const auto center = star_center(inst.tree);
  if (!center) throw Error(ErrorCode::NotAStar, "tree is not a star");
  const auto dest = destinations(inst);
  const auto w = start_weights(inst);
  const int n = inst.tree.size();
  std::vector<Vertex> finisher(n);  // start vertex of the token ending at v
  for (int v = 0; v < n; ++v) finisher[dest[v]] = v;
  Cost total = 0;
  for (int v = 0; v < n; ++v) {
    if (v == *center || dest[v] == v) continue;
    total += w[v] + w[finisher[v]];
  }
  return total;
}

}  // namespace tswap
