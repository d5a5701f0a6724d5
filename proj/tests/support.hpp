// Shared helpers for the test executables: tree builders, random instances
// and a slow reference search that shares no code with the library oracle.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "tswap/core.hpp"

namespace tswap::test {

using Rng = std::mt19937_64;

inline Tree path_tree(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Tree(n, std::move(e));
}

inline Tree star_tree(int n, Vertex center = 0) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) {
    if (v != center) e.push_back({center, v});
  }
  return Tree(n, std::move(e));
}

/// Center 0 with `leaves` star leaves 1..leaves, then a path of `tail`
/// vertices hanging off the center.
inline Tree broom_tree(int leaves, int tail) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  Vertex prev = 0;
  for (int j = 0; j < tail; ++j) {
    const Vertex v = leaves + 1 + j;
    e.push_back({prev, v});
    prev = v;
  }
  return Tree(leaves + tail + 1, std::move(e));
}

/// Random recursive tree with shuffled labels.
inline Tree random_tree(int n, Rng& rng) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    e.push_back({label[pick(rng)], label[i]});
  }
  std::shuffle(e.begin(), e.end(), rng);
  return Tree(n, std::move(e));
}

inline Configuration random_placement(int n, Rng& rng) {
  Configuration p = identity_configuration(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Distinct colours (colour = token id) with per-token weights.
inline Instance weighted_instance(Tree tree, Configuration start,
                                  const std::vector<Cost>& weight_of_token) {
  const int n = tree.size();
  Colouring col{identity_configuration(n), start};
  WeightTable w;
  for (int t = 0; t < n; ++t) w.weight[t] = weight_of_token[t];
  return make_instance(std::move(tree), std::move(start), std::move(col),
                       std::move(w));
}

/// Random colouring with `colours` colours, each used at least once when
/// n allows; the token colours are a random rearrangement of the vertex
/// colours.
inline Colouring random_colouring(int n, int colours, Rng& rng) {
  std::vector<Colour> vc(n);
  for (int v = 0; v < n; ++v) vc[v] = v < colours ? v : static_cast<int>(rng() % colours);
  std::shuffle(vc.begin(), vc.end(), rng);
  std::vector<Colour> tc = vc;
  std::shuffle(tc.begin(), tc.end(), rng);
  return {vc, tc};
}

/// Cheapest cost to reach the goal, by Dijkstra over vectors of token
/// colours. Tokens of one colour are interchangeable; plain instances use
/// token ids as colours.
inline Cost reference_optimum(const Instance& inst) {
  const int n = inst.tree.size();
  std::vector<Colour> state(n), goal(n);
  for (int v = 0; v < n; ++v) {
    state[v] = inst.colouring ? inst.colouring->token_colour[v] : inst.start[v];
    goal[v] = inst.colouring ? inst.colouring->vertex_colour[v] : v;
  }
  auto cost = [&](Colour a, Colour b) -> Cost {
    if (!inst.weights) return 1;
    return inst.weights->weight.at(a) + inst.weights->weight.at(b);
  };
  using Item = std::pair<Cost, std::vector<Colour>>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::map<std::vector<Colour>, Cost> best;
  best[state] = 0;
  queue.push({0, state});
  while (!queue.empty()) {
    auto [d, s] = queue.top();
    queue.pop();
    if (best[s] < d) continue;
    if (s == goal) return d;
    for (const Edge& e : inst.tree.edges()) {
      if (s[e.u] == s[e.v]) continue;
      auto t = s;
      std::swap(t[e.u], t[e.v]);
      const Cost nd = d + cost(s[e.u], s[e.v]);
      auto it = best.find(t);
      if (it == best.end() || nd < it->second) {
        best[t] = nd;
        queue.push({nd, std::move(t)});
      }
    }
  }
  return -1;
}

/// Calls fn on every permutation of 0..n-1 in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  Configuration p = identity_configuration(n);
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace tswap::test
