#include "tswap/exact_special.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "swap_state.hpp"

namespace tswap {

using detail::SwapState;

namespace {

std::vector<Vertex> require_path(const Tree& tree) {
  auto order = path_order(tree);
  if (!order) throw Error(ErrorCode::NotAPath, "tree is not a path");
  return *order;
}

Vertex require_star(const Tree& tree) {
  auto center = star_center(tree);
  if (!center) throw Error(ErrorCode::NotAStar, "tree is not a star");
  return *center;
}

// Bubble sort along the path: every inverted pair is swapped exactly once.
SwapSequence sort_along_path(const std::vector<Vertex>& order,
                             const std::vector<Vertex>& dest) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> key(n);
  for (int i = 0; i < n; ++i) key[i] = pos[dest[order[i]]];
  SwapSequence seq;
  for (int end = n - 1; end > 0; --end) {
    bool changed = false;
    for (int i = 0; i < end; ++i) {
      if (key[i] > key[i + 1]) {
        std::swap(key[i], key[i + 1]);
        seq.push_back({order[i], order[i + 1]});
        changed = true;
      }
    }
    if (!changed) break;
  }
  return seq;
}

}  // namespace

SwapSequence solve_path(const Instance& inst) {
  const auto order = require_path(inst.tree);
  return sort_along_path(order, destinations(inst));
}

std::int64_t path_inversions(const Instance& inst) {
  const auto order = require_path(inst.tree);
  const auto dest = destinations(inst);
  const int n = inst.tree.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::int64_t inv = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pos[dest[order[i]]] > pos[dest[order[j]]]) ++inv;
    }
  }
  return inv;
}

SwapSequence solve_weighted_coloured_path(const Instance& inst) {
  const auto order = require_path(inst.tree);
  if (!inst.colouring) return sort_along_path(order, destinations(inst));
  const auto& col = *inst.colouring;
  std::map<Colour, std::vector<Vertex>> vertices_of, starts_of;
  for (Vertex v : order) {
    vertices_of[col.vertex_colour[v]].push_back(v);
    starts_of[col.token_colour[v]].push_back(v);
  }
  std::vector<Vertex> dest(inst.tree.size());
  for (const auto& [c, starts] : starts_of) {
    const auto it = vertices_of.find(c);
    if (it == vertices_of.end() || it->second.size() != starts.size()) {
      throw Error(ErrorCode::ColourCountMismatch,
                  "colour " + std::to_string(c) + " is unbalanced");
    }
    for (std::size_t i = 0; i < starts.size(); ++i) {
      dest[starts[i]] = it->second[i];
    }
  }
  return sort_along_path(order, dest);
}

// ---------------------------------------------------------------------------

SwapSequence solve_star(const Instance& inst) {
  const Vertex center = require_star(inst.tree);
  SwapState s(inst.tree, destinations(inst));
  detail::star_sort(s, center);
  return s.take_swaps();
}

Cost star_weight_formula(const StarWeightSummary& s) {
  const Cost l = s.locked_cycles;
  Cost extra = s.min_active * (l - 1);
  if (s.min_happy) extra = std::min(extra, *s.min_happy * (l + 1));
  return s.weighted_distance + 2 * s.min_unlocked + 2 * extra;
}

namespace {

WeightedStarSolution weighted_star_core(const Tree& tree, Vertex center,
                                        const std::vector<Vertex>& dest,
                                        const std::vector<Cost>& start_w) {
  const int n = tree.size();
  const auto w = detail::weights_by_home(dest, start_w);
  StarWeightSummary sum;

  // cycles over start vertices
  std::vector<int> cycle_of(n, -1);
  std::vector<std::vector<Vertex>> cycles;
  for (int v = 0; v < n; ++v) {
    if (cycle_of[v] >= 0) continue;
    std::vector<Vertex> c;
    for (Vertex u = v; cycle_of[u] < 0; u = dest[u]) {
      cycle_of[u] = static_cast<int>(cycles.size());
      c.push_back(u);
    }
    cycles.push_back(std::move(c));
  }
  const int unlocked = cycle_of[center];

  // tokens are named by home vertex: the token starting on v is dest[v]
  auto argmin = [&](auto&& members) {
    Vertex best = -1;
    for (Vertex v : members) {
      const Vertex t = dest[v];
      if (best < 0 || w[t] < w[best] || (w[t] == w[best] && t < best)) best = t;
    }
    return best;
  };
  const Vertex x = argmin(cycles[unlocked]);
  std::vector<Vertex> active{center}, happy;
  for (int v = 0; v < n; ++v) {
    if (v == center) continue;
    (dest[v] == v ? happy : active).push_back(v);
  }
  const Vertex a = argmin(active);
  const Vertex h = happy.empty() ? -1 : argmin(happy);

  std::vector<int> locked;
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    if (i != unlocked && cycles[i].size() > 1) locked.push_back(i);
  }
  for (int v = 0; v < n; ++v) {
    sum.weighted_distance += start_w[v] * tree.distance(v, dest[v]);
  }
  sum.min_unlocked = w[x];
  sum.min_active = w[a];
  if (h >= 0) sum.min_happy = w[h];
  sum.locked_cycles = static_cast<int>(locked.size());

  const Cost l = sum.locked_cycles;
  const Cost dw = sum.weighted_distance;
  Cost best = dw + 2 * w[x] * l;
  sum.strategy = 1;
  if (w[a] < w[x]) {
    const Cost c2 = dw + 2 * w[x] + 2 * w[a] * (l - 1);
    if (c2 < best) {
      best = c2;
      sum.strategy = 2;
    }
  }
  if (h >= 0) {
    const Cost c3 = dw + 2 * w[x] + 2 * w[h] * (l + 1);
    if (c3 < best) {
      best = c3;
      sum.strategy = 3;
    }
  }

  SwapState s(tree, dest, start_w.empty() ? std::vector<Cost>{} : w);
  // Home center tokens until `carrier` is on the center.
  auto cycle_until = [&](Vertex carrier) {
    while (s.at(center) != carrier) s.swap(center, s.at(center));
  };
  // Carrier on the center enters the cycle at its smallest vertex, the cycle
  // resolves through the center and the carrier comes back.
  auto unlock = [&](int ci, Vertex carrier) {
    s.swap(center, cycles[ci].front());
    cycle_until(carrier);
  };
  auto finish = [&] {
    while (s.at(center) != center) s.swap(center, s.at(center));
  };

  cycle_until(x);
  switch (sum.strategy) {
    case 1:
      for (int ci : locked) unlock(ci, x);
      break;
    case 2: {
      const int home_cycle = cycle_of[s.where(a)];
      s.swap(center, s.where(a));
      for (int ci : locked) {
        if (ci != home_cycle) unlock(ci, a);
      }
      cycle_until(x);
      break;
    }
    case 3: {
      const Vertex leaf = s.where(h);
      s.swap(center, leaf);
      for (int ci : locked) unlock(ci, h);
      s.swap(center, leaf);
      break;
    }
  }
  finish();
  sum.cost = s.cost();
  return {s.take_swaps(), sum};
}

}  // namespace

WeightedStarSolution solve_weighted_star(const Instance& inst) {
  const Vertex center = require_star(inst.tree);
  return weighted_star_core(inst.tree, center, destinations(inst),
                            start_weights(inst));
}

ColourMultigraph colour_multigraph(const Instance& inst) {
  const Vertex center = require_star(inst.tree);
  const int n = inst.tree.size();
  ColourMultigraph g;
  std::vector<Colour> vc(n), tc(n);
  if (inst.colouring) {
    vc = inst.colouring->vertex_colour;
    tc = inst.colouring->token_colour;
  } else {
    for (int v = 0; v < n; ++v) {
      vc[v] = v;
      tc[v] = inst.start[v];
    }
  }
  for (int v = 0; v < n; ++v) {
    g.arcs.push_back({vc[v], tc[v], v});
    if (v != center && vc[v] == tc[v]) ++g.leaf_loops;
  }
  g.colours = vc;
  std::sort(g.colours.begin(), g.colours.end());
  g.colours.erase(std::unique(g.colours.begin(), g.colours.end()),
                  g.colours.end());

  const int k = static_cast<int>(g.colours.size());
  auto idx = [&](Colour c) {
    return static_cast<int>(
        std::lower_bound(g.colours.begin(), g.colours.end(), c) -
        g.colours.begin());
  };
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& arc : g.arcs) parent[find(idx(arc.from))] = find(idx(arc.to));
  std::vector<int> size(k, 0);
  for (int i = 0; i < k; ++i) ++size[find(i)];
  const int center_root = find(idx(vc[center]));
  for (int i = 0; i < k; ++i) {
    if (find(i) == i && i != center_root && size[i] > 1) ++g.kappa;
  }
  return g;
}

namespace {

// Leaf loops become happy leaves; every other component of the multigraph is
// walked by an Eulerian circuit and turned into one permutation cycle.
std::vector<Vertex> coloured_star_assignment(const Instance& inst,
                                             const ColourMultigraph& g,
                                             Vertex center) {
  const int n = inst.tree.size();
  std::vector<Vertex> assign(n, -1);
  const int k = static_cast<int>(g.colours.size());
  auto idx = [&](Colour c) {
    return static_cast<int>(
        std::lower_bound(g.colours.begin(), g.colours.end(), c) -
        g.colours.begin());
  };
  std::vector<std::vector<int>> out(k);  // arc indices, by vertex order
  for (int i = 0; i < n; ++i) {
    const auto& arc = g.arcs[i];
    if (arc.vertex != center && arc.from == arc.to) {
      assign[arc.vertex] = arc.vertex;
    } else {
      out[idx(arc.from)].push_back(i);
    }
  }
  std::vector<std::size_t> next(k, 0);
  for (int start = 0; start < k; ++start) {
    if (next[start] == out[start].size()) continue;
    // Hierholzer
    std::vector<std::pair<int, int>> stack{{start, -1}};
    std::vector<int> circuit;
    while (!stack.empty()) {
      auto [node, via] = stack.back();
      if (next[node] < out[node].size()) {
        const int a = out[node][next[node]++];
        stack.emplace_back(idx(g.arcs[a].to), a);
      } else {
        stack.pop_back();
        if (via >= 0) circuit.push_back(via);
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    const std::size_t b = circuit.size();
    for (std::size_t i = 0; i < b; ++i) {
      assign[g.arcs[circuit[i]].vertex] = g.arcs[circuit[(i + 1) % b]].vertex;
    }
  }
  return assign;
}

}  // namespace

ColouredStarSolution solve_coloured_star(const Instance& inst) {
  const Vertex center = require_star(inst.tree);
  validate_instance(inst);
  ColouredStarSolution sol;
  sol.graph = colour_multigraph(inst);
  sol.assignment = coloured_star_assignment(inst, sol.graph, center);
  SwapState s(inst.tree, sol.assignment);
  detail::star_sort(s, center);
  sol.swaps = s.take_swaps();
  return sol;
}

SwapSequence solve_weighted_coloured_star(const Instance& inst) {
  const Vertex center = require_star(inst.tree);
  validate_instance(inst);
  const auto g = colour_multigraph(inst);
  const auto assign = coloured_star_assignment(inst, g, center);
  return weighted_star_core(inst.tree, center, assign, start_weights(inst))
      .swaps;
}

// ---------------------------------------------------------------------------

std::optional<BroomLayout> broom_layout(const Tree& tree) {
  if (tree.size() == 0 || !is_broom(tree)) return std::nullopt;
  BroomLayout layout;
  if (is_path(tree)) {
    layout.path = *path_order(tree);
    return layout;
  }
  Vertex center = 0;
  while (tree.degree(center) < 3) ++center;
  Vertex handle = -1;
  for (Vertex w : tree.neighbors(center)) {
    if (tree.is_leaf(w)) {
      layout.leaves.push_back(w);
    } else {
      handle = w;
    }
  }
  layout.path.push_back(center);
  for (Vertex prev = center, cur = handle; cur >= 0;) {
    layout.path.push_back(cur);
    Vertex nxt = -1;
    for (Vertex w : tree.neighbors(cur)) {
      if (w != prev) nxt = w;
    }
    prev = cur;
    cur = nxt;
  }
  return layout;
}

namespace {

struct BroomGeometry {
  BroomLayout layout;
  std::vector<int> path_pos;  // index along the path, -1 on star leaves

  bool star_vertex(Vertex v) const { return path_pos[v] < 0; }
};

BroomGeometry broom_geometry(const Tree& tree) {
  auto layout = broom_layout(tree);
  if (!layout) throw Error(ErrorCode::NotABroom, "tree is not a broom");
  BroomGeometry g{*layout, std::vector<int>(tree.size(), -1)};
  for (int i = 0; i < static_cast<int>(g.layout.path.size()); ++i) {
    g.path_pos[g.layout.path[i]] = i;
  }
  return g;
}

// n_S, l_S and S_U of the start placement.
void star_only_cycles(const BroomGeometry& g, const std::vector<Vertex>& dest,
                      BroomTrace& t) {
  const int n = static_cast<int>(dest.size());
  std::vector<char> seen(n, 0);
  int unhomed_star = 0;
  for (int v = 0; v < n; ++v) {
    if (g.star_vertex(dest[v]) && dest[v] != v) ++unhomed_star;
  }
  for (int v = 0; v < n; ++v) {
    if (seen[v] || dest[v] == v) continue;
    bool star_only = true;
    int len = 0;
    for (Vertex u = v; !seen[u]; u = dest[u]) {
      seen[u] = 1;
      ++len;
      if (!g.star_vertex(u)) star_only = false;
    }
    if (star_only) {
      t.star_cycle_tokens += len;
      ++t.star_cycles;
    }
  }
  t.unhomed_star_tokens = unhomed_star - t.star_cycle_tokens;
}

std::vector<BroomTrace::PathToken> path_token_stats(
    const BroomGeometry& g, const std::vector<Vertex>& dest) {
  const int n = static_cast<int>(dest.size());
  const bool has_leaves = !g.layout.leaves.empty();
  std::vector<Vertex> start_of(n);
  for (int v = 0; v < n; ++v) start_of[dest[v]] = v;
  // tokens ordered by home: star tokens are all smaller than path tokens
  auto smaller = [&](Vertex t, Vertex p) {
    return g.star_vertex(t) || g.path_pos[t] < g.path_pos[p];
  };
  std::vector<BroomTrace::PathToken> out;
  for (Vertex p : g.layout.path) {
    BroomTrace::PathToken pt{p, has_leaves ? g.path_pos[p] + 1 : kNoStarLeaf, 0};
    const Vertex at = start_of[p];
    const int from = g.star_vertex(at) ? 0 : g.path_pos[at] + 1;
    for (int i = from; i < static_cast<int>(g.layout.path.size()); ++i) {
      if (smaller(dest[g.layout.path[i]], p)) ++pt.smaller_to_right;
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace

BroomSolution solve_broom(const Instance& inst) {
  const BroomGeometry g = broom_geometry(inst.tree);
  const auto dest = destinations(inst);
  const Vertex center = g.layout.path.front();
  BroomSolution sol;
  BroomTrace& t = sol.trace;
  star_only_cycles(g, dest, t);
  t.path_tokens = path_token_stats(g, dest);

  SwapState s(inst.tree, dest);
  const auto& path = g.layout.path;
  while (true) {
    Vertex pmax = -1;
    for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
      if (!s.home(path[i])) {
        pmax = path[i];
        break;
      }
    }
    if (pmax < 0) break;
    if (g.star_vertex(s.where(pmax))) {
      // centered star chain t_1..t_m ending at pmax
      std::vector<Vertex> chain;
      bool found = false;
      for (Vertex tok = s.at(center); g.star_vertex(tok);) {
        chain.push_back(tok);
        const Vertex next = s.at(tok);
        if (next == pmax) {
          found = true;
          break;
        }
        tok = next;
      }
      if (found) {
        for (Vertex tok : chain) s.swap(center, tok);
        ++t.lucky;
      }
    }
    s.send_home(pmax);
  }
  t.phase_one_swaps = static_cast<int>(s.swaps().size());

  int unsorted = 0;
  for (int v = 0; v < inst.tree.size(); ++v) {
    if (!s.home(v)) ++unsorted;
  }
  if (unsorted != t.star_cycle_tokens) {
    throw Error(ErrorCode::TraceMismatch,
                "phase one disturbed a star-only cycle or left a token unhomed");
  }
  detail::star_sort(s, center);
  t.star_phase_swaps = static_cast<int>(s.swaps().size()) - t.phase_one_swaps;
  sol.swaps = s.take_swaps();
  return sol;
}

std::int64_t broom_count_formula(const BroomTrace& trace, const Instance& inst) {
  const BroomGeometry g = broom_geometry(inst.tree);
  const auto dest = destinations(inst);
  BroomTrace fresh;
  star_only_cycles(g, dest, fresh);
  std::int64_t w = 0;
  for (const auto& pt : path_token_stats(g, dest)) {
    w += std::min(pt.to_home_from_leaf, pt.smaller_to_right);
  }
  w += fresh.unhomed_star_tokens - trace.lucky;
  if (w != trace.phase_one_swaps) {
    throw Error(ErrorCode::TraceMismatch,
                "formula gives " + std::to_string(w) + " phase-one swaps, trace has " +
                    std::to_string(trace.phase_one_swaps));
  }
  const std::int64_t total = w + fresh.star_cycle_tokens + fresh.star_cycles;
  if (total != trace.phase_one_swaps + trace.star_phase_swaps) {
    throw Error(ErrorCode::TraceMismatch, "star phase count disagrees with n_S + l_S");
  }
  return w;
}

}  // namespace tswap
