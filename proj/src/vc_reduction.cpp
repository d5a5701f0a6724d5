#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tswap/constructions.hpp"

namespace tswap {

namespace {

constexpr std::int64_t kMaxVertices = std::int64_t{1} << 24;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::TooLarge, "reduction parameters overflow 64 bits");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::TooLarge, "reduction parameters overflow 64 bits");
  }
  return r;
}

std::int64_t checked_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

// Colours on the reduction tree, with swaps recorded as they happen.
struct ColourWalk {
  const Tree& tree;
  std::vector<Colour> colour;
  SwapSequence swaps;

  void swap(Vertex a, Vertex b) {
    std::swap(colour[a], colour[b]);
    swaps.push_back({a, b});
  }
  // Carry the token on `from` to `to`; tokens on the way shift back a step.
  void carry(Vertex from, Vertex to) {
    while (from != to) {
      const Vertex next = tree.next_hop(from, to);
      swap(from, next);
      from = next;
    }
  }
};

}  // namespace

ReductionOutput build_vc_reduction(const VertexCoverInput& vc,
                                   std::optional<std::int64_t> lr_override) {
  if (vc.n < 2) {
    throw Error(ErrorCode::InvalidArgument, "the source graph needs at least 2 vertices");
  }
  std::vector<Edge> edges;
  for (const auto& e : vc.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vc.n || e.v >= vc.n) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "self-loop in source graph");
    edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate edge in source graph");
  }
  if (edges.empty()) {
    throw Error(ErrorCode::InvalidArgument, "the source graph has no edges");
  }
  if (vc.q < 0 || vc.q > vc.n) {
    throw Error(ErrorCode::InvalidArgument, "q must lie in 0..n");
  }

  ReductionOutput out;
  out.source = {vc.n, edges, vc.q};
  const std::int64_t n = vc.n;
  const std::int64_t m = static_cast<std::int64_t>(edges.size());
  out.lr = lr_override ? *lr_override : checked_pow(n, 7);
  if (out.lr < 1) throw Error(ErrorCode::InvalidArgument, "L_r must be positive");
  out.heavy_weight = checked_pow(n, 5);
  out.beta = checked_mul(out.lr, checked_add(2 * m, out.lr - 1));
  out.beta_prime = m * m + 3 * m - 2 * n;
  out.budget = checked_add(
      checked_add(out.beta, 2 * out.beta_prime),
      checked_mul(2 * vc.q, checked_add(1, out.heavy_weight)));

  const std::int64_t path = checked_add(2 * out.lr, 2 * m - 1);
  const std::int64_t total = path + n + 2 * m;
  if (total > kMaxVertices) {
    throw Error(ErrorCode::TooLarge, std::to_string(total) +
                                         " reduction vertices exceeds the cap of " +
                                         std::to_string(kMaxVertices));
  }
  out.path_vertices = static_cast<int>(path);
  out.root = static_cast<int>(out.lr + m - 1);
  const int lr = static_cast<int>(out.lr);

  std::vector<Edge> tree_edges;
  for (int i = 0; i + 1 < out.path_vertices; ++i) tree_edges.push_back({i, i + 1});
  for (int x = 0; x < vc.n; ++x) tree_edges.push_back({out.root, out.v_vertex(x)});
  for (int e = 0; e < static_cast<int>(m); ++e) {
    tree_edges.push_back({out.v_vertex(edges[e].u), out.e_vertex(e, 0)});
    tree_edges.push_back({out.v_vertex(edges[e].v), out.e_vertex(e, 1)});
  }

  const int nv = static_cast<int>(total);
  Colouring col;
  col.token_colour.assign(nv, kBlue);
  col.vertex_colour.assign(nv, kBlue);
  for (int i = 0; i < lr; ++i) col.token_colour[i] = kRed;
  for (int e = 0; e < static_cast<int>(m); ++e) {
    const Colour c = kEdgeColourBase + e;
    col.token_colour[2 * lr + static_cast<int>(m) - 1 + e] = c;
    col.vertex_colour[e] = c;
    for (int side = 0; side < 2; ++side) {
      col.token_colour[out.e_vertex(e, side)] = c;
      col.vertex_colour[out.e_vertex(e, side)] = c;
    }
  }
  for (int i = out.path_vertices - lr; i < out.path_vertices; ++i) {
    col.vertex_colour[i] = kRed;
  }
  for (int x = 0; x < vc.n; ++x) {
    col.token_colour[out.v_vertex(x)] = kDarkgray;
    col.vertex_colour[out.v_vertex(x)] = kDarkgray;
  }
  WeightTable weights;
  weights.weight[kRed] = 1;
  weights.weight[kBlue] = 1;
  weights.weight[kDarkgray] = out.heavy_weight;
  for (int e = 0; e < static_cast<int>(m); ++e) weights.weight[kEdgeColourBase + e] = 1;

  out.instance = make_instance(Tree(nv, std::move(tree_edges)),
                               identity_configuration(nv), std::move(col),
                               std::move(weights));
  return out;
}

SwapSequence vc_to_sequence(const ReductionOutput& red,
                            const std::vector<int>& cover) {
  const auto& src = red.source;
  const Tree& tree = red.instance.tree;
  std::set<int> chosen;
  for (int x : cover) {
    if (x < 0 || x >= src.n) {
      throw Error(ErrorCode::InvalidArgument, "cover vertex " + std::to_string(x) +
                                                  " out of range");
    }
    chosen.insert(x);
  }
  if (chosen.size() != cover.size() || static_cast<int>(cover.size()) != src.q) {
    throw Error(ErrorCode::InvalidArgument,
                "cover must list exactly q = " + std::to_string(src.q) +
                    " distinct vertices");
  }
  const int m = static_cast<int>(src.edges.size());
  for (int e = 0; e < m; ++e) {
    if (!chosen.count(src.edges[e].u) && !chosen.count(src.edges[e].v)) {
      throw Error(ErrorCode::NotACover,
                  "edge (" + std::to_string(src.edges[e].u) + "," +
                      std::to_string(src.edges[e].v) + ") is uncovered");
    }
  }

  // E-children of each source vertex, by vertex index
  std::vector<std::vector<Vertex>> children(src.n);
  for (int e = 0; e < m; ++e) {
    children[src.edges[e].u].push_back(red.e_vertex(e, 0));
    children[src.edges[e].v].push_back(red.e_vertex(e, 1));
  }
  for (auto& c : children) std::sort(c.begin(), c.end());

  ColourWalk w{tree, red.instance.colouring->token_colour, {}};
  const Vertex root = red.root;
  const int lr = static_cast<int>(red.lr);

  // evict
  for (int x : chosen) {
    const Vertex vx = red.v_vertex(x);
    w.swap(vx, children[x].empty() ? root : children[x].front());
    if (children[x].empty()) w.swap(vx, root);
  }

  auto cover_end = [&](int e) {
    return chosen.count(src.edges[e].u) ? src.edges[e].u : src.edges[e].v;
  };
  // First vertex of {x} + E-children of x holding colour c.
  auto find_in_subtree = [&](int x, Colour c, Vertex skip) {
    const Vertex vx = red.v_vertex(x);
    if (vx != skip && w.colour[vx] == c) return vx;
    for (Vertex ch : children[x]) {
      if (ch != skip && w.colour[ch] == c) return ch;
    }
    throw std::logic_error("edge colour missing from cover subtree");
  };

  // edge tokens out onto path positions L_r .. root, in colour order
  for (int e = 0; e < m; ++e) {
    w.carry(find_in_subtree(cover_end(e), kEdgeColourBase + e, -1), lr + e);
  }

  // reds to the right end, rightmost first
  for (int i = lr - 1; i >= 0; --i) {
    w.carry(i, red.path_vertices - lr + i);
  }

  // Refill every cover subtree: E-children first, then the V-vertex, which
  // takes the colour of the E-child now holding its darkgray token.
  for (int x : chosen) {
    const Vertex vx = red.v_vertex(x);
    std::vector<std::pair<Vertex, Colour>> needs;
    for (std::size_t i = children[x].empty() ? 0 : 1; i < children[x].size(); ++i) {
      const Vertex ch = children[x][i];
      needs.push_back({ch, red.instance.colouring->vertex_colour[ch]});
    }
    if (!children[x].empty()) {
      needs.push_back({vx, red.instance.colouring->vertex_colour[children[x].front()]});
    }
    for (std::size_t i = 0; i < needs.size(); ++i) {
      const auto [target, c] = needs[i];
      if (w.colour[target] == c) continue;
      Vertex from = -1;
      // pending vertices of this subtree first, then the path right of root
      for (std::size_t j = i + 1; j < needs.size() && from < 0; ++j) {
        if (w.colour[needs[j].first] == c) from = needs[j].first;
      }
      for (Vertex p = root; from < 0 && p < root + m; ++p) {
        if (w.colour[p] == c) from = p;
      }
      if (from < 0) throw std::logic_error("edge colour missing while refilling");
      w.carry(from, target);
    }
  }

  // restore darkgray tokens
  for (int x : chosen) {
    if (!children[x].empty()) w.swap(red.v_vertex(x), children[x].front());
  }
  return std::move(w.swaps);
}

std::vector<int> sequence_to_cover(const ReductionOutput& red,
                                   std::span<const Edge> seq,
                                   std::optional<Cost> budget) {
  const auto result = apply_sequence(red.instance, seq);
  if (!is_goal(red.instance, result.final_placement)) {
    throw Error(ErrorCode::NotSorted, "sequence does not reach the target colouring");
  }
  const Cost limit = budget ? *budget : red.budget;
  if (result.cost > limit) {
    throw Error(ErrorCode::OverBudget, "sequence costs " + std::to_string(result.cost) +
                                           ", budget is " + std::to_string(limit));
  }
  // token ids equal start vertices, so darkgray token x starts on v_vertex(x)
  const int nv = red.instance.tree.size();
  Configuration at = red.instance.start;
  std::vector<char> moved(nv, 0);
  for (const auto& e : seq) {
    moved[at[e.u]] = moved[at[e.v]] = 1;
    std::swap(at[e.u], at[e.v]);
  }
  std::vector<int> cover;
  for (int x = 0; x < red.source.n; ++x) {
    if (moved[red.instance.start[red.v_vertex(x)]]) cover.push_back(x);
  }
  return cover;
}

}  // namespace tswap
