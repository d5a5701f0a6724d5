#include "tswap/tree.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tswap/error.hpp"

namespace tswap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NonEdgeSwap: return "NonEdgeSwap";
    case ErrorCode::ColouredInstance: return "ColouredInstance";
    case ErrorCode::ColourCountMismatch: return "ColourCountMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotAStar: return "NotAStar";
    case ErrorCode::NotABroom: return "NotABroom";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::OddK: return "OddK";
    case ErrorCode::EvenB: return "EvenB";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::OverBudget: return "OverBudget";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

const char* to_string(TreeFamily family) {
  switch (family) {
    case TreeFamily::Path: return "path";
    case TreeFamily::Star: return "star";
    case TreeFamily::Broom: return "broom";
    case TreeFamily::General: return "general-tree";
  }
  return "unknown";
}

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::NotATree, "negative vertex count");
  if (n == 0) {
    if (!edges_.empty()) throw Error(ErrorCode::NotATree, "edges on empty tree");
    offsets_.assign(1, 0);
    return;
  }
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw Error(ErrorCode::NotATree,
                "expected " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(edges_.size()));
  }
  std::vector<int> deg(n, 0);
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::NotATree, "edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::NotATree, "self-loop");
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.assign(offsets_[n], 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + offsets_[v];
    auto last = adjacency_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw Error(ErrorCode::NotATree, "duplicate edge");
    }
  }

  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  depth_.assign(n, 0);
  tin_.assign(n, -1);
  tout_.assign(n, -1);
  // iterative DFS from 0
  std::vector<std::pair<Vertex, int>> stack{{0, offsets_[0]}};
  int clock = 0;
  tin_[0] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == offsets_[v + 1]) {
      tout_[v] = clock - 1;
      stack.pop_back();
      continue;
    }
    Vertex w = adjacency_[next++];
    if (w == parent_[v]) continue;
    if (tin_[w] != -1) throw Error(ErrorCode::NotATree, "cycle detected");
    parent_[w] = v;
    depth_[w] = depth_[v] + 1;
    tin_[w] = clock++;
    stack.emplace_back(w, offsets_[w]);
  }
  if (clock != n) throw Error(ErrorCode::NotATree, "graph is disconnected");

  for (int i = 0; i < n - 1; ++i) {
    const auto& e = edges_[i];
    parent_edge_[parent_[e.u] == e.v ? e.u : e.v] = i;
  }

  child_offsets_.assign(n + 1, 0);
  for (int v = 1; v < n; ++v) ++child_offsets_[parent_[v] + 1];
  for (int v = 0; v < n; ++v) child_offsets_[v + 1] += child_offsets_[v];
  children_.assign(std::max(n - 1, 0), 0);
  std::vector<int> cfill(child_offsets_.begin(), child_offsets_.end() - 1);
  std::vector<Vertex> by_tin(n);
  for (int v = 0; v < n; ++v) by_tin[tin_[v]] = v;
  for (Vertex v : by_tin) {
    if (parent_[v] >= 0) children_[cfill[parent_[v]]++] = v;
  }

  const int levels = std::max(1, static_cast<int>(std::bit_width(
                                     static_cast<unsigned>(n))));
  up_.assign(levels, std::vector<Vertex>(n));
  for (int v = 0; v < n; ++v) up_[0][v] = parent_[v] < 0 ? v : parent_[v];
  for (int k = 1; k < levels; ++k) {
    for (int v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
  }
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (int v = 0; v < n_; ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

bool Tree::has_edge(Vertex a, Vertex b) const noexcept {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  return parent_[a] == b || parent_[b] == a;
}

std::optional<int> Tree::edge_index(Vertex a, Vertex b) const noexcept {
  if (!has_edge(a, b)) return std::nullopt;
  return parent_edge_[parent_[a] == b ? a : b];
}

Vertex Tree::lca(Vertex a, Vertex b) const noexcept {
  if (depth_[a] < depth_[b]) std::swap(a, b);
  int diff = depth_[a] - depth_[b];
  for (int k = 0; diff > 0; ++k, diff >>= 1) {
    if (diff & 1) a = up_[k][a];
  }
  if (a == b) return a;
  for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
    if (up_[k][a] != up_[k][b]) {
      a = up_[k][a];
      b = up_[k][b];
    }
  }
  return parent_[a];
}

int Tree::distance(Vertex a, Vertex b) const noexcept {
  return depth_[a] + depth_[b] - 2 * depth_[lca(a, b)];
}

Vertex Tree::next_hop(Vertex from, Vertex to) const noexcept {
  if (from == to) return from;
  if (!in_subtree(to, from)) return parent_[from];
  auto first = children_.begin() + child_offsets_[from];
  auto last = children_.begin() + child_offsets_[from + 1];
  // last child whose entry time does not exceed tin(to)
  auto it = std::upper_bound(first, last, tin_[to], [this](int t, Vertex c) {
    return t < tin_[c];
  });
  return *std::prev(it);
}

std::vector<Vertex> Tree::path(Vertex from, Vertex to) const {
  std::vector<Vertex> out{from};
  while (from != to) {
    from = next_hop(from, to);
    out.push_back(from);
  }
  return out;
}

bool is_path(const Tree& tree) {
  for (int v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) > 2) return false;
  }
  return true;
}

std::optional<Vertex> star_center(const Tree& tree) {
  const int n = tree.size();
  if (n == 0) return std::nullopt;
  if (n <= 2) return Vertex{0};
  std::optional<Vertex> center;
  for (int v = 0; v < n; ++v) {
    if (tree.degree(v) > 1) {
      if (center) return std::nullopt;
      center = v;
    }
  }
  return center;
}

bool is_star(const Tree& tree) { return star_center(tree).has_value(); }

bool is_broom(const Tree& tree) {
  if (is_path(tree)) return true;
  // exactly one vertex of degree >= 3, and at most one of its neighbours is
  // not a leaf (that neighbour starts the handle)
  Vertex center = -1;
  for (int v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) >= 3) {
      if (center >= 0) return false;
      center = v;
    }
  }
  int inner = 0;
  for (Vertex w : tree.neighbors(center)) {
    if (!tree.is_leaf(w)) ++inner;
  }
  return inner <= 1;
}

TreeFamily classify(const Tree& tree) {
  if (is_path(tree)) return TreeFamily::Path;
  if (is_star(tree)) return TreeFamily::Star;
  if (is_broom(tree)) return TreeFamily::Broom;
  return TreeFamily::General;
}

TreeFamily validate_tree(int n, std::vector<Edge> edges) {
  return classify(Tree(n, std::move(edges)));
}

std::optional<std::vector<Vertex>> path_order(const Tree& tree) {
  if (!is_path(tree) || tree.size() == 0) return std::nullopt;
  Vertex start = 0;
  for (int v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  std::vector<Vertex> order{start};
  Vertex prev = -1;
  while (static_cast<int>(order.size()) < tree.size()) {
    Vertex cur = order.back();
    for (Vertex w : tree.neighbors(cur)) {
      if (w != prev) {
        prev = cur;
        order.push_back(w);
        break;
      }
    }
  }
  return order;
}

Tree remove_vertices(const Tree& tree, std::span<const Vertex> removed,
                     std::vector<Vertex>* old_to_new) {
  std::vector<Vertex> map(tree.size(), 0);
  for (Vertex v : removed) map[v] = -1;
  int next = 0;
  for (int v = 0; v < tree.size(); ++v) {
    if (map[v] == 0) map[v] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& e : tree.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) edges.push_back({map[e.u], map[e.v]});
  }
  if (old_to_new) *old_to_new = map;
  return Tree(next, std::move(edges));
}

}  // namespace tswap
