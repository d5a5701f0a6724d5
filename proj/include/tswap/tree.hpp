#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tswap {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class TreeFamily { Path, Star, Broom, General };

const char* to_string(TreeFamily family);

/// Host tree on vertices 0..n-1.
///
/// Construction validates the edge list (n-1 edges, no self-loops, no
/// duplicates, connected) and throws Error{NotATree} otherwise. The tree is
/// rooted internally at vertex 0; distance and next-hop queries run in
/// O(log n) so the same type serves 10-vertex oracle instances and the
/// multi-thousand-vertex reduction instances.
class Tree {
 public:
  Tree() = default;
  Tree(int n, std::vector<Edge> edges);

  int size() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool is_leaf(Vertex v) const noexcept { return degree(v) == 1; }
  std::vector<Vertex> leaves() const;

  bool has_edge(Vertex a, Vertex b) const noexcept;
  /// Index into edges() of the edge {a, b}, if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const noexcept;

  int distance(Vertex a, Vertex b) const noexcept;
  /// First vertex after `from` on the path to `to`; `from` itself if equal.
  Vertex next_hop(Vertex from, Vertex to) const noexcept;
  /// Vertices of the unique path, both endpoints included.
  std::vector<Vertex> path(Vertex from, Vertex to) const;
  /// Whether x lies on the path between a and b.
  bool on_path(Vertex x, Vertex a, Vertex b) const noexcept {
    return distance(a, x) + distance(x, b) == distance(a, b);
  }

 private:
  Vertex lca(Vertex a, Vertex b) const noexcept;
  bool in_subtree(Vertex v, Vertex root) const noexcept {
    return tin_[root] <= tin_[v] && tout_[v] <= tout_[root];
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Vertex> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
  std::vector<int> tin_;
  std::vector<int> tout_;
  // children of each vertex ordered by entry time, for next_hop lookups
  std::vector<int> child_offsets_;
  std::vector<Vertex> children_;
  std::vector<std::vector<Vertex>> up_;
};

bool is_path(const Tree& tree);
bool is_star(const Tree& tree);
bool is_broom(const Tree& tree);

/// Most specific family: path, then star, then broom, else general.
TreeFamily classify(const Tree& tree);

/// Builds the tree and classifies it; throws Error{NotATree} on bad input.
TreeFamily validate_tree(int n, std::vector<Edge> edges);

/// The unique vertex of degree > 1 of a star (vertex 0 when n <= 2).
std::optional<Vertex> star_center(const Tree& tree);

/// Path vertices in order, starting from the lower-indexed endpoint.
std::optional<std::vector<Vertex>> path_order(const Tree& tree);

/// A copy of `tree` with the vertices in `removed` deleted and the rest
/// renumbered in increasing order. `old_to_new` receives -1 for removed
/// vertices. The removed vertices must leave a connected remainder.
Tree remove_vertices(const Tree& tree, std::span<const Vertex> removed,
                     std::vector<Vertex>* old_to_new = nullptr);

}  // namespace tswap
