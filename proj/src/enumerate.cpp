#include "tswap/enumerate.hpp"

#include <algorithm>
#include <map>

namespace tswap {

namespace {

std::string encode(const Tree& tree, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : tree.neighbors(v)) {
    if (w != parent) kids.push_back(encode(tree, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ')';
  return s;
}

std::vector<Vertex> centers(const Tree& tree) {
  const int n = tree.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : tree.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_form(const Tree& tree) {
  if (tree.size() == 0) return "";
  std::string best;
  for (Vertex c : centers(tree)) {
    auto s = encode(tree, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Tree> enumerate_free_trees(int n) {
  if (n <= 0) return {};
  std::vector<Tree> level{Tree(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Tree> seen;
    for (const Tree& t : level) {
      for (Vertex v = 0; v < t.size(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.push_back({v, size - 1});
        Tree grown(size, std::move(edges));
        auto key = canonical_form(grown);
        seen.try_emplace(std::move(key), std::move(grown));
      }
    }
    level.clear();
    for (auto& [key, t] : seen) level.push_back(std::move(t));
  }
  return level;
}

}  // namespace tswap
