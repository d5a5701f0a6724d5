#include "tswap/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

namespace tswap {

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;

std::vector<Edge> allowed_edges(const Tree& tree,
                                std::span<const Vertex> forbidden) {
  std::vector<char> blocked(tree.size(), 0);
  for (Vertex v : forbidden) {
    if (v < 0 || v >= tree.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "forbidden vertex " + std::to_string(v) + " out of range");
    }
    blocked[v] = 1;
  }
  std::vector<Edge> out;
  for (const auto& e : tree.edges()) {
    if (!blocked[e.u] && !blocked[e.v]) out.push_back(e);
  }
  return out;
}

void check_cap(int n, int cap) {
  if (n > cap) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) +
                                         " vertices exceeds the search cap of " +
                                         std::to_string(cap));
  }
}

// Breadth-first search from `start` (tokens named by home vertex) to the
// identity over ranked placements.
SearchResult plain_search(const Tree& tree, std::vector<int> start,
                          std::span<const Edge> edges) {
  const int n = tree.size();
  SearchResult res;
  const std::uint64_t source = rank_permutation(start);
  if (source == 0) return res;
  const std::uint64_t states = factorial(n);
  // parent edge index per visited state
  std::vector<std::uint8_t> parent(states, kUnvisited);
  constexpr std::uint8_t kRoot = 0xFE;
  parent[source] = kRoot;
  std::vector<std::uint32_t> queue;
  queue.reserve(1024);
  queue.push_back(static_cast<std::uint32_t>(source));
  std::vector<int> perm(n);
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    unrank_permutation(queue[head], perm);
    ++res.states_expanded;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      std::swap(perm[e.u], perm[e.v]);
      const std::uint64_t r = rank_permutation(perm);
      std::swap(perm[e.u], perm[e.v]);
      if (parent[r] != kUnvisited) continue;
      parent[r] = static_cast<std::uint8_t>(i);
      if (r == 0) {
        found = true;
        break;
      }
      queue.push_back(static_cast<std::uint32_t>(r));
    }
  }
  if (!found) {
    throw Error(ErrorCode::Unreachable, "sorted configuration is unreachable");
  }
  std::iota(perm.begin(), perm.end(), 0);
  for (std::uint64_t r = 0; r != source;) {
    const auto& e = edges[parent[r]];
    res.swaps.push_back(e);
    std::swap(perm[e.u], perm[e.v]);
    r = rank_permutation(perm);
  }
  std::reverse(res.swaps.begin(), res.swaps.end());
  res.length = static_cast<std::int64_t>(res.swaps.size());
  res.cost = res.length;
  return res;
}

// Uniform-cost search over arrangements of token classes, 4 bits per vertex.
struct ClassSearch {
  int n;
  std::vector<int> start;      // class of the token on each vertex
  std::vector<int> goal;       // class each vertex must receive
  std::vector<Cost> weight;    // per class; empty for unit swap cost
  std::span<const Edge> edges;

  static std::uint64_t pack(std::span<const int> a) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      key |= static_cast<std::uint64_t>(a[i]) << (4 * i);
    }
    return key;
  }
  int cls(std::uint64_t key, int v) const {
    return static_cast<int>((key >> (4 * v)) & 0xF);
  }
  std::uint64_t swapped(std::uint64_t key, const Edge& e) const {
    const std::uint64_t a = (key >> (4 * e.u)) & 0xF;
    const std::uint64_t b = (key >> (4 * e.v)) & 0xF;
    key &= ~((std::uint64_t{0xF} << (4 * e.u)) | (std::uint64_t{0xF} << (4 * e.v)));
    return key | (b << (4 * e.u)) | (a << (4 * e.v));
  }

  SearchResult run() const {
    struct Node {
      Cost dist;
      std::uint64_t parent;
      int edge;
      bool done;
    };
    SearchResult res;
    const std::uint64_t source = pack(start);
    const std::uint64_t target = pack(goal);
    std::unordered_map<std::uint64_t, Node> nodes;
    using Item = std::pair<Cost, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    nodes[source] = {0, source, -1, false};
    pq.push({0, source});
    bool found = false;
    while (!pq.empty()) {
      auto [d, key] = pq.top();
      pq.pop();
      auto& node = nodes[key];
      if (node.done || d != node.dist) continue;
      node.done = true;
      ++res.states_expanded;
      if (key == target) {
        found = true;
        break;
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const int a = cls(key, e.u);
        const int b = cls(key, e.v);
        if (a == b) continue;  // swapping equal classes changes nothing
        const Cost step = weight.empty() ? 1 : weight[a] + weight[b];
        const std::uint64_t next = swapped(key, e);
        auto it = nodes.find(next);
        if (it == nodes.end()) {
          nodes.emplace(next, Node{d + step, key, static_cast<int>(i), false});
          pq.push({d + step, next});
        } else if (!it->second.done && d + step < it->second.dist) {
          it->second = Node{d + step, key, static_cast<int>(i), false};
          pq.push({d + step, next});
        }
      }
    }
    if (!found) {
      throw Error(ErrorCode::Unreachable, "goal configuration is unreachable");
    }
    res.cost = nodes[target].dist;
    for (std::uint64_t k = target; k != source;) {
      const auto& node = nodes[k];
      res.swaps.push_back(edges[node.edge]);
      k = node.parent;
    }
    std::reverse(res.swaps.begin(), res.swaps.end());
    res.length = static_cast<std::int64_t>(res.swaps.size());
    return res;
  }
};

}  // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank_permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t rank = 0;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int x = perm[i];
    const int smaller_used = std::popcount(seen & ((1u << x) - 1u));
    rank = rank * static_cast<std::uint64_t>(n - i) +
           static_cast<std::uint64_t>(x - smaller_used);
    seen |= 1u << x;
  }
  return rank;
}

void unrank_permutation(std::uint64_t rank, std::span<int> perm) {
  const int n = static_cast<int>(perm.size());
  int digits[32];
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::uint32_t free_mask = (n >= 32 ? 0xFFFFFFFFu : ((1u << n) - 1u));
  for (int i = 0; i < n; ++i) {
    std::uint32_t m = free_mask;
    for (int k = 0; k < digits[i]; ++k) m &= m - 1;  // drop lowest set bits
    const int x = std::countr_zero(m);
    perm[i] = x;
    free_mask &= ~(1u << x);
  }
}

SearchResult optimal(const Instance& inst, const SearchOptions& options) {
  const int n = inst.tree.size();
  const auto edges = allowed_edges(inst.tree, options.forbidden);
  const bool plain = has_distinct_colours(inst) && !inst.weights;
  if (plain) {
    check_cap(n, std::min(options.max_n, 12));
    return plain_search(inst.tree, destinations(inst), edges);
  }
  check_cap(n, std::min(options.max_n_weighted, 16));

  ClassSearch search{n, {}, {}, {}, edges};
  search.start.resize(n);
  search.goal.resize(n);
  if (has_distinct_colours(inst)) {
    // classes are home vertices
    const auto dest = destinations(inst);
    const auto w = start_weights(inst);
    search.weight.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      search.start[v] = dest[v];
      search.goal[v] = v;
      search.weight[dest[v]] = w[v];
    }
  } else {
    std::map<Colour, int> index;
    for (Colour c : inst.colouring->vertex_colour) index.emplace(c, 0);
    int next = 0;
    for (auto& [c, i] : index) i = next++;
    for (int v = 0; v < n; ++v) {
      search.start[v] = index.at(inst.colouring->token_colour[v]);
      search.goal[v] = index.at(inst.colouring->vertex_colour[v]);
    }
    if (inst.weights) {
      search.weight.assign(index.size(), 0);
      for (const auto& [c, i] : index) search.weight[i] = inst.weights->of(c);
    }
  }
  auto res = search.run();
  if (!inst.weights) res.cost = res.length;
  return res;
}

int DistanceTable::max() const {
  int best = 0;
  for (auto d : dist_) best = std::max<int>(best, d);
  return best;
}

DistanceTable all_distances(const Tree& tree, int max_n) {
  const int n = tree.size();
  check_cap(n, std::min(max_n, 12));
  const std::uint64_t states = factorial(n);
  std::vector<std::uint8_t> dist(states, kUnvisited);
  const auto edges = tree.edges();
  std::vector<std::uint32_t> frontier{0}, next;
  dist[0] = 0;
  std::vector<int> perm(n);
  for (std::uint8_t level = 0; !frontier.empty(); ++level) {
    next.clear();
    for (std::uint32_t r : frontier) {
      unrank_permutation(r, perm);
      for (const auto& e : edges) {
        std::swap(perm[e.u], perm[e.v]);
        const std::uint64_t s = rank_permutation(perm);
        std::swap(perm[e.u], perm[e.v]);
        if (dist[s] == kUnvisited) {
          dist[s] = static_cast<std::uint8_t>(level + 1);
          next.push_back(static_cast<std::uint32_t>(s));
        }
      }
    }
    std::swap(frontier, next);
  }
  return DistanceTable(n, std::move(dist));
}

int diameter(const Tree& tree, int max_n) {
  return all_distances(tree, max_n).max();
}

}  // namespace tswap
