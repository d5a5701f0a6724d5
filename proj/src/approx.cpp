#include "tswap/approx.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "swap_state.hpp"

namespace tswap {

namespace {

// Edge indices whose status may have changed after touching vertex v.
template <class Fn>
void for_incident_edges(const Tree& tree, Vertex v, Fn&& fn) {
  for (Vertex w : tree.neighbors(v)) fn(*tree.edge_index(v, w));
}

}  // namespace

SwapSequence happy_swap_algorithm(const Instance& inst) {
  const Tree& tree = inst.tree;
  detail::SwapState s(tree, destinations(inst));
  const auto edges = tree.edges();
  const int m = static_cast<int>(edges.size());

  // 0 = nothing, 1 = happy swap, 2 = shove
  auto status = [&](int e) {
    const Vertex u = edges[e].u, v = edges[e].v;
    const Vertex a = s.at(u), b = s.at(v);
    const bool a_out = a != u && tree.next_hop(u, a) == v;
    const bool b_out = b != v && tree.next_hop(v, b) == u;
    if (a_out && b_out) return 1;
    if ((a_out && b == v) || (b_out && a == u)) return 2;
    return 0;
  };
  std::vector<int> kind(m, 0);
  std::set<int> happy, shove;
  auto refresh = [&](int e) {
    if (kind[e] == 1) happy.erase(e);
    if (kind[e] == 2) shove.erase(e);
    kind[e] = status(e);
    if (kind[e] == 1) happy.insert(e);
    if (kind[e] == 2) shove.insert(e);
  };
  for (int e = 0; e < m; ++e) refresh(e);

  while (!happy.empty() || !shove.empty()) {
    const int e = !happy.empty() ? *happy.begin() : *shove.begin();
    const Vertex u = edges[e].u, v = edges[e].v;
    s.swap(u, v);
    for_incident_edges(tree, u, refresh);
    for_incident_edges(tree, v, refresh);
  }
  if (!s.sorted()) {
    throw std::logic_error("happy swap algorithm stalled before sorting");
  }
  return s.take_swaps();
}

SwapSequence cycle_algorithm(const Instance& inst) {
  const Tree& tree = inst.tree;
  const auto dest = destinations(inst);
  const int n = tree.size();
  detail::SwapState s(tree, dest);

  // Cycles of the start placement as token lists t_1..t_q, t_1 smallest and
  // t_{i+1} sitting on the home of t_i.
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> cycles;
  for (Vertex t = 0; t < n; ++t) {
    if (seen[t] || s.home(t)) continue;
    std::vector<Vertex> cyc;
    for (Vertex x = t; !seen[x]; x = s.at(x)) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    cycles.push_back(std::move(cyc));
  }
  for (const auto& cyc : cycles) {
    const std::size_t q = cyc.size();
    for (std::size_t i = 0; i + 1 < q; ++i) {
      const Vertex t = cyc[i];
      const Vertex goal = s.where(cyc[i + 1]);
      while (tree.distance(s.where(t), goal) > 1) {
        const Vertex v = s.where(t);
        s.swap(v, tree.next_hop(v, goal));
      }
    }
    s.send_home(cyc.back());
  }
  if (!s.sorted()) {
    throw std::logic_error("cycle algorithm left tokens unhomed");
  }
  return s.take_swaps();
}

namespace {

class Vaughan {
 public:
  explicit Vaughan(const Instance& inst)
      : tree_(inst.tree), edges_(inst.tree.edges()) {
    const int n = tree_.size();
    at_ = destinations(inst);  // token ids are their original homes
    pos_.resize(n);
    target_.resize(n);
    owner_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      pos_[at_[v]] = v;
      target_[v] = v;
      owner_[v] = v;
    }
    kind_.assign(edges_.size(), 0);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) refresh(e);
  }

  SwapSequence run() {
    while (true) {
      if (!ops_[0].empty()) {
        const Edge e = edges_[*ops_[0].begin()];
        swap(e.u, e.v);
        prefix_.push_back(e);
        touch({e.u, e.v});
      } else if (!ops_[1].empty()) {
        const Edge e = edges_[*ops_[1].begin()];
        const Token x = owner_[e.u], y = owner_[e.v];
        retarget(x, e.v);
        retarget(y, e.u);
        suffix_.push_back(e);
        touch({e.u, e.v, pos_[x], pos_[y]});
      } else if (!ops_[2].empty()) {
        const int idx = *ops_[2].begin();
        Vertex u = edges_[idx].u, v = edges_[idx].v;
        if (!c_applies(u, v)) std::swap(u, v);
        const Token k = owner_[u];
        swap(u, v);
        prefix_.push_back({u, v});
        const Token j = at_[u];
        retarget(j, u);
        retarget(k, v);
        suffix_.push_back({u, v});
        touch({u, v, pos_[k]});
      } else {
        break;
      }
    }
    for (Vertex v = 0; v < tree_.size(); ++v) {
      if (target_[at_[v]] != v) {
        throw std::logic_error("no Vaughan operation applies to an unsorted placement");
      }
    }
    SwapSequence out = std::move(prefix_);
    out.insert(out.end(), suffix_.rbegin(), suffix_.rend());
    return out;
  }

 private:
  bool heads_over(Vertex from, Vertex to, Vertex via) const {
    return from != to && tree_.next_hop(from, to) == via;
  }
  // A: both tokens' first steps cross the edge.
  bool a_applies(Vertex u, Vertex v) const {
    return heads_over(u, target_[at_[u]], v) && heads_over(v, target_[at_[v]], u);
  }
  // B: the tokens bound for u and v both finish by crossing the edge.
  bool b_applies(Vertex u, Vertex v) const {
    return heads_over(u, pos_[owner_[u]], v) && heads_over(v, pos_[owner_[v]], u);
  }
  // C: the token on u heads through v, v holds its own token, and the token
  // bound for u arrives through v.
  bool c_applies(Vertex u, Vertex v) const {
    return heads_over(u, target_[at_[u]], v) && target_[at_[v]] == v &&
           heads_over(u, pos_[owner_[u]], v);
  }

  void refresh(int e) {
    const Vertex u = edges_[e].u, v = edges_[e].v;
    int k = 0;
    if (a_applies(u, v)) {
      k = 1;
    } else if (b_applies(u, v)) {
      k = 2;
    } else if (c_applies(u, v) || c_applies(v, u)) {
      k = 3;
    }
    if (k == kind_[e]) return;
    if (kind_[e]) ops_[kind_[e] - 1].erase(e);
    kind_[e] = k;
    if (k) ops_[k - 1].insert(e);
  }

  // Recompute edges around every vertex whose token, owner or target moved.
  void touch(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) {
      for_incident_edges(tree_, v, [&](int e) { refresh(e); });
    }
    for (Vertex v : touched_targets_) {
      for_incident_edges(tree_, v, [&](int e) { refresh(e); });
    }
    touched_targets_.clear();
  }

  void swap(Vertex u, Vertex v) {
    const Token a = at_[u], b = at_[v];
    at_[u] = b;
    at_[v] = a;
    pos_[a] = v;
    pos_[b] = u;
    touched_targets_.push_back(target_[a]);
    touched_targets_.push_back(target_[b]);
  }

  void retarget(Token t, Vertex v) {
    touched_targets_.push_back(target_[t]);
    touched_targets_.push_back(v);
    target_[t] = v;
    owner_[v] = t;
  }

  const Tree& tree_;
  std::span<const Edge> edges_;
  std::vector<Token> at_;
  std::vector<Vertex> pos_;
  std::vector<Vertex> target_;
  std::vector<Token> owner_;
  std::vector<int> kind_;
  std::set<int> ops_[3];
  std::vector<Vertex> touched_targets_;
  SwapSequence prefix_;
  SwapSequence suffix_;
};

}  // namespace

SwapSequence vaughan_algorithm(const Instance& inst) {
  return Vaughan(inst).run();
}

BoundReport akers_bound(const Instance& inst) {
  BoundReport r;
  r.D = distance_metrics(inst).total;
  r.c = cycle_decomposition(inst).count;
  r.M = r.D - (inst.tree.size() - r.c);
  return r;
}

int chitturi_bound(const Tree& tree) {
  const int n = tree.size();
  if (n <= 1) return 0;
  if (is_star(tree)) return 3 * (n - 1) / 2;
  Vertex best = 0;
  std::int64_t best_sum = -1;
  int ecc = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t sum = 0;
    int far = 0;
    for (Vertex w = 0; w < n; ++w) {
      const int d = tree.distance(v, w);
      sum += d;
      far = std::max(far, d);
    }
    if (sum > best_sum) {
      best_sum = sum;
      best = v;
      ecc = far;
    }
  }
  const Vertex removed[] = {best};
  return ecc + chitturi_bound(remove_vertices(tree, removed));
}

}  // namespace tswap
