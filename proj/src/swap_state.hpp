#pragma once

#include <vector>

#include "tswap/core.hpp"

namespace tswap::detail {

// Working placement with tokens named by their home vertex. Records every
// swap and the weighted cost as it goes.
class SwapState {
 public:
  SwapState(const Tree& tree, std::vector<Vertex> home_at,
            std::vector<Cost> weight_by_home = {})
      : tree_(&tree),
        home_at_(std::move(home_at)),
        where_(home_at_.size()),
        weight_(std::move(weight_by_home)) {
    for (std::size_t v = 0; v < home_at_.size(); ++v) {
      where_[home_at_[v]] = static_cast<Vertex>(v);
    }
  }

  // token (home vertex) currently on v
  Vertex at(Vertex v) const { return home_at_[v]; }
  // vertex currently holding the token whose home is h
  Vertex where(Vertex h) const { return where_[h]; }
  bool home(Vertex h) const { return where_[h] == h; }
  Cost weight(Vertex h) const { return weight_.empty() ? 1 : weight_[h]; }

  void swap(Vertex a, Vertex b) {
    const Vertex ta = home_at_[a];
    const Vertex tb = home_at_[b];
    cost_ += weight(ta) + weight(tb);
    home_at_[a] = tb;
    home_at_[b] = ta;
    where_[ta] = b;
    where_[tb] = a;
    swaps_.push_back({a, b});
  }

  // Walk token h toward `target` until it sits on `target`.
  void move_to(Vertex h, Vertex target) {
    while (where_[h] != target) {
      const Vertex v = where_[h];
      swap(v, tree_->next_hop(v, target));
    }
  }
  void send_home(Vertex h) { move_to(h, h); }

  bool sorted() const {
    for (std::size_t v = 0; v < home_at_.size(); ++v) {
      if (home_at_[v] != static_cast<Vertex>(v)) return false;
    }
    return true;
  }

  const Tree& tree() const { return *tree_; }
  const std::vector<Vertex>& placement() const { return home_at_; }
  const SwapSequence& swaps() const { return swaps_; }
  SwapSequence take_swaps() { return std::move(swaps_); }
  Cost cost() const { return cost_; }

 private:
  const Tree* tree_;
  std::vector<Vertex> home_at_;
  std::vector<Vertex> where_;
  std::vector<Cost> weight_;
  SwapSequence swaps_;
  Cost cost_ = 0;
};

// weight_by_home[dest[v]] = start_weights[v]
inline std::vector<Cost> weights_by_home(const std::vector<Vertex>& dest,
                                         const std::vector<Cost>& by_start) {
  std::vector<Cost> w(dest.size());
  for (std::size_t v = 0; v < dest.size(); ++v) w[dest[v]] = by_start[v];
  return w;
}

// Plain star sort: home the center token; when it is home, shove the
// lowest-indexed unsorted leaf into the center.
inline void star_sort(SwapState& s, Vertex center) {
  const int n = s.tree().size();
  Vertex next_unsorted = 0;
  while (true) {
    const Vertex h = s.at(center);
    if (h != center) {
      s.swap(center, h);
      continue;
    }
    while (next_unsorted < n && s.at(next_unsorted) == next_unsorted) {
      ++next_unsorted;
    }
    if (next_unsorted == n) return;
    s.swap(center, next_unsorted);
  }
}

}  // namespace tswap::detail
