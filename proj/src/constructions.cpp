#include "tswap/constructions.hpp"

#include <string>

#include "swap_state.hpp"

namespace tswap {

using detail::SwapState;

GeneratedInstance happy_leaf_counterexample() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.push_back({i, i + 1});
  edges.push_back({2, 9});
  Configuration start(10);
  for (int j = 0; j < 9; ++j) start[j] = 8 - j;
  start[9] = 9;
  GeneratedInstance out{make_instance(Tree(10, std::move(edges)), start), {}};

  SwapState s(out.instance.tree, start);
  s.move_to(9, 0);
  for (Vertex t = 8; t >= 3; --t) s.send_home(t);
  s.send_home(9);
  s.send_home(0);
  out.companion = s.take_swaps();
  return out;
}

namespace {

// Exchanges the tokens on an arm q_1..q_k with k tokens on leaves of the
// center: the center token walks out to q_k, leaf(i) is routed to q_{i-1}
// for i = k..1 (q_0 is the center), and the center token walks back. The
// token from leaf(i) finishes on q_i; the arm tokens land on the leaves in
// reverse order.
template <class LeafOf>
void exchange(SwapState& s, Vertex center, const std::vector<Vertex>& arm,
              LeafOf&& leaf_of) {
  const int k = static_cast<int>(arm.size());
  const Vertex tc = s.at(center);
  s.move_to(tc, arm[k - 1]);
  std::vector<Vertex> tokens(k);
  for (int i = 0; i < k; ++i) tokens[i] = s.at(leaf_of(i));
  for (int i = k - 1; i >= 0; --i) {
    s.move_to(tokens[i], i == 0 ? center : arm[i - 1]);
  }
  s.move_to(tc, center);
}

// Leaf currently holding the token whose home is `target`.
Vertex holder(const SwapState& s, Vertex target) { return s.where(target); }

}  // namespace

std::int64_t tk_companion_cost(int k) {
  return 3LL * k * k / 2 + 9LL * k;
}

std::int64_t tkb_companion_cost(int k, int b) {
  return static_cast<std::int64_t>(b + 1) *
         (static_cast<std::int64_t>(k) * (k + 1) / 2 + 2LL * k);
}

TkInstance make_tk(int k) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::OddK, "k must be even and at least 2, got " +
                                     std::to_string(k));
  }
  const int n = 3 * k + 1;
  const Vertex c = k;
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * k; ++i) edges.push_back({i, i + 1});
  for (int i = 1; i <= k; ++i) edges.push_back({c, 2 * k + i});
  Configuration start = identity_configuration(n);
  for (int i = 1; i <= k; ++i) {
    start[k - i] = k + i;
    start[k + i] = k - i;
  }
  TkInstance out{make_instance(Tree(n, std::move(edges)), start), {}, 0, 0};
  out.reversal_cost = static_cast<std::int64_t>(2 * k + 1) * (2 * k) / 2;

  std::vector<Vertex> near(k), far(k);  // p_1..p_k and p'_1..p'_k
  for (int i = 0; i < k; ++i) {
    near[i] = k - 1 - i;
    far[i] = k + 1 + i;
  }
  SwapState s(out.instance.tree, start);
  exchange(s, c, near, [&](int i) { return 2 * k + 1 + i; });
  out.step_one_cost = static_cast<std::int64_t>(s.swaps().size());
  exchange(s, c, far, [&](int i) { return holder(s, far[i]); });
  exchange(s, c, near, [&](int i) { return holder(s, near[i]); });
  detail::star_sort(s, c);
  out.companion = s.take_swaps();
  return out;
}

GeneratedInstance make_tkb(int k, int b) {
  if (b < 3 || b % 2 == 0) {
    throw Error(ErrorCode::EvenB, "b must be odd and at least 3, got " +
                                      std::to_string(b));
  }
  return make_tkb_general(k, b);
}

GeneratedInstance make_tkb_general(int k, int b) {
  if (b < 2) throw Error(ErrorCode::InvalidArgument, "b must be at least 2");
  if (k < 1) {
    throw Error(ErrorCode::InvalidArgument, "k must be positive");
  }
  const int n = b * k + k + 1;
  auto arm_vertex = [k](int i, int j) { return 1 + (i - 1) * k + (j - 1); };
  std::vector<Edge> edges;
  for (int i = 1; i <= b; ++i) {
    edges.push_back({0, arm_vertex(i, 1)});
    for (int j = 1; j < k; ++j) edges.push_back({arm_vertex(i, j), arm_vertex(i, j + 1)});
  }
  for (int m = 0; m < k; ++m) edges.push_back({0, 1 + b * k + m});
  Configuration start = identity_configuration(n);
  for (int i = 1; i <= b; ++i) {
    const int next = i % b + 1;
    for (int j = 1; j <= k; ++j) start[arm_vertex(i, j)] = arm_vertex(next, j);
  }
  GeneratedInstance out{make_instance(Tree(n, std::move(edges)), start), {}};

  auto arm = [&](int i) {
    std::vector<Vertex> a(k);
    for (int j = 1; j <= k; ++j) a[j - 1] = arm_vertex(i, j);
    return a;
  };
  SwapState s(out.instance.tree, start);
  exchange(s, 0, arm(1), [&](int j) { return 1 + b * k + j; });
  for (int step = 2; step <= b + 1; ++step) {
    const auto a = arm(step <= b ? step : 1);
    exchange(s, 0, a, [&](int j) { return holder(s, a[j]); });
  }
  detail::star_sort(s, 0);
  out.companion = s.take_swaps();
  return out;
}

}  // namespace tswap
