#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "support.hpp"
#include "tswap/approx.hpp"
#include "tswap/constructions.hpp"
#include "tswap/oracle.hpp"

using namespace tswap;
using namespace tswap::test;

namespace {

Cost verified_cost(const Instance& inst, const SwapSequence& seq) {
  const auto r = apply_sequence(inst, seq);
  REQUIRE(is_goal(inst, r.final_placement));
  return r.cost;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("happy leaf counterexample") {
  const auto g = happy_leaf_counterexample();
  const Instance& inst = g.instance;
  CHECK(inst.tree.size() == 10);
  CHECK(inst.start == Configuration{8, 7, 6, 5, 4, 3, 2, 1, 0, 9});
  CHECK(inst.tree.is_leaf(9));
  CHECK(inst.tree.has_edge(2, 9));
  CHECK(verified_cost(inst, g.companion) == 34);
  SearchOptions pinned;
  pinned.forbidden = {9};
  CHECK(optimal(inst, pinned).length == 36);
}

TEST_CASE("T_k") {
  CHECK(code_of([] { make_tk(3); }) == ErrorCode::OddK);
  CHECK(code_of([] { make_tk(0); }) == ErrorCode::OddK);
  const auto t2 = make_tk(2);
  CHECK(t2.step_one_cost == 7);
  CHECK(t2.reversal_cost == 10);
  for (int k : {2, 4, 10, 30}) {
    const auto t = make_tk(k);
    CHECK(t.instance.tree.size() == 3 * k + 1);
    CHECK(verified_cost(t.instance, t.companion) == tk_companion_cost(k));
    CHECK(t.reversal_cost == 2LL * k * k + k);
    CHECK(t.step_one_cost == k * k / 2 + 5 * k / 2);
  }
  const auto t = make_tk(2);
  CHECK(optimal(t.instance).length <= tk_companion_cost(2));
  // reversing along the path alone costs C(2k+1, 2)
  CHECK(optimal(make_instance(path_tree(5), {4, 3, 2, 1, 0})).length == t.reversal_cost);
}

TEST_CASE("T_k ratio grows toward 4/3") {
  double prev = 0;
  for (int k : {10, 100, 1000}) {
    const double ratio = static_cast<double>(make_tk(k).reversal_cost) / tk_companion_cost(k);
    CHECK(ratio > prev);
    CHECK(ratio < 4.0 / 3.0);
    prev = ratio;
  }
  CHECK(prev >= 1.3);
}

TEST_CASE("T_{k,b}") {
  CHECK(code_of([] { make_tkb(2, 4); }) == ErrorCode::EvenB);
  CHECK(code_of([] { make_tkb(2, 1); }) == ErrorCode::EvenB);
  CHECK(code_of([] { make_tkb(0, 3); }) == ErrorCode::InvalidArgument);
  CHECK(tkb_companion_cost(2, 3) == 28);
  for (auto [k, b] : {std::pair{2, 3}, {3, 5}, {5, 5}, {1, 3}, {4, 7}}) {
    const auto g = make_tkb(k, b);
    CHECK(g.instance.tree.size() == b * k + k + 1);
    CHECK(verified_cost(g.instance, g.companion) == tkb_companion_cost(k, b));
    CHECK(static_cast<std::int64_t>(cycle_algorithm(g.instance).size()) ==
          static_cast<std::int64_t>(b) * k * k + k);
    CHECK(static_cast<std::int64_t>(happy_swap_algorithm(g.instance).size()) >=
          static_cast<std::int64_t>(b) * k * k);
  }
}

TEST_CASE("T_{k,b} with even b") {
  for (auto [k, b] : {std::pair{2, 2}, {3, 4}, {4, 6}}) {
    const auto g = make_tkb_general(k, b);
    CHECK(verified_cost(g.instance, g.companion) == tkb_companion_cost(k, b) + 3 * (k / 2));
    CHECK(static_cast<std::int64_t>(cycle_algorithm(g.instance).size()) ==
          static_cast<std::int64_t>(b) * k * k + k);
  }
}

TEST_CASE("small T_{k,b} companion is near optimal") {
  const auto g = make_tkb(1, 3);  // 5 vertices
  CHECK(optimal(g.instance).length <= tkb_companion_cost(1, 3));
}

TEST_CASE("reduction parameters on the triangle") {
  const VertexCoverInput tri{3, {{0, 1}, {1, 2}, {0, 2}}, 2};
  const auto red = build_vc_reduction(tri);
  CHECK(red.lr == 2187);
  CHECK(red.heavy_weight == 243);
  CHECK(red.beta == 4793904);
  CHECK(red.beta_prime == 12);
  CHECK(red.budget == 4794904);
  CHECK(red.path_vertices == 2187 + 3 + 2186 + 3);
  CHECK(red.root == 2187 + 3 - 1);
  CHECK(red.instance.tree.size() == red.path_vertices + 3 + 6);
}

TEST_CASE("reduction input validation") {
  CHECK(code_of([] { build_vc_reduction({1, {}, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_vc_reduction({3, {}, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_vc_reduction({3, {{0, 0}}, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_vc_reduction({3, {{0, 1}, {1, 0}}, 1}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_vc_reduction({3, {{0, 1}}, 4}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_vc_reduction({3, {{0, 5}}, 1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("reduction structure on random graphs") {
  Rng rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    VertexCoverInput vc{n, {}, 0};
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (rng() % 2) vc.edges.push_back({x, y});
      }
    }
    if (vc.edges.empty()) vc.edges.push_back({0, 1});
    vc.q = n;
    const auto red = build_vc_reduction(vc, 5);
    const Instance& inst = red.instance;
    const int m = static_cast<int>(red.source.edges.size());
    // balanced colour counts
    auto a = inst.colouring->vertex_colour, b = inst.colouring->token_colour;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    // the gadget starts happy; the root is on the path
    for (int x = 0; x < n; ++x) {
      const Vertex v = red.v_vertex(x);
      CHECK(inst.colouring->token_colour[v] == kDarkgray);
      CHECK(inst.colouring->vertex_colour[v] == kDarkgray);
      CHECK(inst.tree.has_edge(red.root, v));
    }
    for (int e = 0; e < m; ++e) {
      for (int side : {0, 1}) {
        const Vertex v = red.e_vertex(e, side);
        CHECK(inst.colouring->token_colour[v] == kEdgeColourBase + e);
        CHECK(inst.colouring->vertex_colour[v] == kEdgeColourBase + e);
        CHECK(inst.tree.is_leaf(v));
      }
    }
    CHECK(inst.colouring->token_colour[red.root] == kBlue);
    CHECK(inst.weights->of(kDarkgray) == red.heavy_weight);
  }
}

TEST_CASE("reduction round trip with a shortened red block") {
  Rng rng(203);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    VertexCoverInput vc{n, {}, 0};
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (rng() % 2) vc.edges.push_back({x, y});
      }
    }
    if (vc.edges.empty()) vc.edges.push_back({0, 1});
    // smallest cover by brute force
    std::vector<int> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> c;
      for (int x = 0; x < n; ++x) {
        if (mask >> x & 1) c.push_back(x);
      }
      const bool covers = std::all_of(vc.edges.begin(), vc.edges.end(), [&](const Edge& e) {
        return (mask >> e.u & 1) || (mask >> e.v & 1);
      });
      if (covers && (best.empty() || c.size() < best.size())) best = c;
    }
    vc.q = static_cast<int>(best.size());
    const auto red = build_vc_reduction(vc, 4);
    const auto seq = vc_to_sequence(red, best);
    const auto r = apply_sequence(red.instance, seq);
    CHECK(is_goal(red.instance, r.final_placement));
    CHECK(sequence_to_cover(red, seq, r.cost) == best);
    CHECK(code_of([&] { sequence_to_cover(red, seq, r.cost - 1); }) == ErrorCode::OverBudget);
  }
}

TEST_CASE("vc_to_sequence rejects bad covers") {
  const VertexCoverInput path{3, {{0, 1}, {1, 2}}, 1};
  const auto red = build_vc_reduction(path, 3);
  CHECK(code_of([&] { vc_to_sequence(red, {0}); }) == ErrorCode::NotACover);
  CHECK(code_of([&] { vc_to_sequence(red, {0, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { vc_to_sequence(red, {7}); }) == ErrorCode::InvalidArgument);
  const auto seq = vc_to_sequence(red, {1});
  CHECK(sequence_to_cover(red, seq, apply_sequence(red.instance, seq).cost) ==
        std::vector<int>{1});
  const SwapSequence partial(seq.begin(), seq.begin() + 1);
  CHECK(code_of([&] { sequence_to_cover(red, partial, 1 << 30); }) == ErrorCode::NotSorted);
}
