// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact integer checks except the
// ratio thresholds pinned below.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "support.hpp"
#include "tswap/approx.hpp"
#include "tswap/constructions.hpp"
#include "tswap/enumerate.hpp"
#include "tswap/exact_special.hpp"
#include "tswap/experiment.hpp"
#include "tswap/oracle.hpp"

using namespace tswap;
using namespace tswap::test;

namespace {

constexpr double kTkbRatioMin = 1.75;
constexpr double kTkRatioMin = 1.3;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::pair<bool, std::string>> sub;
};

int failures = 0;

template <class Fn>
void criterion(int id, const char* title, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs);
  for (const auto& [ok, text] : o.sub) {
    std::printf("     %s %s\n", ok ? "pass" : "fail", text.c_str());
  }
  std::fflush(stdout);
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Cost of `seq` if it reaches the goal, -1 otherwise.
Cost checked_cost(const Instance& inst, const SwapSequence& seq) {
  const auto r = apply_sequence(inst, seq);
  return is_goal(inst, r.final_placement) ? r.cost : -1;
}

Outcome happy_leaf() {
  const auto g = happy_leaf_counterexample();
  const auto opt = optimal(g.instance).length;
  SearchOptions pinned;
  pinned.forbidden = {9};
  const auto fixed = optimal(g.instance, pinned).length;
  const auto comp = checked_cost(g.instance, g.companion);
  return {opt <= 34 && opt < 36 && fixed == 36 && comp == 34,
          fmt("optimum %lld, leaf pinned %lld, companion %lld", (long long)opt,
              (long long)fixed, (long long)comp),
          {}};
}

Outcome stars() {
  std::uint64_t checked = 0, bad = 0;
  for (int n = 3; n <= 7; ++n) {
    const Tree tree = star_tree(n);
    const auto table = all_distances(tree);
    for_each_permutation(n, [&](const Configuration& p) {
      const Instance inst = make_instance(tree, p);
      const auto info = *cycle_decomposition(inst).star;
      const Cost len = checked_cost(inst, solve_star(inst));
      const int expected = info.unhappy_leaves + info.locked_nontrivial;
      bad += len != expected || table.at(p) != expected;
      ++checked;
    });
  }
  return {bad == 0, fmt("%llu placements, %llu mismatches", (unsigned long long)checked,
                        (unsigned long long)bad), {}};
}

Outcome weighted_stars() {
  Rng rng(kSeed + 3);
  int bad = 0, total = 0;
  for (int n : {4, 5, 6}) {
    for (int trial = 0; trial < 500; ++trial, ++total) {
      std::vector<Cost> w(n);
      for (auto& x : w) x = 1 + static_cast<Cost>(rng() % 10);
      const Instance inst = weighted_instance(star_tree(n), random_placement(n, rng), w);
      const auto sol = solve_weighted_star(inst);
      const Cost cost = checked_cost(inst, sol.swaps);
      bad += cost != star_weight_formula(sol.summary) || cost != optimal(inst).cost;
    }
  }
  return {bad == 0, fmt("%d instances, %d mismatches", total, bad), {}};
}

Outcome coloured_stars(bool weighted) {
  Rng rng(kSeed + (weighted ? 5 : 4));
  int bad = 0, total = 0;
  for (int n : {4, 5, 6}) {
    for (int trial = 0; trial < 500; ++trial, ++total) {
      Colouring col = random_colouring(n, 2 + static_cast<int>(rng() % 3), rng);
      std::optional<WeightTable> w;
      if (weighted) {
        w.emplace();
        for (Colour c : col.vertex_colour) w->weight[c] = 1 + static_cast<Cost>(rng() % 5);
      }
      const Instance inst = make_instance(star_tree(n), identity_configuration(n), col, w);
      const Cost opt = optimal(inst).cost;
      if (weighted) {
        bad += checked_cost(inst, solve_weighted_coloured_star(inst)) != opt;
      } else {
        const auto sol = solve_coloured_star(inst);
        const Cost formula = (n - 1 - sol.graph.leaf_loops) + sol.graph.kappa;
        bad += checked_cost(inst, sol.swaps) != formula || formula != opt;
      }
    }
  }
  return {bad == 0, fmt("%d instances, %d mismatches", total, bad), {}};
}

Outcome brooms() {
  std::uint64_t checked = 0, bad = 0, trace_bad = 0;
  int shapes = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int leaves = 1; leaves <= n - 1; ++leaves) {
      const Tree tree = broom_tree(leaves, n - 1 - leaves);
      const auto table = all_distances(tree);
      ++shapes;
      for_each_permutation(n, [&](const Configuration& p) {
        const Instance inst = make_instance(tree, p);
        const auto sol = solve_broom(inst);
        bad += checked_cost(inst, sol.swaps) != table.at(p);
        try {
          trace_bad += broom_count_formula(sol.trace, inst) != sol.trace.phase_one_swaps;
        } catch (const Error&) {
          ++trace_bad;
        }
        ++checked;
      });
    }
  }
  return {bad == 0 && trace_bad == 0,
          fmt("%d brooms, %llu placements, %llu length mismatches, %llu count mismatches",
              shapes, (unsigned long long)checked, (unsigned long long)bad,
              (unsigned long long)trace_bad),
          {}};
}

Outcome paths() {
  std::uint64_t checked = 0, bad = 0;
  for (int n = 1; n <= 8; ++n) {
    const Tree tree = path_tree(n);
    const auto table = all_distances(tree);
    for_each_permutation(n, [&](const Configuration& p) {
      const Instance inst = make_instance(tree, p);
      const auto inv = path_inversions(inst);
      bad += checked_cost(inst, solve_path(inst)) != inv || table.at(p) != inv;
      ++checked;
    });
  }
  Rng rng(kSeed + 7);
  int wbad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Colouring col = random_colouring(n, 1 + static_cast<int>(rng() % n), rng);
    WeightTable w;
    for (Colour c : col.vertex_colour) w.weight[c] = 1 + static_cast<Cost>(rng() % 5);
    const Instance inst = make_instance(path_tree(n), identity_configuration(n), col, w);
    wbad += checked_cost(inst, solve_weighted_coloured_path(inst)) != optimal(inst).cost;
  }
  return {bad == 0 && wbad == 0,
          fmt("%llu plain placements (%llu mismatches), 500 weighted coloured (%d mismatches)",
              (unsigned long long)checked, (unsigned long long)bad, wbad),
          {}};
}

bool touches_vertex(const SwapSequence& seq, Vertex v) {
  for (const Edge& e : seq) {
    if (e.u == v || e.v == v) return true;
  }
  return false;
}

Outcome envelope() {
  Rng rng(kSeed + 8);
  int unsorted = 0, hs_over = 0, cy_over = 0, va_out = 0, leaf_moved = 0;
  int hs_not_m = 0, hs_below_m = 0;
  std::string witness;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Instance inst = make_instance(random_tree(n, rng), random_placement(n, rng));
    const auto opt = optimal(inst).length;
    const auto b = akers_bound(inst);
    const auto hs = happy_swap_algorithm(inst);
    const auto cy = cycle_algorithm(inst);
    const auto va = vaughan_algorithm(inst);
    const Cost lh = checked_cost(inst, hs), lc = checked_cost(inst, cy),
               lv = checked_cost(inst, va);
    unsorted += (lh < 0) + (lc < 0) + (lv < 0);
    hs_over += lh > 2 * opt;
    cy_over += lc > 2 * opt;
    va_out += 2 * lv < b.D || lv > b.D;
    if (lh != b.M) {
      ++hs_not_m;
      hs_below_m += lh < b.M;
      if (witness.empty()) {
        std::ostringstream s;
        s << "n=" << n << " length " << lh << " M " << b.M << " optimum " << opt;
        witness = s.str();
      }
    }
    for (Vertex v : inst.tree.leaves()) {
      if (inst.start[v] != v) continue;
      leaf_moved += touches_vertex(hs, v) || touches_vertex(cy, v) || touches_vertex(va, v);
    }
  }
  const bool core = unsorted == 0 && hs_over == 0 && cy_over == 0 && va_out == 0 &&
                    leaf_moved == 0;
  Outcome o;
  o.pass = core && hs_not_m == 0;
  o.detail = "1000 random trees, n <= 9";
  o.sub.push_back({unsorted == 0, fmt("all sequences sort (%d failures)", unsorted)});
  o.sub.push_back({hs_over == 0 && cy_over == 0,
                   fmt("happy-swap and cycle <= 2 * optimum (%d, %d over)", hs_over, cy_over)});
  o.sub.push_back({va_out == 0, fmt("vaughan length in [D/2, D] (%d outside)", va_out)});
  o.sub.push_back({leaf_moved == 0, fmt("no initially happy leaf touched (%d runs)", leaf_moved)});
  o.sub.push_back({hs_not_m == 0,
                   fmt("happy-swap length = M (%d of 1000 differ, %d of them below M; first: %s)",
                       hs_not_m, hs_below_m, witness.empty() ? "none" : witness.c_str())});
  return o;
}

Outcome tightness() {
  Outcome o;
  bool exact = true;
  for (auto [k, b] : {std::pair{2, 3}, {3, 5}, {5, 5}}) {
    const auto g = make_tkb(k, b);
    const auto len = static_cast<std::int64_t>(cycle_algorithm(g.instance).size());
    exact = exact && len == static_cast<std::int64_t>(b) * k * k + k;
  }
  o.sub.push_back({exact, "cycle on T_{k,b} = bk^2 + k for (2,3), (3,5), (5,5)"});

  const int k = 50, b = 50;
  const auto g = make_tkb_general(k, b);
  const Cost comp = checked_cost(g.instance, g.companion);
  const auto cy = checked_cost(g.instance, cycle_algorithm(g.instance));
  const auto hs = checked_cost(g.instance, happy_swap_algorithm(g.instance));
  const double ratio = static_cast<double>(cy) / comp;
  const double closed = static_cast<double>(cy) / tkb_companion_cost(k, b);
  const bool big = comp > 0 && ratio >= kTkbRatioMin && hs >= static_cast<Cost>(b) * k * k;
  o.sub.push_back({big, fmt("k=b=50: cycle %lld, companion %lld, ratio %.4f (closed form %.4f); "
                            "happy-swap %lld >= %d",
                            (long long)cy, (long long)comp, ratio, closed, (long long)hs,
                            b * k * k)});

  const auto tk = make_tk(1000);
  const Cost tk_comp = checked_cost(tk.instance, tk.companion);
  const double tk_ratio = static_cast<double>(tk.reversal_cost) / tk_comp;
  const bool tk_ok = tk_comp == tk_companion_cost(1000) && tk_ratio >= kTkRatioMin;
  o.sub.push_back({tk_ok, fmt("T_1000: reversal %lld / companion %lld = %.4f",
                              (long long)tk.reversal_cost, (long long)tk_comp, tk_ratio)});
  o.pass = exact && big && tk_ok;
  o.detail = fmt("ratios %.4f and %.4f", ratio, tk_ratio);
  return o;
}

Outcome reduction() {
  const VertexCoverInput tri{3, {{0, 1}, {1, 2}, {0, 2}}, 2};
  const auto red = build_vc_reduction(tri);
  Outcome o;
  const bool params = red.beta == 4793904 && red.beta_prime == 12 && red.budget == 4794904;
  o.sub.push_back({params, fmt("beta %lld, beta' %lld, budget %lld", (long long)red.beta,
                               (long long)red.beta_prime, (long long)red.budget)});
  const auto seq = vc_to_sequence(red, {0, 1});
  const Cost cost = checked_cost(red.instance, seq);
  o.sub.push_back({cost == red.budget,
                   fmt("cover {0,1} sequence reaches the goal: %s; cost %lld vs budget %lld",
                       cost >= 0 ? "yes" : "no", (long long)cost, (long long)red.budget)});
  std::string rt;
  bool rt_ok = false;
  try {
    rt_ok = sequence_to_cover(red, seq) == std::vector<int>{0, 1};
    rt = rt_ok ? "{0,1}" : "different set";
  } catch (const Error& e) {
    rt = e.what();
  }
  o.sub.push_back({rt_ok, "round trip under the budget: " + rt});
  const bool loose = cost >= 0 && sequence_to_cover(red, seq, cost) == std::vector<int>{0, 1};
  o.sub.push_back({loose, "round trip with the budget raised to the sequence cost"});
  o.pass = params && cost == red.budget && rt_ok;
  o.detail = fmt("triangle, q = 2, %zu swaps", seq.size());
  return o;
}

Outcome conjecture_search() {
  HappyLeafOptions opts;
  opts.max_n = 8;
  const auto up_to_8 = happy_leaf_search(opts).counterexamples;
  opts.max_n = 9;
  const auto up_to_9 = happy_leaf_search(opts).counterexamples;
  const auto g = happy_leaf_counterexample();
  const auto rep = happy_leaf_search(g.instance.tree, 1000);
  bool found = false;
  for (const auto& ex : rep.examples) {
    found = found || (ex.placement == g.instance.start && ex.distance == 34 &&
                      ex.pinned_distance == 36);
  }
  return {up_to_8 == 0 && up_to_9 == 0 && found,
          fmt("n<=8: %llu, n<=9: %llu, 10-vertex tree: %llu placements including the "
              "constructed one: %s",
              (unsigned long long)up_to_8, (unsigned long long)up_to_9,
              (unsigned long long)rep.counterexamples, found ? "yes" : "no"),
          {}};
}

Outcome bounds() {
  int trees = 0, diam_bad = 0;
  std::uint64_t placements = 0, order_bad = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Tree& tree : enumerate_free_trees(n)) {
      ++trees;
      const auto table = all_distances(tree);
      diam_bad += table.max() > chitturi_bound(tree);
      for_each_permutation(n, [&](const Configuration& p) {
        const auto b = akers_bound(make_instance(tree, p));
        order_bad += !(table.at(p) <= b.M && b.M <= b.D);
        ++placements;
      });
    }
  }
  return {diam_bad == 0 && order_bad == 0,
          fmt("%d trees, %llu placements; diameter > gamma: %d, optimum <= M <= D violated: %llu",
              trees, (unsigned long long)placements, diam_bad, (unsigned long long)order_bad),
          {}};
}

}  // namespace

int main() {
  criterion(1, "happy-leaf refutation", happy_leaf);
  criterion(2, "star exactness", stars);
  criterion(3, "weighted star", weighted_stars);
  criterion(4, "coloured star", [] { return coloured_stars(false); });
  criterion(5, "weighted coloured star", [] { return coloured_stars(true); });
  criterion(6, "broom exactness", brooms);
  criterion(7, "paths", paths);
  criterion(8, "approximation envelope", envelope);
  criterion(9, "tightness reproduction", tightness);
  criterion(10, "reduction certification", reduction);
  criterion(11, "conjecture search", conjecture_search);
  criterion(12, "bounds", bounds);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
