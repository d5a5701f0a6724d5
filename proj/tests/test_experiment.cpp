#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "support.hpp"
#include "tswap/constructions.hpp"
#include "tswap/enumerate.hpp"
#include "tswap/experiment.hpp"

using namespace tswap;
using namespace tswap::test;

TEST_CASE("free tree counts") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    const auto trees = enumerate_free_trees(n);
    CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
    std::set<std::string> forms;
    for (const auto& t : trees) {
      CHECK(t.size() == n);
      forms.insert(canonical_form(t));
    }
    CHECK(forms.size() == trees.size());
  }
}

TEST_CASE("canonical form ignores labels") {
  Rng rng(401);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Tree t = random_tree(n, rng);
    const auto relabel = random_placement(n, rng);
    std::vector<Edge> edges;
    for (const Edge& e : t.edges()) edges.push_back({relabel[e.v], relabel[e.u]});
    CHECK(canonical_form(t) == canonical_form(Tree(n, edges)));
  }
  CHECK(canonical_form(path_tree(5)) != canonical_form(broom_tree(2, 2)));
}

TEST_CASE("happy leaf search finds nothing on small trees") {
  HappyLeafOptions opts;
  opts.max_n = 7;
  opts.threads = 2;
  const auto rep = happy_leaf_search(opts);
  CHECK(rep.counterexamples == 0);
  CHECK(rep.examples.empty());
  REQUIRE(rep.sizes.size() == 7);
  CHECK(rep.sizes[6].trees == 11);
  CHECK(rep.sizes[6].placements == 11 * 5040);
}

TEST_CASE("happy leaf search on the counterexample tree") {
  const auto g = happy_leaf_counterexample();
  const auto rep = happy_leaf_search(g.instance.tree, 100000);
  CHECK(rep.counterexamples >= 1);
  const auto& start = g.instance.start;
  const auto it = std::find_if(rep.examples.begin(), rep.examples.end(),
                               [&](const auto& ex) { return ex.placement == start; });
  REQUIRE(it != rep.examples.end());
  CHECK(it->happy_leaves == std::vector<Vertex>{9});
  CHECK(it->distance == 34);
  CHECK(it->pinned_distance == 36);
}

TEST_CASE("ratio rows") {
  const auto tk = ratio_experiment(RatioFamily::Tk, {2, 10});
  REQUIRE(tk.size() == 2);
  CHECK(tk[0].companion == 24);
  CHECK(*tk[0].reversal == 10);
  const auto tkb = ratio_experiment(RatioFamily::Tkb, {2, 3}, {3, 5});
  REQUIRE(tkb.size() == 2);
  CHECK(tkb[0].companion == 28);
  CHECK(tkb[0].cycle == 14);
  CHECK(tkb[1].cycle == 5 * 9 + 3);
  std::ostringstream out;
  write_ratio_csv(out, tkb);
  const std::string csv = out.str();
  CHECK(csv.rfind("family,k,b,n,companion", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
