#include "tswap/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "tswap/approx.hpp"
#include "tswap/constructions.hpp"
#include "tswap/enumerate.hpp"
#include "tswap/oracle.hpp"

namespace tswap {

namespace {

constexpr int kSearchCap = 10;

struct TreeResult {
  std::uint64_t placements = 0;
  std::uint64_t counterexamples = 0;
  std::vector<HappyLeafCounterexample> examples;
};

TreeResult check_tree(const Tree& tree, std::size_t max_examples) {
  const int n = tree.size();
  TreeResult res;
  const DistanceTable full = all_distances(tree, kSearchCap);
  std::vector<Vertex> leaves = tree.leaves();
  if (n == 1) leaves.clear();

  struct Pinned {
    DistanceTable table;
    std::vector<Vertex> old_to_new;
  };
  std::map<std::uint32_t, Pinned> pinned;
  auto pinned_for = [&](std::uint32_t mask) -> const Pinned& {
    auto it = pinned.find(mask);
    if (it != pinned.end()) return it->second;
    std::vector<Vertex> removed;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (mask >> i & 1u) removed.push_back(leaves[i]);
    }
    std::vector<Vertex> old_to_new;
    Tree rest = remove_vertices(tree, removed, &old_to_new);
    return pinned
        .emplace(mask, Pinned{all_distances(rest, kSearchCap), std::move(old_to_new)})
        .first->second;
  };

  Configuration perm = identity_configuration(n);
  Configuration induced;
  std::uint64_t rank = 0;
  do {
    ++res.placements;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (perm[leaves[i]] == leaves[i]) mask |= 1u << i;
    }
    if (mask != 0) {
      const Pinned& p = pinned_for(mask);
      induced.assign(n - std::popcount(mask), 0);
      for (Vertex v = 0; v < n; ++v) {
        if (p.old_to_new[v] >= 0) induced[p.old_to_new[v]] = p.old_to_new[perm[v]];
      }
      const int d = full.at_rank(rank);
      const int dp = p.table.at(induced);
      if (dp > d) {
        ++res.counterexamples;
        if (res.examples.size() < max_examples) {
          HappyLeafCounterexample ex;
          ex.edges.assign(tree.edges().begin(), tree.edges().end());
          ex.placement = perm;
          for (std::size_t i = 0; i < leaves.size(); ++i) {
            if (mask >> i & 1u) ex.happy_leaves.push_back(leaves[i]);
          }
          ex.distance = d;
          ex.pinned_distance = dp;
          res.examples.push_back(std::move(ex));
        }
      }
    }
    ++rank;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

}  // namespace

HappyLeafReport happy_leaf_search(const HappyLeafOptions& options) {
  if (options.max_n > kSearchCap) {
    throw Error(ErrorCode::TooLarge, "happy-leaf search is capped at " +
                                         std::to_string(kSearchCap) + " vertices");
  }
  struct Job {
    int n;
    Tree tree;
  };
  std::vector<Job> jobs;
  HappyLeafReport report;
  for (int n = 1; n <= options.max_n; ++n) {
    auto trees = enumerate_free_trees(n);
    report.sizes.push_back({n, static_cast<int>(trees.size()), 0, 0});
    for (auto& t : trees) jobs.push_back({n, std::move(t)});
  }

  std::vector<TreeResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      results[i] = check_tree(jobs[i].tree, options.max_examples);
    }
  };
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& size = report.sizes[jobs[i].n - 1];
    size.placements += results[i].placements;
    size.counterexamples += results[i].counterexamples;
    report.counterexamples += results[i].counterexamples;
    for (auto& ex : results[i].examples) {
      if (report.examples.size() < options.max_examples) {
        report.examples.push_back(std::move(ex));
      }
    }
  }
  return report;
}

HappyLeafReport happy_leaf_search(const Tree& tree, std::size_t max_examples) {
  if (tree.size() > kSearchCap) {
    throw Error(ErrorCode::TooLarge, "happy-leaf search is capped at " +
                                         std::to_string(kSearchCap) + " vertices");
  }
  auto res = check_tree(tree, max_examples);
  HappyLeafReport report;
  report.sizes.push_back({tree.size(), 1, res.placements, res.counterexamples});
  report.counterexamples = res.counterexamples;
  report.examples = std::move(res.examples);
  return report;
}

std::vector<RatioRow> ratio_experiment(RatioFamily family,
                                       const std::vector<int>& ks,
                                       const std::vector<int>& bs) {
  if (family == RatioFamily::Tkb && bs.size() != ks.size()) {
    throw Error(ErrorCode::InvalidArgument, "need one b per k");
  }
  std::vector<RatioRow> rows;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    RatioRow row{family, ks[i], 0, 0, 0, std::nullopt, 0, 0, 0};
    Instance inst;
    if (family == RatioFamily::Tk) {
      auto tk = make_tk(ks[i]);
      inst = std::move(tk.instance);
      row.companion = static_cast<std::int64_t>(tk.companion.size());
      row.reversal = tk.reversal_cost;
    } else {
      row.b = bs[i];
      auto g = make_tkb_general(ks[i], bs[i]);
      inst = std::move(g.instance);
      row.companion = static_cast<std::int64_t>(g.companion.size());
    }
    row.n = inst.tree.size();
    row.happy_swap = static_cast<std::int64_t>(happy_swap_algorithm(inst).size());
    row.cycle = static_cast<std::int64_t>(cycle_algorithm(inst).size());
    row.vaughan = static_cast<std::int64_t>(vaughan_algorithm(inst).size());
    rows.push_back(row);
  }
  return rows;
}

void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows) {
  out << "family,k,b,n,companion,reversal,happy_swap,cycle,vaughan,"
         "reversal_ratio,happy_swap_ratio,cycle_ratio,vaughan_ratio\n";
  auto ratio = [](std::int64_t a, std::int64_t b) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f",
                  b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b));
    return std::string(buf);
  };
  for (const auto& r : rows) {
    out << (r.family == RatioFamily::Tk ? "tk" : "tkb") << ',' << r.k << ',';
    if (r.family == RatioFamily::Tkb) out << r.b;
    out << ',' << r.n << ',' << r.companion << ',';
    if (r.reversal) out << *r.reversal;
    out << ',' << r.happy_swap << ',' << r.cycle << ',' << r.vaughan << ',';
    if (r.reversal) out << ratio(*r.reversal, r.companion);
    out << ',' << ratio(r.happy_swap, r.companion) << ','
        << ratio(r.cycle, r.companion) << ',' << ratio(r.vaughan, r.companion) << '\n';
  }
}

}  // namespace tswap
