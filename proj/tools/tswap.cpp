// Command-line front end: solve, approx, gen, verify, experiment.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tswap/approx.hpp"
#include "tswap/constructions.hpp"
#include "tswap/exact_special.hpp"
#include "tswap/experiment.hpp"
#include "tswap/io.hpp"
#include "tswap/oracle.hpp"

using nlohmann::json;
using namespace tswap;

namespace {

enum Exit {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kMismatch = 3,
  kTooLarge = 4,
  kUnreachable = 5,
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NotATree:
    case ErrorCode::InvalidInstance:
    case ErrorCode::ColourCountMismatch:
    case ErrorCode::InvalidArgument:
    case ErrorCode::OddK:
    case ErrorCode::EvenB:
      return kUsage;
    case ErrorCode::NotAPath:
    case ErrorCode::NotAStar:
    case ErrorCode::NotABroom:
    case ErrorCode::ColouredInstance:
    case ErrorCode::NonEdgeSwap:
      return kMismatch;
    case ErrorCode::TooLarge:
      return kTooLarge;
    case ErrorCode::Unreachable:
      return kUnreachable;
    default:
      return kFailed;
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

Solution make_solution(const Instance& inst, SwapSequence swaps, std::string algorithm) {
  const auto applied = apply_sequence(inst, swaps);
  Solution sol;
  sol.cost = applied.cost;
  sol.length = applied.length;
  sol.swaps = std::move(swaps);
  sol.meta.algorithm = std::move(algorithm);
  return sol;
}

json broom_trace_json(const BroomTrace& t) {
  json tokens = json::array();
  for (const auto& p : t.path_tokens) {
    json d = p.to_home_from_leaf == kNoStarLeaf ? json(nullptr) : json(p.to_home_from_leaf);
    tokens.push_back({{"home", p.home}, {"d", d}, {"r", p.smaller_to_right}});
  }
  return {{"path_tokens", tokens},
          {"S_U", t.unhomed_star_tokens},
          {"L", t.lucky},
          {"W", t.phase_one_swaps},
          {"n_S", t.star_cycle_tokens},
          {"l_S", t.star_cycles},
          {"star_phase_swaps", t.star_phase_swaps}};
}

Solution run_exact(const Instance& inst, std::string algorithm,
                   const SearchOptions& search) {
  const bool distinct = has_distinct_colours(inst);
  if (algorithm == "auto") {
    if (!search.forbidden.empty()) {
      algorithm = "oracle";
    } else if (is_path(inst.tree)) {
      algorithm = distinct && !inst.weights ? "path" : "weighted-coloured-path";
    } else if (is_star(inst.tree)) {
      if (distinct) {
        algorithm = inst.weights ? "weighted-star" : "star";
      } else {
        algorithm = inst.weights ? "weighted-coloured-star" : "coloured-star";
      }
    } else if (is_broom(inst.tree) && distinct && !inst.weights) {
      algorithm = "broom";
    } else {
      algorithm = "oracle";
    }
  }

  if (algorithm == "oracle") {
    auto res = optimal(inst, search);
    auto sol = make_solution(inst, std::move(res.swaps), algorithm);
    sol.meta.states_expanded = res.states_expanded;
    return sol;
  }
  if (!search.forbidden.empty()) {
    throw Error(ErrorCode::InvalidArgument, "--forbid is only supported by the oracle");
  }
  if (algorithm == "path") return make_solution(inst, solve_path(inst), algorithm);
  if (algorithm == "weighted-coloured-path") {
    return make_solution(inst, solve_weighted_coloured_path(inst), algorithm);
  }
  if (algorithm == "star") return make_solution(inst, solve_star(inst), algorithm);
  if (algorithm == "weighted-star") {
    auto res = solve_weighted_star(inst);
    auto sol = make_solution(inst, std::move(res.swaps), algorithm);
    const auto& s = res.summary;
    json trace{{"D_w", s.weighted_distance}, {"w_x", s.min_unlocked},
               {"w_a", s.min_active},        {"l", s.locked_cycles},
               {"strategy", s.strategy}};
    trace["w_h"] = s.min_happy ? json(*s.min_happy) : json(nullptr);
    sol.meta.trace_json = trace.dump();
    return sol;
  }
  if (algorithm == "coloured-star") {
    auto res = solve_coloured_star(inst);
    auto sol = make_solution(inst, std::move(res.swaps), algorithm);
    sol.meta.trace_json = json{{"lambda", res.graph.leaf_loops},
                               {"kappa", res.graph.kappa},
                               {"assignment", res.assignment}}
                              .dump();
    return sol;
  }
  if (algorithm == "weighted-coloured-star") {
    return make_solution(inst, solve_weighted_coloured_star(inst), algorithm);
  }
  if (algorithm == "broom") {
    auto res = solve_broom(inst);
    auto sol = make_solution(inst, std::move(res.swaps), algorithm);
    sol.meta.trace_json = broom_trace_json(res.trace).dump();
    return sol;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm " + algorithm);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw Error(ErrorCode::ParseError, "not an integer list: " + text);
    }
    out.push_back(v);
  }
  return out;
}

Instance random_instance(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  Configuration start = identity_configuration(n);
  std::shuffle(start.begin(), start.end(), rng);
  return make_instance(Tree(n, std::move(edges)), std::move(start));
}

json report_json(const HappyLeafReport& r) {
  json sizes = json::array();
  for (const auto& s : r.sizes) {
    sizes.push_back({{"n", s.n},
                     {"trees", s.trees},
                     {"placements", s.placements},
                     {"counterexamples", s.counterexamples}});
  }
  json examples = json::array();
  for (const auto& ex : r.examples) {
    json edges = json::array();
    for (const auto& e : ex.edges) edges.push_back({e.u, e.v});
    examples.push_back({{"edges", edges},
                        {"tokens", ex.placement},
                        {"happy_leaves", ex.happy_leaves},
                        {"distance", ex.distance},
                        {"pinned_distance", ex.pinned_distance}});
  }
  return {{"sizes", sizes}, {"counterexamples", r.counterexamples}, {"examples", examples}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token swapping on trees"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for randomised generators")->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "Exact solution of an instance file");
  std::string solve_file, algorithm = "auto", forbid;
  int max_n = 10, max_n_weighted = 8;
  solve->add_option("file", solve_file, "Instance JSON")->required();
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"auto", "path", "star", "weighted-star", "coloured-star",
                             "weighted-coloured-star", "weighted-coloured-path", "broom",
                             "oracle"}))
      ->capture_default_str();
  solve->add_option("--forbid", forbid, "Comma-separated vertices no swap may touch");
  solve->add_option("--max-n", max_n, "Oracle cap for plain instances")->capture_default_str();
  solve->add_option("--max-n-weighted", max_n_weighted,
                    "Oracle cap for weighted or coloured instances")
      ->capture_default_str();

  // approx
  auto* approx = app.add_subcommand("approx", "Run a 2-approximation algorithm");
  std::string approx_file, method = "happy-swap";
  approx->add_option("file", approx_file, "Instance JSON")->required();
  approx->add_option("--method", method)
      ->check(CLI::IsMember({"happy-swap", "cycle", "vaughan"}))
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a construction");
  std::string family, graph_file, out_file = "-", companion_file;
  int k = 2, b = 3, q = 0, n_random = 8;
  std::int64_t lr = 0;
  gen->add_option("--family", family)
      ->check(CLI::IsMember({"happy-leaf", "tk", "tkb", "vc", "random"}))
      ->required();
  gen->add_option("--k", k)->capture_default_str();
  gen->add_option("--b", b)->capture_default_str();
  gen->add_option("--graph", graph_file, "Source graph JSON {\"n\", \"edges\"} for vc");
  gen->add_option("--q", q, "Cover size for vc");
  gen->add_option("--lr", lr, "Override L_r for vc (structural tests only)");
  gen->add_option("--n", n_random, "Vertex count for random")->capture_default_str();
  gen->add_option("--out", out_file, "Instance output, '-' for stdout")->capture_default_str();
  gen->add_option("--companion", companion_file, "Write the companion solution here");
  std::string cover_list;
  gen->add_option("--cover", cover_list, "Cover for the vc companion (comma-separated)");

  // verify
  auto* verify = app.add_subcommand("verify", "Replay a solution against an instance");
  std::string verify_instance, verify_solution;
  verify->add_option("instance", verify_instance)->required();
  verify->add_option("solution", verify_solution)->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Experiment harness");
  experiment->require_subcommand(1);
  auto* hl = experiment->add_subcommand("happy-leaf-search",
                                        "Search trees for happy-leaf counterexamples");
  int hl_max_n = 8, threads = 0;
  std::size_t max_examples = 20;
  std::string hl_tree;
  bool counterexample_tree = false;
  hl->add_option("--max-n", hl_max_n)->check(CLI::Range(1, 10))->capture_default_str();
  hl->add_option("--threads", threads, "0 = all cores")->capture_default_str();
  hl->add_option("--max-examples", max_examples)->capture_default_str();
  hl->add_option("--tree", hl_tree, "Check only the tree of this instance file");
  hl->add_flag("--counterexample-tree", counterexample_tree,
               "Check only the 10-vertex counterexample tree");
  auto* ratio = experiment->add_subcommand("ratio", "Approximation ratios on hard families");
  std::string ratio_family, ks = "10,100,1000", bs;
  ratio->add_option("--family", ratio_family)->check(CLI::IsMember({"tk", "tkb"}))->required();
  ratio->add_option("--k", ks, "Comma-separated k values")->capture_default_str();
  ratio->add_option("--b", bs, "Comma-separated b values (tkb)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) {
      const auto inst = parse_instance(read_file(solve_file));
      SearchOptions opts;
      opts.forbidden = parse_int_list(forbid);
      opts.max_n = max_n;
      opts.max_n_weighted = max_n_weighted;
      std::cout << serialize_solution(run_exact(inst, algorithm, opts));
      return kOk;
    }
    if (*approx) {
      const auto inst = parse_instance(read_file(approx_file));
      SwapSequence seq;
      if (method == "happy-swap") seq = happy_swap_algorithm(inst);
      if (method == "cycle") seq = cycle_algorithm(inst);
      if (method == "vaughan") seq = vaughan_algorithm(inst);
      std::cout << serialize_solution(make_solution(inst, std::move(seq), method));
      return kOk;
    }
    if (*gen) {
      Instance inst;
      std::optional<Solution> companion;
      if (family == "happy-leaf") {
        auto g = happy_leaf_counterexample();
        inst = std::move(g.instance);
        companion = make_solution(inst, std::move(g.companion), "happy-leaf-companion");
      } else if (family == "tk") {
        auto g = make_tk(k);
        inst = std::move(g.instance);
        companion = make_solution(inst, std::move(g.companion), "tk-companion");
      } else if (family == "tkb") {
        auto g = make_tkb(k, b);
        inst = std::move(g.instance);
        companion = make_solution(inst, std::move(g.companion), "tkb-companion");
      } else if (family == "random") {
        inst = random_instance(n_random, seed);
      } else {
        if (graph_file.empty()) {
          throw Error(ErrorCode::InvalidArgument, "--family vc needs --graph");
        }
        const json g = json::parse(read_file(graph_file));
        VertexCoverInput vc;
        vc.n = g.at("n").get<int>();
        for (const auto& e : g.at("edges")) vc.edges.push_back({e.at(0), e.at(1)});
        vc.q = q;
        auto red = build_vc_reduction(vc, lr > 0 ? std::optional<std::int64_t>(lr)
                                                 : std::nullopt);
        std::cerr << "L_r=" << red.lr << " beta=" << red.beta
                  << " beta'=" << red.beta_prime << " budget=" << red.budget << '\n';
        if (!cover_list.empty()) {
          auto seq = vc_to_sequence(red, parse_int_list(cover_list));
          companion = make_solution(red.instance, std::move(seq), "vc-companion");
        }
        inst = std::move(red.instance);
      }
      write_output(out_file, serialize_instance(inst));
      if (!companion_file.empty()) {
        if (!companion) {
          throw Error(ErrorCode::InvalidArgument, "this family has no companion");
        }
        write_output(companion_file, serialize_solution(*companion));
      }
      return kOk;
    }
    if (*verify) {
      const auto inst = parse_instance(read_file(verify_instance));
      const auto sol = parse_solution(read_file(verify_solution));
      const auto applied = apply_sequence(inst, sol.swaps);
      const bool goal = is_goal(inst, applied.final_placement);
      json report{{"valid", goal},
                  {"goal_reached", goal},
                  {"length", applied.length},
                  {"cost", applied.cost},
                  {"final", applied.final_placement}};
      if (sol.cost != applied.cost || sol.length != applied.length) {
        report["claimed"] = {{"length", sol.length}, {"cost", sol.cost}};
      }
      std::cout << report.dump() << '\n';
      if (!goal) std::cerr << "sequence does not reach the goal\n";
      return goal ? kOk : kFailed;
    }
    if (*hl) {
      HappyLeafReport report;
      if (counterexample_tree) {
        report = happy_leaf_search(happy_leaf_counterexample().instance.tree, max_examples);
      } else if (!hl_tree.empty()) {
        report = happy_leaf_search(parse_instance(read_file(hl_tree)).tree, max_examples);
      } else {
        report = happy_leaf_search(HappyLeafOptions{hl_max_n, threads, max_examples});
      }
      std::cout << report_json(report).dump(2) << '\n';
      return kOk;
    }
    if (*ratio) {
      const auto kv = parse_int_list(ks);
      const auto bv = parse_int_list(bs);
      const auto fam = ratio_family == "tk" ? RatioFamily::Tk : RatioFamily::Tkb;
      write_ratio_csv(std::cout, ratio_experiment(fam, kv, fam == RatioFamily::Tkb && bv.empty() ? kv : bv));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
