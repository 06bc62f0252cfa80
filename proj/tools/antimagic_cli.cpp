// Command line front end: orient | verify | gen | x0.
//
// Exit codes:
//   orient: 0 verified antimagic, 1 input error, 2 layout infeasible / budget
//           exhausted / unverified construction (nothing is written on 2)
//   verify: 0 antimagic, 1 malformed input, 3 labeling not antimagic
//   gen/x0: 0 ok, 1 invalid parameters

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antimagic/gen.hpp"
#include "antimagic/io.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/pipeline.hpp"

namespace {

using antimagic::errc;
using antimagic::Error;

std::uint64_t default_seed() {
  const char* env = std::getenv("ANTIMAGIC_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Error(errc::invalid_params, std::string("bad ANTIMAGIC_SEED '") + env + "'");
  }
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::infeasible:
    case errc::budget_exhausted:
      return 2;
    default:
      return 1;
  }
}

int cmd_orient(const std::string& input, const std::string& output,
               std::optional<std::uint64_t> seed_flag, int retry_budget,
               const std::string& format) {
  std::uint64_t seed = seed_flag ? *seed_flag : default_seed();

  antimagic::io::Instance inst = antimagic::io::read_instance(input);
  antimagic::Graph g = antimagic::build_graph(inst.vertex_count, inst.edges);

  antimagic::RunConfig cfg;
  cfg.seed = seed;
  cfg.retry_budget = retry_budget;
  antimagic::RunResult run = antimagic::run_pipeline(g, cfg);

  if (!run.report.antimagic_ok) {
    std::cerr << "construction produced a non-antimagic labeling ("
              << run.report.collisions.size() << " colliding pair(s)); nothing written\n";
    throw Error(errc::budget_exhausted, "verification failed");
  }
  for (const auto& [name, ok] : run.report.invariants)
    if (!ok) std::cerr << "warning: invariant " << name << " failed\n";

  const antimagic::io::ResultFile rf = antimagic::io::build_result(g, run, retry_budget);
  antimagic::io::write_atomic(output, [&rf, &format](std::ostream& out) {
    if (format == "json")
      out << antimagic::io::result_to_json(rf).dump(2) << '\n';
    else if (format == "dot")
      antimagic::io::write_dot(out, rf);
    else
      antimagic::io::write_result(out, rf);
  });

  std::cout << "verified antimagic: n=" << g.vertex_count << " m=" << g.edge_count()
            << " q=" << run.q << " k=" << run.k << " seed=" << seed << '\n';
  return 0;
}

int cmd_verify(const std::string& result_path, const std::string& instance_path) {
  const antimagic::io::ResultFile rf = antimagic::io::read_result(result_path);
  const antimagic::io::Instance inst = antimagic::io::read_instance(instance_path);

  const int m = static_cast<int>(inst.edges.size());
  if (static_cast<int>(rf.arcs.size()) != m)
    antimagic::fail(errc::malformed, "result has " + std::to_string(rf.arcs.size()) +
                                         " arcs but instance has " + std::to_string(m) +
                                         " edges");
  if (rf.vertices != inst.vertex_count)
    antimagic::fail(errc::malformed, "vertex count mismatch");

  // Each arc must realize a distinct instance edge, and labels must be [1,m].
  std::map<std::pair<int, int>, int> remaining;
  for (const auto& [u, v] : inst.edges) ++remaining[{std::min(u, v), std::max(u, v)}];
  std::vector<char> seen(m + 1, 0);
  for (const auto& a : rf.arcs) {
    auto it = remaining.find({std::min(a.from, a.to), std::max(a.from, a.to)});
    if (it == remaining.end() || it->second == 0)
      antimagic::fail(errc::malformed, "arc (" + std::to_string(a.from) + "," +
                                           std::to_string(a.to) + ") is not an instance edge");
    --it->second;
    if (a.label < 1 || a.label > m || seen[a.label])
      antimagic::fail(errc::malformed,
                      "labels must be a bijection onto [1," + std::to_string(m) + "]");
    seen[a.label] = 1;
  }

  std::vector<long long> sums(inst.vertex_count, 0);
  for (const auto& a : rf.arcs) {
    if (a.from < 0 || a.from >= inst.vertex_count || a.to < 0 || a.to >= inst.vertex_count)
      antimagic::fail(errc::malformed, "arc endpoint out of range");
    sums[a.to] += a.label;
    sums[a.from] -= a.label;
  }
  std::vector<long long> sorted = sums;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    std::cout << "not antimagic: equal vertex-sums found\n";
    return 3;
  }
  std::cout << "antimagic: " << m << " arcs, " << inst.vertex_count
            << " pairwise distinct vertex-sums\n";
  return 0;
}

int cmd_gen(int d, const std::string& orders_csv, const std::string& output) {
  antimagic::ComponentSpec spec;
  spec.d = d;
  std::string token;
  std::istringstream ss(orders_csv);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      spec.orders.push_back(std::stoi(token));
    } catch (const std::exception&) {
      antimagic::fail(errc::invalid_params, "bad order '" + token + "'");
    }
  }
  auto [g, report] = antimagic::assemble(spec);

  antimagic::io::Instance inst;
  inst.vertex_count = g.vertex_count;
  inst.edges = g.edges;
  antimagic::io::write_atomic(output,
                              [&inst](std::ostream& out) { antimagic::io::write_instance(out, inst); });

  std::cout << "n=" << g.vertex_count << " m=" << g.edge_count() << " q=" << report.q
            << " k=" << report.k;
  if (report.x0)
    std::cout << " x0=" << report.x0->x0 << " min_first_order=" << report.x0->min_first_order
              << " precondition=" << (report.order_ok ? "ok" : "violated");
  std::cout << '\n';
  if (!report.order_ok)
    std::cerr << "warning: smallest odd order " << report.min_odd_order << " is below "
              << report.x0->min_first_order << "\n";
  return 0;
}

int cmd_x0(int k, int d) {
  const auto r = antimagic::solve_x0(k, d);
  if (!r) {
    std::cout << "none (k <= 5d+4)\n";
  } else {
    std::cout << "x0=" << r->x0 << " min_first_order=" << r->min_first_order << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antimagic orientations of even regular graphs"};
  app.require_subcommand(1);

  std::string input, output, result_path, instance_path;
  std::optional<std::uint64_t> seed_flag;
  int retry_budget = 64;
  std::string format = "text";
  int d = 0, k = 0;
  std::string orders_csv;

  CLI::App* orient = app.add_subcommand("orient", "construct and verify an antimagic labeling");
  orient->add_option("input", input, "instance file")->required();
  orient->add_option("output", output, "result file")->required();
  orient->add_option("--seed", seed_flag, "tour seed (default: ANTIMAGIC_SEED or 0)");
  orient->add_option("--retry-budget", retry_budget, "tour resamples per circuit")
      ->check(CLI::PositiveNumber);
  orient->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  CLI::App* verify = app.add_subcommand("verify", "check a result file against its instance");
  verify->add_option("result", result_path, "result file")->required();
  verify->add_option("instance", instance_path, "instance file")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a disjoint union of circulants");
  gen->add_option("--d", d, "half-degree")->required();
  gen->add_option("--orders", orders_csv, "comma separated component orders")->required();
  gen->add_option("output", output, "instance file to write")->required();

  CLI::App* x0cmd = app.add_subcommand("x0", "solve the interval equation for k odd components");
  x0cmd->add_option("--k", k, "odd component count")->required();
  x0cmd->add_option("--d", d, "half-degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (orient->parsed()) return cmd_orient(input, output, seed_flag, retry_budget, format);
    if (verify->parsed()) return cmd_verify(result_path, instance_path);
    if (gen->parsed()) return cmd_gen(d, orders_csv, output);
    if (x0cmd->parsed()) return cmd_x0(k, d);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
