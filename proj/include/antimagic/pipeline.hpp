#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/euler.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/label.hpp"
#include "antimagic/layout.hpp"
#include "antimagic/orient.hpp"
#include "antimagic/verify.hpp"
#include "antimagic/x0.hpp"

namespace antimagic {

struct RunConfig {
  std::uint64_t seed = 0;
  int retry_budget = 64;
  long node_budget = 500000;
};

struct ComponentRun {
  ComponentInfo info;
  GapSpec spec;
  Circuit circuit;
  Layout layout;
  PathDecomposition dec;
  OrientedCircuit oriented;
  std::vector<int> slot_labels;
  std::vector<long long> circuit_sums;
  int tour_attempts = 1;
};

struct RunResult {
  int d = 0;
  int k = 0;
  int q = 0;
  std::optional<X0Result> x0;
  std::uint64_t seed = 0;
  std::vector<ComponentRun> comps;  // circuit order: odd ascending, then even
  std::vector<int> offsets;         // n_0..n_q
  OrientedGraph dstar;
  std::vector<int> edge_labels;     // edge id -> label
  std::vector<long long> graph_sums;
  VerificationReport report;
};

namespace detail {

inline void verify_run(RunResult& run) {
  run.graph_sums = vertex_sums(run.dstar, run.edge_labels);
  run.report = check_antimagic(run.dstar, run.edge_labels);

  bool imaginary_ok = true;
  bool projection_ok = true;
  bool range_ok = true;
  bool gaps_ok = true;
  for (std::size_t i = 0; i < run.comps.size(); ++i) {
    ComponentRun& cr = run.comps[i];
    cr.circuit_sums = circuit_vertex_sums(cr.oriented, cr.slot_labels);
    imaginary_ok = imaginary_ok && check_imaginary_sums(cr.layout, cr.circuit_sums);
    projection_ok =
        projection_ok && check_projection_identity(cr.layout, cr.circuit_sums, run.graph_sums, run.d);
    for (int lab : cr.slot_labels)
      if (lab <= run.offsets[i] || lab > run.offsets[i + 1]) range_ok = false;
    gaps_ok = gaps_ok && check_gap_satisfaction(cr.dec, cr.spec);
  }

  bool x_ok = true;
  for (int j = 1; j <= run.k; ++j) {
    const ComponentRun& cr = run.comps[j - 1];
    int p24 = 0, p35 = 0;
    if (j == 9) {
      p24 = cr.dec.path({2, 4}).length;
      p35 = cr.dec.path({3, 5}).length;
    }
    const long long actual = cr.circuit_sums[cr.layout.position_slot[0]];
    if (actual != expected_flow_sum(j, p24, p35)) x_ok = false;
  }

  run.report.invariants = {
      {"imaginary_minus_one", imaginary_ok},
      {"projection_identity", projection_ok},
      {"x_formulas", x_ok},
      {"range_split", range_ok},
      {"gap_satisfaction", gaps_ok},
  };
}

}  // namespace detail

// Full construction: tours, layouts, orientation, labels, then verification.
// Throws on invalid input or when no layout fits within the retry budget; the
// returned report says whether the labeling is antimagic.
inline RunResult run_pipeline(const Graph& g, const RunConfig& cfg = {}) {
  RunResult run;
  run.d = g.d;
  run.seed = cfg.seed;
  auto comps = classify_components(g);
  run.q = static_cast<int>(comps.size());
  run.k = odd_component_count(comps);
  run.x0 = solve_x0(run.k, g.d);

  std::vector<Circuit> circuits;
  std::vector<OrientedCircuit> oriented;
  std::vector<PathDecomposition> decs;
  std::vector<PathOrder> orders;
  circuits.reserve(comps.size());

  for (const ComponentInfo& comp : comps) {
    ComponentRun cr;
    cr.info = comp;
    cr.spec = gap_spec(comp.index, run.k, g.d, run.x0);

    const std::uint64_t comp_seed =
        detail::mix_seed(cfg.seed, static_cast<std::uint64_t>(comp.index));
    LayoutOptions opts;
    opts.seed = comp_seed;
    opts.retry_budget = cfg.retry_budget;
    opts.node_budget = cfg.node_budget;
    opts.resample = [&comp, &g](std::uint64_t s) { return euler_tour(comp, g, s); };

    LayoutResult sel = select_reals(euler_tour(comp, g, comp_seed), cr.spec, opts);
    cr.circuit = std::move(sel.circuit);
    cr.layout = std::move(sel.layout);
    cr.tour_attempts = sel.attempts;
    cr.dec = decompose(cr.layout);
    cr.oriented = orient_circuit(cr.dec);

    circuits.push_back(cr.circuit);
    decs.push_back(cr.dec);
    oriented.push_back(cr.oriented);
    orders.push_back(path_order(comp.index, comp.order, comp.odd));
    run.comps.push_back(std::move(cr));
  }

  LabeledOrientation labeled = label_all(decs, oriented, orders);
  run.offsets = labeled.offsets;
  for (std::size_t i = 0; i < run.comps.size(); ++i)
    run.comps[i].slot_labels = std::move(labeled.slot_labels[i]);

  run.dstar = project(circuits, oriented, g);
  run.edge_labels.assign(g.edge_count(), 0);
  for (const ComponentRun& cr : run.comps)
    for (int s = 0; s < cr.circuit.length(); ++s)
      run.edge_labels[cr.circuit.slots[s].edge] = cr.slot_labels[s];

  detail::verify_run(run);
  return run;
}

}  // namespace antimagic
