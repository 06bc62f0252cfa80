#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/x0.hpp"

namespace antimagic {

// Circulant C_n(1..d): vertex i adjacent to i+-1, ..., i+-d mod n.
// Connected, simple and 2d-regular whenever n >= 2d+1.
inline Graph circulant(int n, int d) {
  if (d < 2) fail(errc::invalid_params, "d=" + std::to_string(d) + " is below 2");
  if (n < 2 * d + 1)
    fail(errc::too_small,
         "n=" + std::to_string(n) + " is below 2d+1=" + std::to_string(2 * d + 1));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * d);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= d; ++j) edges.emplace_back(i, (i + j) % n);
  return build_graph(n, edges);
}

struct ComponentSpec {
  int d = 0;
  std::vector<int> orders;
};

struct PreconditionReport {
  int k = 0;
  int q = 0;
  std::optional<X0Result> x0;
  int min_odd_order = 0;  // 0 when there is no odd component
  bool order_ok = true;   // min odd order >= 2*x0+5 when x0 applies
};

// Disjoint union of circulants with the stated orders, plus a report on the
// first-component order requirement. Violations are reported, never rejected.
inline std::pair<Graph, PreconditionReport> assemble(const ComponentSpec& spec) {
  if (spec.orders.empty()) fail(errc::invalid_params, "no component orders given");
  std::vector<std::pair<int, int>> edges;
  int offset = 0;
  for (int n : spec.orders) {
    const Graph block = circulant(n, spec.d);
    for (const auto& [u, v] : block.edges) edges.emplace_back(u + offset, v + offset);
    offset += n;
  }
  Graph g = build_graph(offset, edges);

  PreconditionReport report;
  report.q = static_cast<int>(spec.orders.size());
  int min_odd = 0;
  for (int n : spec.orders) {
    if (n % 2 == 1) {
      ++report.k;
      min_odd = min_odd == 0 ? n : std::min(min_odd, n);
    }
  }
  report.min_odd_order = min_odd;
  report.x0 = solve_x0(report.k, spec.d);
  report.order_ok = !report.x0 || min_odd >= report.x0->min_first_order;
  return {std::move(g), report};
}

}  // namespace antimagic
