#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "antimagic/euler.hpp"
#include "antimagic/graph.hpp"

namespace helpers {

// Plain n-cycle; each vertex appears once on its Euler tour (unit-test mode).
inline antimagic::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return antimagic::make_graph_unchecked(n, edges);
}

inline antimagic::ComponentInfo single_component(const antimagic::Graph& g) {
  auto comps = antimagic::classify_components(g);
  REQUIRE(comps.size() == 1);
  return comps.front();
}

// Builds a Circuit from an explicit closed tour (vertex sequence, no repeated
// endpoint), resolving edge ids against the graph.
inline antimagic::Circuit circuit_from_tour(const antimagic::Graph& g,
                                            const std::vector<int>& tour,
                                            int component_index = 1) {
  antimagic::Circuit c;
  c.component_index = component_index;
  const int n = static_cast<int>(tour.size());
  for (int s = 0; s < n; ++s) {
    const int u = tour[s];
    const int v = tour[(s + 1) % n];
    int edge = -1;
    for (const auto& a : g.adj[u])
      if (a.to == v) {
        edge = a.edge;
        break;
      }
    REQUIRE(edge >= 0);
    c.slots.push_back({u, edge});
  }
  return c;
}

// Test-side Euler validation, independent of the producer.
inline void check_valid_circuit(const antimagic::Circuit& c, const antimagic::ComponentInfo& comp,
                                const antimagic::Graph& g) {
  REQUIRE(c.length() == comp.edge_count);
  std::set<int> edges_seen;
  std::map<int, int> occurrences;
  for (int s = 0; s < c.length(); ++s) {
    const auto& slot = c.slots[s];
    const auto& next = c.slots[(s + 1) % c.length()];
    REQUIRE(edges_seen.insert(slot.edge).second);
    const auto& [eu, ev] = g.edges[slot.edge];
    const bool matches = (eu == slot.vertex && ev == next.vertex) ||
                         (ev == slot.vertex && eu == next.vertex);
    REQUIRE(matches);
    ++occurrences[slot.vertex];
  }
  REQUIRE(static_cast<int>(occurrences.size()) == comp.order);
  for (int v : comp.vertices) {
    REQUIRE(occurrences.count(v) == 1);
    REQUIRE(occurrences[v] == static_cast<int>(g.adj[v].size()) / 2);
  }
  // a simple graph never repeats an edge between adjacent slots
  for (int s = 0; s < c.length(); ++s)
    REQUIRE(c.vertex(s - 1) != c.vertex(s + 1));
}

}  // namespace helpers
