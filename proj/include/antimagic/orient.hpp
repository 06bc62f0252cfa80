#pragma once

#include <string>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/euler.hpp"
#include "antimagic/layout.hpp"

namespace antimagic {

enum class VertexRole { source, sink, flow };

// Circuit orientation: roles alternate along the clockwise real order and each
// path runs from its source end to its sink end. Odd circuits route one arc
// through v_{i,1} (the flow vertex); even circuits split reals into sources
// and sinks outright.
struct OrientedCircuit {
  int component_index = 0;
  bool odd = false;
  int t = 0;
  int length = 0;
  std::vector<VertexRole> role;      // by clockwise position
  std::vector<bool> path_forward;    // by rank: true = along increasing slots
  std::vector<bool> slot_forward;    // by slot: arc direction vs tour direction
};

inline OrientedCircuit orient_circuit(const PathDecomposition& dec) {
  OrientedCircuit oc;
  oc.component_index = dec.component_index;
  oc.odd = dec.odd;
  oc.t = dec.t;
  oc.length = dec.length;
  oc.role.resize(dec.t);
  for (int p = 0; p < dec.t; ++p) {
    if (dec.odd)
      oc.role[p] = p == 0 ? VertexRole::flow
                          : (p % 2 == 1 ? VertexRole::sink : VertexRole::source);
    else
      oc.role[p] = p % 2 == 0 ? VertexRole::source : VertexRole::sink;
  }
  oc.path_forward.resize(dec.t);
  oc.slot_forward.assign(dec.length, false);
  for (int p = 0; p < dec.t; ++p) {
    const VertexRole from = oc.role[p];
    const VertexRole to = oc.role[(p + 1) % dec.t];
    const bool forward = from == VertexRole::source || to == VertexRole::sink;
    oc.path_forward[p] = forward;
    const CircuitPath& path = dec.paths[p];
    for (int j = 0; j < path.length; ++j)
      oc.slot_forward[(path.start_slot + j) % dec.length] = forward;
  }
  return oc;
}

// Per-edge direction on the original graph.
struct OrientedGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;  // edge id -> (tail, head)
};

inline OrientedGraph project(const std::vector<Circuit>& circuits,
                             const std::vector<OrientedCircuit>& oriented, const Graph& g) {
  if (circuits.size() != oriented.size())
    fail(errc::invalid_params, "circuit/orientation count mismatch");
  OrientedGraph og;
  og.vertex_count = g.vertex_count;
  og.arcs.assign(g.edge_count(), {-1, -1});
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    const Circuit& c = circuits[i];
    const OrientedCircuit& oc = oriented[i];
    for (int s = 0; s < c.length(); ++s) {
      const int u = c.slots[s].vertex;
      const int v = c.slots[(s + 1) % c.length()].vertex;
      const int e = c.slots[s].edge;
      if (og.arcs[e].first != -1)
        fail(errc::invalid_params, "edge " + std::to_string(e) + " oriented twice");
      og.arcs[e] = oc.slot_forward[s] ? std::make_pair(u, v) : std::make_pair(v, u);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (og.arcs[e].first == -1)
      fail(errc::invalid_params, "edge " + std::to_string(e) + " not covered by any circuit");
  return og;
}

}  // namespace antimagic
