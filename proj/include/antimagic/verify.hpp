#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/layout.hpp"
#include "antimagic/orient.hpp"

namespace antimagic {

// Vertex-major sums over the raw arc list: entering labels minus leaving ones.
// Nothing here trusts how the orientation was produced.
inline std::vector<long long> vertex_sums(const OrientedGraph& og,
                                          const std::vector<int>& edge_labels) {
  if (edge_labels.size() != og.arcs.size())
    fail(errc::invalid_params, "label count does not match arc count");
  std::vector<std::vector<int>> entering(og.vertex_count), leaving(og.vertex_count);
  for (std::size_t e = 0; e < og.arcs.size(); ++e) {
    const auto& [tail, head] = og.arcs[e];
    leaving[tail].push_back(edge_labels[e]);
    entering[head].push_back(edge_labels[e]);
  }
  std::vector<long long> sums(og.vertex_count, 0);
  for (int v = 0; v < og.vertex_count; ++v) {
    long long s = 0;
    for (int lab : entering[v]) s += lab;
    for (int lab : leaving[v]) s -= lab;
    sums[v] = s;
  }
  return sums;
}

// Sums at circuit level, one per slot (each slot is a vertex of the circuit).
inline std::vector<long long> circuit_vertex_sums(const OrientedCircuit& oc,
                                                  const std::vector<int>& slot_labels) {
  if (static_cast<int>(slot_labels.size()) != oc.length)
    fail(errc::invalid_params, "label count does not match circuit length");
  std::vector<long long> sums(oc.length, 0);
  for (int s = 0; s < oc.length; ++s) {
    const int ns = (s + 1) % oc.length;
    if (oc.slot_forward[s]) {
      sums[ns] += slot_labels[s];
      sums[s] -= slot_labels[s];
    } else {
      sums[s] += slot_labels[s];
      sums[ns] -= slot_labels[s];
    }
  }
  return sums;
}

struct VerificationReport {
  bool bijection_ok = false;
  bool antimagic_ok = false;
  std::vector<std::pair<int, int>> collisions;            // vertex pairs with equal sums
  std::vector<std::pair<std::string, bool>> invariants;   // named extra checks

  bool all_ok() const {
    if (!bijection_ok || !antimagic_ok) return false;
    for (const auto& [name, ok] : invariants)
      if (!ok) return false;
    return true;
  }
};

inline VerificationReport check_antimagic(const OrientedGraph& og,
                                          const std::vector<int>& edge_labels) {
  VerificationReport r;
  const int m = static_cast<int>(og.arcs.size());
  r.bijection_ok = static_cast<int>(edge_labels.size()) == m;
  if (r.bijection_ok) {
    std::vector<char> seen(m + 1, 0);
    for (int lab : edge_labels) {
      if (lab < 1 || lab > m || seen[lab]) {
        r.bijection_ok = false;
        break;
      }
      seen[lab] = 1;
    }
  }
  const auto sums = vertex_sums(og, edge_labels);
  std::vector<int> order(og.vertex_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&sums](int a, int b) { return sums[a] != sums[b] ? sums[a] < sums[b] : a < b; });
  for (int i = 0; i < og.vertex_count;) {
    int j = i;
    while (j < og.vertex_count && sums[order[j]] == sums[order[i]]) ++j;
    for (int a = i; a < j; ++a)
      for (int b = a + 1; b < j; ++b) r.collisions.emplace_back(order[a], order[b]);
    i = j;
  }
  r.antimagic_ok = r.bijection_ok && r.collisions.empty();
  return r;
}

// Claim-style identity: the graph-level sum is the real slot's circuit sum
// shifted by the d-1 imaginary copies, each worth -1.
inline bool check_projection_identity(const Layout& lay, const std::vector<long long>& circ_sums,
                                      const std::vector<long long>& graph_sums, int d) {
  for (const auto& [v, slot] : lay.real_slots)
    if (graph_sums[v] != circ_sums[slot] - (d - 1)) return false;
  return true;
}

inline bool check_imaginary_sums(const Layout& lay, const std::vector<long long>& circ_sums) {
  std::vector<char> real(lay.length, 0);
  for (int s : lay.position_slot) real[s] = 1;
  for (int s = 0; s < lay.length; ++s)
    if (!real[s] && circ_sums[s] != -1) return false;
  return true;
}

inline bool check_gap_satisfaction(const PathDecomposition& dec, const GapSpec& spec) {
  for (const auto& [name, len] : spec.exact) {
    auto it = dec.rank_of.find(name);
    if (it == dec.rank_of.end() || dec.paths[it->second].length != len) return false;
  }
  for (const auto& [name, len] : spec.minimum) {
    auto it = dec.rank_of.find(name);
    if (it == dec.rank_of.end() || dec.paths[it->second].length < len) return false;
  }
  return true;
}

// Expected circuit-level sum at the flow vertex v_{j,1} of odd circuit j.
inline long long expected_flow_sum(int j, int p24_len, int p35_len) {
  if (j == 1) return 1;
  if (j <= 8) return -(j - 1);
  if (j == 9) return -static_cast<long long>(p24_len + p35_len + 1);
  return j - 8;
}

}  // namespace antimagic
