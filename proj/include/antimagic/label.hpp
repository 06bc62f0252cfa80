#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/layout.hpp"
#include "antimagic/orient.hpp"

namespace antimagic {

// Order in which a circuit's paths receive their label blocks.
struct PathOrder {
  int component_index = 0;
  std::vector<PathName> order;
};

// Default block order: P12, P13, then P_{j,j+2} ascending, then P_{t-1,t}.
// Odd circuits 2..9 reshuffle the head of the list; the offsets those shifts
// produce at v_{i,1} are what keeps the flow sums pairwise distinct.
inline PathOrder path_order(int i, int t, bool odd) {
  if (t < 3) fail(errc::too_few_reals, "t=" + std::to_string(t));
  std::vector<PathName> order;
  order.reserve(t);
  order.push_back({1, 2});
  order.push_back({1, 3});
  for (int j = 2; j <= t - 2; ++j) order.push_back({j, j + 2});
  order.push_back({t - 1, t});

  auto move_after = [&order](PathName what, PathName pivot) {
    auto from = std::find(order.begin(), order.end(), what);
    if (from == order.end()) return;
    order.erase(from);
    auto to = std::find(order.begin(), order.end(), pivot);
    if (to == order.end())
      order.insert(order.begin(), what);
    else
      order.insert(to + 1, what);
  };

  if (odd && i == 2) {
    std::swap(order[0], order[1]);
  } else if (odd && i >= 3 && i <= 8) {
    move_after({1, 2}, {2, 4});
  } else if (odd && i == 9) {
    move_after({1, 2}, {3, 5});
  }

  PathOrder po;
  po.component_index = i;
  po.order = std::move(order);
  return po;
}

// Prefix sums n_0..n_q of the circuit lengths, odd circuits first.
inline std::vector<int> label_offsets(const std::vector<int>& circuit_lengths) {
  std::vector<int> offs(circuit_lengths.size() + 1, 0);
  for (std::size_t i = 0; i < circuit_lengths.size(); ++i)
    offs[i + 1] = offs[i] + circuit_lengths[i];
  return offs;
}

// Labels base+1 .. base+length, one consecutive block per path in block order,
// increasing along each path's direction. Returns slot -> label.
inline std::vector<int> label_circuit(const PathDecomposition& dec, const OrientedCircuit& oc,
                                      const PathOrder& po, int base) {
  if (static_cast<int>(po.order.size()) != dec.t)
    fail(errc::invalid_params, "path order size does not match decomposition");
  std::vector<int> labels(dec.length, 0);
  int next = base;
  for (const PathName& name : po.order) {
    const CircuitPath& path = dec.path(name);
    const bool forward = oc.path_forward[path.rank];
    for (int j = 0; j < path.length; ++j) {
      const int slot = (path.start_slot + j) % dec.length;
      labels[slot] = forward ? next + 1 + j : next + path.length - j;
    }
    next += path.length;
  }
  if (next != base + dec.length)
    fail(errc::invalid_params, "path order does not cover the circuit");
  return labels;
}

struct LabeledOrientation {
  std::vector<int> offsets;                   // n_0..n_q
  std::vector<std::vector<int>> slot_labels;  // per circuit: slot -> label
};

inline LabeledOrientation label_all(const std::vector<PathDecomposition>& decs,
                                    const std::vector<OrientedCircuit>& oriented,
                                    const std::vector<PathOrder>& orders) {
  if (decs.size() != oriented.size() || decs.size() != orders.size())
    fail(errc::invalid_params, "labeling input sizes differ");
  std::vector<int> lengths;
  lengths.reserve(decs.size());
  for (const auto& d : decs) lengths.push_back(d.length);
  LabeledOrientation out;
  out.offsets = label_offsets(lengths);
  out.slot_labels.reserve(decs.size());
  for (std::size_t i = 0; i < decs.size(); ++i)
    out.slot_labels.push_back(label_circuit(decs[i], oriented[i], orders[i], out.offsets[i]));
  return out;
}

}  // namespace antimagic
