#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/euler.hpp"
#include "antimagic/x0.hpp"

namespace antimagic {

// Name of the real-to-real path between v_{i,a} and v_{i,b}, a < b.
struct PathName {
  int a = 0;
  int b = 0;
  auto operator<=>(const PathName&) const = default;
};

inline PathName path_between(int x, int y) { return x < y ? PathName{x, y} : PathName{y, x}; }

inline std::string to_string(const PathName& p) {
  return "P" + std::to_string(p.a) + "," + std::to_string(p.b);
}

// Required gap lengths for one circuit: exact lengths and lower bounds.
struct GapSpec {
  std::map<PathName, int> exact;
  std::map<PathName, int> minimum;

  bool empty() const { return exact.empty() && minimum.empty(); }
};

// Path length conditions for circuit i out of k odd circuits. Circuit 1 always
// pins its two hub gaps to 1 so the hub sum lands exactly on 1.
inline GapSpec gap_spec(int i, int k, int d, const std::optional<X0Result>& x0) {
  if (i < 1 || k < 0 || d < 1)
    fail(errc::invalid_params, "gap_spec(i=" + std::to_string(i) + ", k=" + std::to_string(k) +
                                   ", d=" + std::to_string(d) + ")");
  if (k >= 5 * d + 5 && !x0) fail(errc::missing_x0, "k=" + std::to_string(k) + " needs x0");

  GapSpec s;
  if (i > k) return s;  // even circuit: unconstrained
  if (i == 1) {
    s.exact[{1, 2}] = 1;
    s.exact[{1, 3}] = 1;
    int bound = 0;
    if (k == 7 || k == 8) {
      bound = 3;
    } else if (k >= 9 && k <= 5 * d + 4) {
      // From circuit 9 on there is a flow vertex summing to -9, so v_{1,3} at
      // -(|P24|+5) needs |P24| >= 5 to stay clear of it.
      bound = std::max(5 * d - 6, 5);
    } else if (k >= 5 * d + 5) {
      bound = std::max((2 * d - 2) * x0->x0 + 5 * d - 6, 5);
    }
    if (bound > 0) s.minimum[{2, 4}] = bound;
  } else if (i >= 3 && i <= 8) {
    s.exact[{2, 4}] = i - 2;
  } else if (i == 9) {
    s.exact[{2, 4}] = 7;
    s.exact[{3, 5}] = 1;
  } else if (i >= 10) {
    s.exact[{1, 3}] = 1;
    s.exact[{1, 2}] = i - 8;
  }
  return s;
}

// Clockwise naming: 1, then the even names ascending, then the odd names >= 3
// descending. Works for both parities; the largest name sits at the apex.
inline std::vector<int> zigzag_names(int t, bool odd) {
  if (odd != (t % 2 == 1))
    fail(errc::invalid_params, "parity flag does not match t=" + std::to_string(t));
  if (t < (odd ? 3 : 4)) fail(errc::too_few_reals, "t=" + std::to_string(t));
  std::vector<int> seq;
  seq.reserve(t);
  seq.push_back(1);
  for (int j = 2; j <= t; j += 2) seq.push_back(j);
  for (int j = odd ? t : t - 1; j >= 3; j -= 2) seq.push_back(j);
  return seq;
}

// One chosen real slot per vertex plus the clockwise naming and gap vector.
struct Layout {
  int component_index = 0;
  int length = 0;  // circuit slot count
  int t = 0;       // real vertex count
  std::vector<int> position_slot;        // clockwise position -> slot; position 0 is v_{i,1}
  std::vector<int> names;                // clockwise position -> zigzag name
  std::vector<int> gaps;                 // position p -> slots between position p and p+1
  std::vector<int> slot_of_name;         // name j (1-based) -> slot; [0] unused
  std::unordered_map<int, int> real_slots;  // graph vertex -> its real slot
};

struct LayoutOptions {
  std::uint64_t seed = 0;
  int retry_budget = 64;
  long node_budget = 500000;  // search nodes per tour attempt
  std::function<Circuit(std::uint64_t)> resample;  // fresh tour per retry; optional
};

namespace detail {

struct GapReq {
  int lower = 1;
  bool exact = false;
};

/*
 * Anchored skeleton search. For each candidate anchor slot (the v_{i,1}
 * position), chains of exact gaps at the front (P12, then P24, ...) and the
 * back (P13, then P35, ...) pin slots outright; the remaining positions are
 * filled clockwise with the smallest workable gaps, backtracking on vertex
 * clashes. A node budget keeps a bad tour from stalling the pipeline; the
 * caller resamples the tour instead.
 */
class LayoutSolver {
 public:
  LayoutSolver(const Circuit& c, const GapSpec& spec, long node_budget)
      : c_(c), length_(c.length()), budget_(node_budget) {
    int max_vertex = 0;
    for (const auto& s : c_.slots) max_vertex = std::max(max_vertex, s.vertex);
    used_.assign(max_vertex + 1, 0);
    std::vector<char> seen(max_vertex + 1, 0);
    t_ = 0;
    for (const auto& s : c_.slots)
      if (!seen[s.vertex]) {
        seen[s.vertex] = 1;
        ++t_;
      }

    names_ = zigzag_names(t_, t_ % 2 == 1);
    req_.assign(t_, {});
    std::map<PathName, int> rank_of;
    for (int p = 0; p < t_; ++p)
      rank_of[path_between(names_[p], names_[(p + 1) % t_])] = p;

    for (const auto& [name, len] : spec.exact) {
      auto it = rank_of.find(name);
      if (it == rank_of.end() || len < 1)
        fail(errc::infeasible, to_string(name) + "=" + std::to_string(len) +
                                   " cannot be realized with t=" + std::to_string(t_));
      req_[it->second] = {len, true};
    }
    for (const auto& [name, len] : spec.minimum) {
      auto it = rank_of.find(name);
      if (it == rank_of.end())
        fail(errc::infeasible, to_string(name) + " does not exist with t=" + std::to_string(t_));
      auto& r = req_[it->second];
      if (r.exact) {
        if (r.lower < len)
          fail(errc::infeasible, to_string(name) + " exact length is below its minimum");
      } else {
        r.lower = std::max(r.lower, len);
      }
    }

    min_suffix_.assign(t_ + 1, 0);
    for (int p = t_ - 1; p >= 0; --p) min_suffix_[p] = min_suffix_[p + 1] + req_[p].lower;
    if (min_suffix_[0] > length_)
      fail(errc::infeasible, "required gap lengths total " + std::to_string(min_suffix_[0]) +
                                 " but the circuit has " + std::to_string(length_) + " slots");

    pin_.assign(t_, -1);
    pin_[0] = 0;
    prefix_end_ = 0;
    int off = 0;
    while (prefix_end_ < t_ - 1 && req_[prefix_end_].exact) {
      off += req_[prefix_end_].lower;
      pin_[prefix_end_ + 1] = off;
      ++prefix_end_;
    }
    suffix_start_ = t_;
    off = length_;
    while (suffix_start_ - 1 > prefix_end_ && req_[suffix_start_ - 1].exact) {
      off -= req_[suffix_start_ - 1].lower;
      --suffix_start_;
      pin_[suffix_start_] = off;
    }
    target_off_ = suffix_start_ == t_ ? length_ : pin_[suffix_start_];
    const int needed = min_suffix_[prefix_end_] - min_suffix_[suffix_start_];
    if (pin_[prefix_end_] + needed > target_off_)
      fail(errc::infeasible, "pinned gap chains leave no room for the free positions");
  }

  std::optional<Layout> solve() {
    sel_.assign(t_, -1);
    for (int anchor = 0; anchor < length_ && nodes_ <= budget_; ++anchor) {
      if (try_anchor(anchor)) return build(anchor);
    }
    return std::nullopt;
  }

 private:
  bool satisfied(const GapReq& r, int gap) const {
    return r.exact ? gap == r.lower : gap >= r.lower;
  }

  bool try_anchor(int anchor) {
    ++nodes_;
    anchor_ = anchor;
    touched_.clear();
    bool ok = true;
    for (int p = 0; p < t_ && ok; ++p) {
      if (pin_[p] < 0) continue;
      const int v = c_.slots[(anchor + pin_[p]) % length_].vertex;
      if (used_[v]) {
        ok = false;
      } else {
        used_[v] = 1;
        touched_.push_back(v);
        sel_[p] = pin_[p];
      }
    }
    if (ok) ok = place(prefix_end_);
    if (!ok)
      for (int v : touched_) used_[v] = 0;
    return ok;
  }

  bool place(int p) {
    const int off = sel_[p];
    if (p + 1 == suffix_start_) {
      const int gap = target_off_ - off;
      return gap >= 1 && satisfied(req_[p], gap);
    }
    if (++nodes_ > budget_) return false;
    int hi = target_off_ - off - (min_suffix_[p + 1] - min_suffix_[suffix_start_]);
    const int lo = req_[p].lower;
    if (req_[p].exact) {
      if (lo > hi) return false;
      hi = lo;
    }
    for (int gap = lo; gap <= hi; ++gap) {
      const int v = c_.slots[(anchor_ + off + gap) % length_].vertex;
      if (used_[v]) continue;
      if (++nodes_ > budget_) return false;
      used_[v] = 1;
      sel_[p + 1] = off + gap;
      if (place(p + 1)) return true;
      used_[v] = 0;
    }
    return false;
  }

  Layout build(int anchor) const {
    Layout lay;
    lay.component_index = c_.component_index;
    lay.length = length_;
    lay.t = t_;
    lay.names = names_;
    lay.position_slot.resize(t_);
    lay.gaps.resize(t_);
    lay.slot_of_name.assign(t_ + 1, -1);
    lay.real_slots.reserve(t_);
    for (int p = 0; p < t_; ++p) {
      const int slot = (anchor + sel_[p]) % length_;
      lay.position_slot[p] = slot;
      lay.slot_of_name[names_[p]] = slot;
      lay.real_slots.emplace(c_.slots[slot].vertex, slot);
      const int next_off = p + 1 < t_ ? sel_[p + 1] : length_;
      lay.gaps[p] = next_off - sel_[p];
    }
    return lay;
  }

  const Circuit& c_;
  int length_ = 0;
  int t_ = 0;
  long budget_ = 0;
  long nodes_ = 0;
  int anchor_ = 0;
  int prefix_end_ = 0;
  int suffix_start_ = 0;
  int target_off_ = 0;
  std::vector<int> names_;
  std::vector<GapReq> req_;
  std::vector<int> min_suffix_;
  std::vector<int> pin_;
  std::vector<int> sel_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

inline std::optional<Layout> try_layout(const Circuit& c, const GapSpec& spec, long node_budget) {
  LayoutSolver solver(c, spec, node_budget);
  return solver.solve();
}

}  // namespace detail

struct LayoutResult {
  Circuit circuit;  // the tour actually used (may differ from the input after resampling)
  Layout layout;
  int attempts = 1;
};

// Deterministic anchored search over the given tour; on failure, resamples the
// tour through opts.resample until the retry budget runs out.
inline LayoutResult select_reals(Circuit circuit, const GapSpec& spec,
                                 const LayoutOptions& opts = {}) {
  int attempts = 0;
  while (true) {
    ++attempts;
    auto layout = detail::try_layout(circuit, spec, opts.node_budget);
    if (layout) return {std::move(circuit), std::move(*layout), attempts};
    if (attempts >= opts.retry_budget || !opts.resample)
      fail(errc::budget_exhausted, "no valid real-vertex selection after " +
                                       std::to_string(attempts) + " tour(s) of circuit " +
                                       std::to_string(circuit.component_index));
    circuit = opts.resample(detail::mix_seed(opts.seed, static_cast<std::uint64_t>(attempts)));
  }
}

// One clockwise real-to-real path of a circuit.
struct CircuitPath {
  PathName name;
  int rank = 0;        // clockwise rank, 0-based
  int start_slot = 0;  // slot of the earlier endpoint
  int length = 0;
};

struct PathDecomposition {
  int component_index = 0;
  int t = 0;
  int length = 0;
  bool odd = false;
  std::vector<CircuitPath> paths;      // by clockwise rank
  std::map<PathName, int> rank_of;

  const CircuitPath& path(const PathName& name) const {
    auto it = rank_of.find(name);
    if (it == rank_of.end()) fail(errc::invalid_params, to_string(name) + " not in decomposition");
    return paths[it->second];
  }
};

inline PathDecomposition decompose(const Layout& lay) {
  PathDecomposition dec;
  dec.component_index = lay.component_index;
  dec.t = lay.t;
  dec.length = lay.length;
  dec.odd = lay.t % 2 == 1;
  dec.paths.resize(lay.t);
  for (int p = 0; p < lay.t; ++p) {
    CircuitPath& path = dec.paths[p];
    path.name = path_between(lay.names[p], lay.names[(p + 1) % lay.t]);
    path.rank = p;
    path.start_slot = lay.position_slot[p];
    path.length = lay.gaps[p];
    dec.rank_of[path.name] = p;
  }
  return dec;
}

}  // namespace antimagic
