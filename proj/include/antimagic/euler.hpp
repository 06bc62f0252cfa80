#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/graph.hpp"

namespace antimagic {

struct Slot {
  int vertex = 0;
  int edge = 0;  // edge traversed from this slot to the next
};

// Closed Euler walk of one component, viewed as a cyclic slot sequence.
// Slot s contributes the arc between vertex(s) and vertex(s+1 mod length).
struct Circuit {
  int component_index = 0;
  std::vector<Slot> slots;

  int length() const { return static_cast<int>(slots.size()); }
  int vertex(int s) const { return slots[((s % length()) + length()) % length()].vertex; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1));
  return splitmix64(state);
}

// Fisher-Yates with an explicit generator so results do not depend on the stdlib.
template <class T>
inline void seeded_shuffle(std::vector<T>& items, std::uint64_t& state) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace detail

// Hierholzer tour with seeded adjacency order, so tours can be resampled cheaply.
inline Circuit euler_tour(const ComponentInfo& comp, const Graph& g, std::uint64_t seed) {
  if (comp.vertices.empty() || comp.edge_count == 0)
    fail(errc::not_eulerian, "component " + std::to_string(comp.index) + " has no edges");

  std::uint64_t state = seed;
  std::unordered_map<int, std::vector<AdjEntry>> adj;
  std::unordered_map<int, std::size_t> next;
  adj.reserve(comp.vertices.size());
  next.reserve(comp.vertices.size());
  for (int v : comp.vertices) {
    if (g.adj[v].size() % 2 != 0)
      fail(errc::not_eulerian, "vertex " + std::to_string(v) + " has odd degree");
    auto list = g.adj[v];
    detail::seeded_shuffle(list, state);
    adj.emplace(v, std::move(list));
    next.emplace(v, 0);
  }

  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, edge used to enter)
  stack.reserve(comp.edge_count + 1);
  stack.emplace_back(comp.vertices.front(), -1);
  std::vector<std::pair<int, int>> walk;  // reversed closed walk
  walk.reserve(comp.edge_count + 1);

  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& lst = adj.find(v)->second;
    auto& p = next.find(v)->second;
    while (p < lst.size() && used[lst[p].edge]) ++p;
    if (p < lst.size()) {
      used[lst[p].edge] = 1;
      stack.emplace_back(lst[p].to, lst[p].edge);
      ++p;
    } else {
      walk.push_back(stack.back());
      stack.pop_back();
    }
  }

  if (static_cast<int>(walk.size()) != comp.edge_count + 1)
    fail(errc::not_eulerian,
         "component " + std::to_string(comp.index) + " is not connected with even degrees");

  Circuit c;
  c.component_index = comp.index;
  c.slots.resize(comp.edge_count);
  // walk reversed: walk[n-1] is the start; walk[i].second is the edge into walk[i].first.
  const int n = static_cast<int>(walk.size());
  for (int s = 0; s < comp.edge_count; ++s) {
    c.slots[s].vertex = walk[n - 1 - s].first;
    c.slots[s].edge = walk[n - 2 - s].second;
  }
  return c;
}

// Tour that opens with a greedy duplicate-free vertex run, completed by an
// Euler path over the remaining edges. Circuits whose gap constraints reserve
// a long imaginary-only interval need such a run; uniformly random tours
// almost never contain one once the interval spans a sizable fraction of the
// circuit. Returns nothing when the remainder is disconnected (rare); callers
// fall back to a plain tour.
inline std::optional<Circuit> euler_tour_stretch_first(const ComponentInfo& comp, const Graph& g,
                                                       std::uint64_t seed) {
  if (comp.vertices.empty() || comp.edge_count == 0) return std::nullopt;

  std::uint64_t state = seed;
  std::unordered_map<int, std::vector<AdjEntry>> adj;
  std::unordered_map<int, std::size_t> next;
  adj.reserve(comp.vertices.size());
  next.reserve(comp.vertices.size());
  for (int v : comp.vertices) {
    if (g.adj[v].size() % 2 != 0) return std::nullopt;
    auto list = g.adj[v];
    detail::seeded_shuffle(list, state);
    adj.emplace(v, std::move(list));
    next.emplace(v, 0);
  }

  std::vector<char> used(g.edge_count(), 0);
  std::unordered_set<int> visited;
  const int start =
      comp.vertices[detail::splitmix64(state) % comp.vertices.size()];
  std::vector<Slot> stretch;
  int cur = start;
  visited.insert(start);
  while (true) {
    const AdjEntry* pick = nullptr;
    for (const auto& a : adj.find(cur)->second)
      if (!used[a.edge] && !visited.count(a.to)) {
        pick = &a;
        break;
      }
    if (!pick) break;
    stretch.push_back({cur, pick->edge});
    used[pick->edge] = 1;
    visited.insert(pick->to);
    cur = pick->to;
  }
  if (stretch.size() < 2) return std::nullopt;

  // Euler path over the rest, from the run's end back to its start (the only
  // two odd-degree vertices of the remainder).
  std::vector<std::pair<int, int>> stack;
  stack.emplace_back(cur, -1);
  std::vector<std::pair<int, int>> walk;
  walk.reserve(comp.edge_count - stretch.size() + 1);
  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& lst = adj.find(v)->second;
    auto& p = next.find(v)->second;
    while (p < lst.size() && used[lst[p].edge]) ++p;
    if (p < lst.size()) {
      used[lst[p].edge] = 1;
      stack.emplace_back(lst[p].to, lst[p].edge);
      ++p;
    } else {
      walk.push_back(stack.back());
      stack.pop_back();
    }
  }
  const std::size_t remaining = comp.edge_count - stretch.size();
  if (walk.size() != remaining + 1) return std::nullopt;
  if (walk.front().first != start) return std::nullopt;

  Circuit c;
  c.component_index = comp.index;
  c.slots = std::move(stretch);
  c.slots.reserve(comp.edge_count);
  const int n = static_cast<int>(walk.size());
  for (int s = 0; s + 1 < n; ++s)
    c.slots.push_back({walk[n - 1 - s].first, walk[n - 2 - s].second});
  return c;
}

}  // namespace antimagic
