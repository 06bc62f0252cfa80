#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {

struct AdjEntry {
  int to = 0;
  int edge = 0;
};

// Simple undirected graph with uniform even degree 2d.
struct Graph {
  int vertex_count = 0;
  int d = 0;  // half the uniform degree
  std::vector<std::pair<int, int>> edges;     // edge id -> endpoints
  std::vector<std::vector<AdjEntry>> adj;     // vertex -> incident arcs

  int edge_count() const { return static_cast<int>(edges.size()); }
};

namespace detail {

inline void check_edge_shape(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edge_list.size() * 2);
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      fail(errc::invalid_params,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") endpoint out of range");
    if (u == v) fail(errc::self_loop, "vertex " + std::to_string(u));
    const int a = std::min(u, v), b = std::max(u, v);
    const std::uint64_t key =
        static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(vertex_count) + b;
    if (!seen.insert(key).second)
      fail(errc::duplicate_edge, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

inline Graph assemble_graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) {
  Graph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edge_list);
  g.adj.assign(vertex_count, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges[e];
    g.adj[u].push_back({v, e});
    g.adj[v].push_back({u, e});
  }
  if (vertex_count > 0) g.d = static_cast<int>(g.adj[0].size()) / 2;
  return g;
}

}  // namespace detail

// Validated constructor: simple, 2d-regular, d >= 2.
inline Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
  if (vertex_count <= 0) fail(errc::invalid_params, "graph needs at least one vertex");
  detail::check_edge_shape(vertex_count, edge_list);
  Graph g = detail::assemble_graph(vertex_count, edge_list);
  const std::size_t degree = g.adj[0].size();
  for (int v = 0; v < vertex_count; ++v) {
    if (g.adj[v].size() != degree)
      fail(errc::not_regular, "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(g.adj[v].size()) + ", expected " +
                                  std::to_string(degree));
  }
  if (degree % 2 != 0)
    fail(errc::not_regular, "uniform degree " + std::to_string(degree) + " is odd");
  if (degree < 4)
    fail(errc::degree_too_small, "degree " + std::to_string(degree) + " is below 4");
  return g;
}

// Skips the regularity checks; for generators and small test graphs (cycles etc.).
inline Graph make_graph_unchecked(int vertex_count, std::vector<std::pair<int, int>> edge_list) {
  if (vertex_count <= 0) fail(errc::invalid_params, "graph needs at least one vertex");
  detail::check_edge_shape(vertex_count, edge_list);
  return detail::assemble_graph(vertex_count, std::move(edge_list));
}

struct ComponentInfo {
  int index = 0;              // 1-based circuit index; [1,k] are the odd components
  std::vector<int> vertices;  // ascending
  int order = 0;              // t_i
  bool odd = false;
  int edge_count = 0;
};

// Connected components, odd-order components first sorted by (order, smallest vertex),
// even components after in discovery order.
inline std::vector<ComponentInfo> classify_components(const Graph& g) {
  std::vector<int> comp_of(g.vertex_count, -1);
  std::vector<std::vector<int>> members;
  std::vector<int> queue;
  for (int start = 0; start < g.vertex_count; ++start) {
    if (comp_of[start] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    comp_of[start] = id;
    queue.assign(1, start);
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      members[id].push_back(v);
      for (const auto& a : g.adj[v]) {
        if (comp_of[a.to] < 0) {
          comp_of[a.to] = id;
          queue.push_back(a.to);
        }
      }
    }
  }

  std::vector<int> edge_tally(members.size(), 0);
  for (const auto& [u, v] : g.edges) {
    (void)v;
    ++edge_tally[comp_of[u]];
  }

  std::vector<ComponentInfo> infos(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto& info = infos[i];
    info.vertices = std::move(members[i]);
    std::sort(info.vertices.begin(), info.vertices.end());
    info.order = static_cast<int>(info.vertices.size());
    info.odd = info.order % 2 == 1;
    info.edge_count = edge_tally[i];
  }

  std::stable_sort(infos.begin(), infos.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
    if (a.odd != b.odd) return a.odd;
    if (!a.odd) return false;  // even components keep discovery order
    if (a.order != b.order) return a.order < b.order;
    return a.vertices.front() < b.vertices.front();
  });
  for (std::size_t i = 0; i < infos.size(); ++i) infos[i].index = static_cast<int>(i) + 1;
  return infos;
}

inline int odd_component_count(const std::vector<ComponentInfo>& comps) {
  int k = 0;
  for (const auto& c : comps)
    if (c.odd) ++k;
  return k;
}

}  // namespace antimagic
