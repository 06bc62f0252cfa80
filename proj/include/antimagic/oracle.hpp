#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"

// Brute-force cross-checks for tests and acceptance runs. Deliberately shares
// no computation helpers with the production headers.
namespace antimagic::oracle {

struct OracleConfig {
  int max_exhaustive_arcs = 8;
  int sample_count = 100;
};

// Edge-major recount: single pass, head gains the label, tail loses it.
inline std::vector<long long> recount_sums(int vertex_count,
                                           const std::vector<std::pair<int, int>>& arcs,
                                           const std::vector<int>& labels) {
  if (arcs.size() != labels.size()) fail(errc::invalid_params, "arc/label count mismatch");
  std::vector<long long> sums(vertex_count, 0);
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    sums[arcs[e].second] += labels[e];
    sums[arcs[e].first] -= labels[e];
  }
  return sums;
}

// Tries every bijection [1,m] -> arcs on a small oriented instance.
inline bool exhaustive_antimagic_exists(int vertex_count,
                                        const std::vector<std::pair<int, int>>& arcs,
                                        const OracleConfig& cfg = {}) {
  const int m = static_cast<int>(arcs.size());
  if (m > cfg.max_exhaustive_arcs)
    fail(errc::budget_exceeded,
         std::to_string(m) + " arcs exceeds cap " + std::to_string(cfg.max_exhaustive_arcs));
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<long long> sums(vertex_count);
  do {
    std::fill(sums.begin(), sums.end(), 0);
    for (int e = 0; e < m; ++e) {
      sums[arcs[e].second] += perm[e];
      sums[arcs[e].first] -= perm[e];
    }
    std::vector<long long> sorted = sums;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Scans every x >= 1 against the interval equation family k = (2d-2)x + c with
// c in [3d+7, 5d+4]; exactly one x may match.
inline std::optional<int> x0_brute(int k, int d) {
  if (d < 2 || k < 0) fail(errc::invalid_params, "need d >= 2 and k >= 0");
  std::vector<int> hits;
  for (int x = 1; x <= std::max(k, 1); ++x)
    for (int c = 3 * d + 7; c <= 5 * d + 4; ++c)
      if ((2 * d - 2) * x + c == k) hits.push_back(x);
  if (hits.size() > 1)
    fail(errc::non_unique, "k=" + std::to_string(k) + " d=" + std::to_string(d) +
                               " matches multiple x values");
  if (hits.empty()) return std::nullopt;
  return hits.front();
}

}  // namespace antimagic::oracle
