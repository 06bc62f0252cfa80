#pragma once

#include <optional>
#include <string>

#include "antimagic/errors.hpp"

namespace antimagic {

// Interval parameter for the many-odd-components regime. For k >= 5d+5 the
// integers partition into windows [(2d-2)x+3d+7, (2d-2)x+5d+4], one per x >= 1;
// x0 is the window containing k and 2*x0+5 the least workable first-component order.
struct X0Result {
  int x0 = 0;
  int low = 0;
  int high = 0;
  int min_first_order = 0;
};

inline std::optional<X0Result> solve_x0(int k, int d) {
  if (d < 2 || k < 0)
    fail(errc::invalid_params, "need d >= 2 and k >= 0, got d=" + std::to_string(d) +
                                   " k=" + std::to_string(k));
  if (k <= 5 * d + 4) return std::nullopt;
  const int x0 = (k - 3 * d - 7) / (2 * d - 2);
  X0Result r;
  r.x0 = x0;
  r.low = (2 * d - 2) * x0 + 3 * d + 7;
  r.high = (2 * d - 2) * x0 + 5 * d + 4;
  r.min_first_order = 2 * x0 + 5;
  return r;
}

}  // namespace antimagic
