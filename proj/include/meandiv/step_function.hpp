#pragma once

#include <cstdint>
#include <vector>

#include "meandiv/params.hpp"
#include "meandiv/rational.hpp"

namespace meandiv {

/// f(x) = floor(m x) - sum_i floor(m_i x).
/// Periodic with period 1 and takes values in {0,...,s-1}.
std::int64_t f_value(const Params& params, const Rat& x);

/// f(num/den) on machine integers for hot loops. Requires num >= 0 and
/// den >= 1, and msum * num must fit in int64 (callers keep both small).
std::int64_t f_value_i64(const Params& params, std::int64_t num,
                         std::int64_t den);

/// Net-jump breakpoints of x -> f(kx) on (0,1], ascending. Locations where
/// coincident +1/-1 contributions cancel completely are dropped.
std::vector<Breakpoint> breakpoints_scaled(const Params& params,
                                           std::int64_t k);

struct DiffBreakpoints {
  std::vector<Breakpoint> points;  // breakpoints of f(kx)-f(x) in (0,1)
  std::int64_t count;              // = points.size(), the paper-exact E
};

/// Cancellation-aware breakpoints of the difference x -> f(kx) - f(x).
/// For k = 1 the two functions coincide and the list is empty.
DiffBreakpoints diff_breakpoints(const Params& params, std::int64_t k);

/// Minimum gap between adjacent discontinuities of x -> f(kx), taking the
/// periodic extension into account. Throws Error when f has no
/// discontinuities (s = 1).
Rat min_breakpoint_gap(const Params& params, std::int64_t k);

}  // namespace meandiv
