#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "meandiv/params.hpp"
#include "meandiv/rational.hpp"
#include "meandiv/step_function.hpp"

namespace meandiv {

/// I(u) = integral_0^u (f(kx) - f(x)) dx, evaluated exactly by sweeping the
/// difference function's breakpoints. Requires 0 <= u <= 1 (callers reduce
/// by periodicity first); throws OutOfRange otherwise.
Rat integral_value(const Params& params, std::int64_t k, const Rat& u);

/// The piecewise-linear graph of u -> I(u) on [0,1]: nodes at 0, every
/// breakpoint of f(kx)-f(x), and 1. First node is (0,0), last is (1,0).
struct PiecewiseLinear {
  std::vector<std::pair<Rat, Rat>> nodes;  // (u, I(u)), ascending in u

  /// Linear interpolation between nodes; exact for the true I.
  Rat value_at(const Rat& u) const;
};

PiecewiseLinear integral_profile(const Params& params, std::int64_t k);

/// Sample points for plotting: endpoints, all breakpoints of f(kx)-f(x),
/// and the midpoints in between, each with the exact I value.
std::vector<std::pair<Rat, Rat>> integral_plot_points(const Params& params,
                                                      std::int64_t k);

struct MinIntegral {
  Rat value;   // D = min I(u) over u in [1/m, 1-1/m]
  Rat argmin;  // smallest u attaining it
};

/// Minimum of I over [1/m, 1-1/m] via the candidate set
///   { j/m : 1 <= j <= m/2 }  u  { j/(k' m_i) : k' m_i/m <= j <= k' m_i/2 },
/// exploiting I(u) = I(1-u). Positive whenever gcd(m_i) = 1.
MinIntegral min_integral(const Params& params, std::int64_t kprime);

/// Exhaustive reference: evaluates I at every breakpoint of f(k'x)-f(x)
/// inside [1/m, 1-1/m] plus the interval endpoints. Used to validate the
/// candidate set.
MinIntegral min_integral_exhaustive(const Params& params, std::int64_t kprime);

/// Whether u lies in the equality region
///   union_{a>=0} [a/g - 1/(k m), a/g + 1/(k m)],
/// exactly the set where I(u) = 0. Requires u >= 0.
bool equality_region(const Params& params, std::int64_t k, const Rat& u);

}  // namespace meandiv
