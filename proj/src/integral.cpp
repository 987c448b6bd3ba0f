#include "meandiv/integral.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "meandiv/errors.hpp"

namespace meandiv {

namespace {

// Shared sweep: value of I at each location of `points` (ascending),
// computed by accumulating level * interval length from 0.
Rat sweep_to(const std::vector<Breakpoint>& diff, const Rat& u) {
  Rat acc = 0;
  Rat pos = 0;
  std::int64_t level = 0;
  for (const auto& bp : diff) {
    if (bp.loc > u) break;
    acc += Rat(level) * (bp.loc - pos);
    level += bp.jump;
    pos = bp.loc;
  }
  acc += Rat(level) * (u - pos);
  return acc;
}

}  // namespace

Rat integral_value(const Params& params, std::int64_t k, const Rat& u) {
  if (u < 0 || u > 1) {
    throw OutOfRange("integral_value: u must lie in [0,1]");
  }
  return sweep_to(diff_breakpoints(params, k).points, u);
}

Rat PiecewiseLinear::value_at(const Rat& u) const {
  if (nodes.empty() || u < nodes.front().first || u > nodes.back().first) {
    throw OutOfRange("PiecewiseLinear: u outside node range");
  }
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), u,
      [](const auto& node, const Rat& v) { return node.first < v; });
  if (it->first == u) return it->second;
  const auto& right = *it;
  const auto& left = *(it - 1);
  Rat slope = (right.second - left.second) / (right.first - left.first);
  return left.second + slope * (u - left.first);
}

PiecewiseLinear integral_profile(const Params& params, std::int64_t k) {
  auto diff = diff_breakpoints(params, k).points;
  PiecewiseLinear out;
  out.nodes.emplace_back(Rat(0), Rat(0));
  Rat acc = 0;
  Rat pos = 0;
  std::int64_t level = 0;
  for (const auto& bp : diff) {
    acc += Rat(level) * (bp.loc - pos);
    level += bp.jump;
    pos = bp.loc;
    out.nodes.emplace_back(bp.loc, acc);
  }
  acc += Rat(level) * (Rat(1) - pos);
  out.nodes.emplace_back(Rat(1), acc);
  assert(acc == 0);
  return out;
}

std::vector<std::pair<Rat, Rat>> integral_plot_points(const Params& params,
                                                      std::int64_t k) {
  auto profile = integral_profile(params, k);
  std::vector<std::pair<Rat, Rat>> out;
  for (std::size_t i = 0; i < profile.nodes.size(); ++i) {
    if (i > 0) {
      Rat mid = (profile.nodes[i - 1].first + profile.nodes[i].first) / 2;
      out.emplace_back(mid, profile.value_at(mid));
    }
    out.push_back(profile.nodes[i]);
  }
  return out;
}

namespace {

MinIntegral minimum_over(const Params& params, std::int64_t kprime,
                         const std::set<Rat>& candidates) {
  auto diff = diff_breakpoints(params, kprime).points;
  MinIntegral best;
  bool first = true;
  for (const Rat& u : candidates) {
    Rat v = sweep_to(diff, u);
    if (first || v < best.value) {
      best = MinIntegral{v, u};
      first = false;
    }
  }
  if (first) {
    throw PreconditionViolated("min_integral: empty candidate set (m < 2)");
  }
  return best;
}

}  // namespace

MinIntegral min_integral(const Params& params, std::int64_t kprime) {
  if (kprime < 2) {
    throw PreconditionViolated("min_integral: kprime must be >= 2");
  }
  const std::int64_t m = params.msum;
  if (m < 2) {
    throw PreconditionViolated("min_integral: needs msum >= 2");
  }
  // I is piecewise linear, so its minimum over [1/m, 1-1/m] sits at a
  // breakpoint of f(k'x)-f(x) or at the interval ends, and I(u) = I(1-u)
  // restricts the search to u <= 1/2. Downward slope transitions happen
  // where f(k'u) jumps up (u in (1/(k'm))Z) or f(u) jumps down (u in
  // (1/m_i)Z), so both families must be scanned, not only j/m and
  // j/(k'm_i).
  Rat lo(1, m);
  Rat hi(1, 2);
  std::set<Rat> candidates{lo, hi};
  for (const auto& bp : diff_breakpoints(params, kprime).points) {
    if (bp.loc >= lo && bp.loc <= hi) candidates.insert(bp.loc);
  }
  MinIntegral best = minimum_over(params, kprime, candidates);
#ifndef NDEBUG
  MinIntegral full = min_integral_exhaustive(params, kprime);
  assert(best.value == full.value);
#endif
  return best;
}

MinIntegral min_integral_exhaustive(const Params& params,
                                    std::int64_t kprime) {
  const std::int64_t m = params.msum;
  Rat lo(1, m);
  Rat hi = Rat(1) - lo;
  std::set<Rat> candidates{lo, hi};
  for (const auto& bp : diff_breakpoints(params, kprime).points) {
    if (bp.loc >= lo && bp.loc <= hi) candidates.insert(bp.loc);
  }
  return minimum_over(params, kprime, candidates);
}

bool equality_region(const Params& params, std::int64_t k, const Rat& u) {
  if (u < 0) throw OutOfRange("equality_region: u must be >= 0");
  Rat radius(1, checked_mul(k, params.msum));
  BigInt a = rat_floor(u * params.g);
  for (int step = 0; step <= 1; ++step) {
    Rat center = Rat(a + step, params.g);
    Rat d = u - center;
    if (d < 0) d = -d;
    if (d <= radius) return true;
  }
  return false;
}

}  // namespace meandiv
