#include "meandiv/step_function.hpp"

#include <cassert>
#include <map>

#include "meandiv/errors.hpp"

namespace meandiv {

std::int64_t f_value(const Params& params, const Rat& x) {
  BigInt v = rat_floor(Rat(params.msum) * x);
  for (std::int64_t m : params.m_list) {
    v -= rat_floor(Rat(m) * x);
  }
  return v.convert_to<std::int64_t>();
}

std::int64_t f_value_i64(const Params& params, std::int64_t num,
                         std::int64_t den) {
  assert(num >= 0 && den >= 1);
  assert(num <= std::numeric_limits<std::int64_t>::max() / params.msum);
  std::int64_t v = params.msum * num / den;
  for (std::int64_t m : params.m_list) {
    v -= m * num / den;
  }
  return v;
}

namespace {

// Accumulates the +1 jumps at j/up and the -1 jumps at j/(down_i) for all
// locations in (0,1], cancelling coincidences, for an arbitrary signed
// combination of floor terms.
void add_jumps(std::map<Rat, std::int64_t>& net, std::int64_t denom,
               std::int64_t sign) {
  for (std::int64_t j = 1; j <= denom; ++j) {
    net[Rat(j, denom)] += sign;
  }
}

std::vector<Breakpoint> collect(const std::map<Rat, std::int64_t>& net) {
  std::vector<Breakpoint> out;
  for (const auto& [loc, jump] : net) {
    if (jump != 0) {
      out.push_back(Breakpoint{loc, jump});
    }
  }
  return out;
}

}  // namespace

std::vector<Breakpoint> breakpoints_scaled(const Params& params,
                                           std::int64_t k) {
  if (k < 1) throw PreconditionViolated("breakpoints_scaled: k must be >= 1");
  std::map<Rat, std::int64_t> net;
  add_jumps(net, checked_mul(k, params.msum), +1);
  for (std::int64_t m : params.m_list) {
    add_jumps(net, checked_mul(k, m), -1);
  }
  return collect(net);
}

DiffBreakpoints diff_breakpoints(const Params& params, std::int64_t k) {
  if (k < 1) throw PreconditionViolated("diff_breakpoints: k must be >= 1");
  std::map<Rat, std::int64_t> net;
  add_jumps(net, checked_mul(k, params.msum), +1);
  for (std::int64_t m : params.m_list) {
    add_jumps(net, checked_mul(k, m), -1);
  }
  add_jumps(net, params.msum, -1);
  for (std::int64_t m : params.m_list) {
    add_jumps(net, m, +1);
  }
  DiffBreakpoints out;
  for (auto& bp : collect(net)) {
    // The contributions at x = 1 always cancel (f(k) - f(1) jumps by
    // (1-s) - (1-s)); anything surviving there would be a logic error.
    assert(bp.loc < 1);
    if (bp.loc < 1) out.points.push_back(std::move(bp));
  }
  out.count = static_cast<std::int64_t>(out.points.size());
  return out;
}

Rat min_breakpoint_gap(const Params& params, std::int64_t k) {
  auto bps = breakpoints_scaled(params, k);
  if (bps.empty()) {
    throw Error("min_breakpoint_gap: f(kx) has no discontinuities");
  }
  // Wrap-around gap between the last point and the first of the next
  // period: locations repeat with period 1.
  Rat best = bps.front().loc + (Rat(1) - bps.back().loc);
  for (std::size_t i = 1; i < bps.size(); ++i) {
    Rat gap = bps[i].loc - bps[i - 1].loc;
    if (gap < best) best = gap;
  }
  return best;
}

}  // namespace meandiv
