#pragma once

#include <cstdint>
#include <vector>

#include "meandiv/rational.hpp"

namespace meandiv {

/// The exponent tuple (m_1,...,m_s) of a multinomial sequence
///   a_n = ((m_1+...+m_s) n)! / ((m_1 n)! ... (m_s n)!)
/// together with the derived quantities every module needs.
struct Params {
  std::vector<std::int64_t> m_list;
  std::int64_t msum = 0;    // m = sum m_i
  std::int64_t g = 0;       // gcd(m_1,...,m_s)
  std::int64_t lprime = 0;  // lcm(m_1,...,m_s)
  std::int64_t L = 0;       // lcm(msum, m_1,...,m_s)

  int s() const { return static_cast<int>(m_list.size()); }

  /// Validates the list (nonempty, entries >= 1) and fills the derived
  /// fields. Throws PreconditionViolated on bad input.
  static Params of(std::vector<std::int64_t> ms);

  /// Parameters of the subsequence (a_{kn}): every m_i multiplied by k.
  Params scaled(std::int64_t k) const;

  bool operator==(const Params&) const = default;
};

/// A jump discontinuity of a step function: location in (0,1] and the net
/// integer jump after coincident contributions cancelled. jump != 0 always;
/// lists of breakpoints are strictly increasing in loc.
struct Breakpoint {
  Rat loc;
  std::int64_t jump;

  bool operator==(const Breakpoint&) const = default;
};

}  // namespace meandiv
