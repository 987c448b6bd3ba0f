#include "meandiv/params.hpp"

#include <numeric>

#include "meandiv/errors.hpp"

namespace meandiv {

Params Params::of(std::vector<std::int64_t> ms) {
  if (ms.empty()) {
    throw PreconditionViolated("Params: m_list must be nonempty");
  }
  Params p;
  p.msum = 0;
  p.g = 0;
  p.lprime = 1;
  for (std::int64_t m : ms) {
    if (m < 1) {
      throw PreconditionViolated("Params: every m_i must be >= 1");
    }
    p.msum += m;
    p.g = std::gcd(p.g, m);
    p.lprime = checked_lcm(p.lprime, m);
  }
  p.L = checked_lcm(p.msum, p.lprime);
  p.m_list = std::move(ms);
  return p;
}

Params Params::scaled(std::int64_t k) const {
  std::vector<std::int64_t> ms;
  ms.reserve(m_list.size());
  for (std::int64_t m : m_list) {
    ms.push_back(checked_mul(m, k));
  }
  return Params::of(std::move(ms));
}

}  // namespace meandiv
