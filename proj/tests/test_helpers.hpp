#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "meandiv/params.hpp"
#include "meandiv/rational.hpp"

namespace testutil {

inline meandiv::Rat random_rat(std::mt19937_64& rng,
                               std::int64_t max_num = 10000,
                               std::int64_t max_den = 10000) {
  std::uniform_int_distribution<std::int64_t> num(-max_num, max_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return meandiv::Rat(num(rng), den(rng));
}

/// Random rational in [0, 1].
inline meandiv::Rat random_unit_rat(std::mt19937_64& rng,
                                    std::int64_t max_den = 10000) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  std::int64_t d = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, d);
  return meandiv::Rat(num(rng), d);
}

inline meandiv::Params random_params(std::mt19937_64& rng, int max_s = 5,
                                     std::int64_t max_m = 8) {
  std::uniform_int_distribution<int> s_dist(1, max_s);
  std::uniform_int_distribution<std::int64_t> m_dist(1, max_m);
  std::vector<std::int64_t> ms;
  for (int i = s_dist(rng); i > 0; --i) ms.push_back(m_dist(rng));
  return meandiv::Params::of(ms);
}

/// Random parameters with gcd(m_i) = 1 and s >= 2.
inline meandiv::Params random_coprime_params(std::mt19937_64& rng,
                                             int max_s = 5,
                                             std::int64_t max_m = 8) {
  for (;;) {
    meandiv::Params p = random_params(rng, max_s, max_m);
    if (p.s() >= 2 && p.g == 1) return p;
  }
}

}  // namespace testutil
