#include "meandiv/witness.hpp"

#include <numeric>
#include <string>

#include "meandiv/errors.hpp"
#include "meandiv/oracle.hpp"
#include "meandiv/primes.hpp"
#include "meandiv/step_function.hpp"

namespace meandiv {

namespace {

// sum_{j=1}^{jmax} <p j / q> as an exact rational.
Rat frac_sum(std::int64_t p, std::int64_t q, std::int64_t jmax) {
  BigInt num = 0;
  const std::int64_t pr = ((p % q) + q) % q;
  for (std::int64_t j = 1; j <= jmax; ++j) {
    num += (pr * j) % q;
  }
  return Rat(num, q);
}

// sum_{j=1}^{jmax} floor(p j / q), optionally skipping j divisible by k.
std::int64_t floor_sum(std::int64_t p, std::int64_t q, std::int64_t jmax,
                       std::int64_t skip_multiples_of = 0) {
  std::int64_t sum = 0;
  for (std::int64_t j = 1; j <= jmax; ++j) {
    if (skip_multiples_of != 0 && j % skip_multiples_of == 0) continue;
    sum += checked_mul(p, j) / q;
  }
  return sum;
}

}  // namespace

std::int64_t integer_part_sum(const Params& params, std::int64_t k,
                              std::int64_t p) {
  const std::int64_t m = params.msum;
  const std::int64_t g = params.g;
  std::int64_t sum = floor_sum(p, checked_mul(k, m), checked_mul(k, m) / g) -
                     floor_sum(p, m, m / g);
  for (std::int64_t mi : params.m_list) {
    sum -= floor_sum(p, checked_mul(k, mi), checked_mul(k, mi) / g);
    sum += floor_sum(p, mi, mi / g);
  }
  return sum;
}

std::int64_t discrete_sum(const Params& params, std::int64_t k,
                          std::int64_t p) {
  const std::int64_t kL = checked_mul(k, params.L);
  if (p < 1 || std::gcd(p, kL) != 1) {
    throw NotCoprime("discrete_sum: p must be positive and coprime to kL = " +
                     std::to_string(kL));
  }
  const std::int64_t m = params.msum;
  const std::int64_t g = params.g;
  Rat sum = frac_sum(p, checked_mul(k, m), checked_mul(k, m) / g) -
            frac_sum(p, m, m / g);
  for (std::int64_t mi : params.m_list) {
    sum -= frac_sum(p, checked_mul(k, mi), checked_mul(k, mi) / g);
    sum += frac_sum(p, mi, mi / g);
  }
  if (denominator(sum) != 1) {
    throw Error("discrete_sum: non-integer value, bookkeeping bug");
  }
  std::int64_t value = numerator(sum).convert_to<std::int64_t>();
  // The floor form carries the same information with opposite sign; the
  // pure-fraction parts telescope to zero.
  if (value != -integer_part_sum(params, k, p)) {
    throw Error("discrete_sum: fractional and floor forms disagree");
  }
  return value;
}

std::int64_t modular_floor_sum(const Params& params, std::int64_t k,
                               std::int64_t p) {
  if (params.msum != params.lprime) {
    throw PreconditionViolated(
        "modular_floor_sum: defined for msum == lcm(m_i)");
  }
  const std::int64_t km = checked_mul(k, params.msum);
  if (p < 1 || std::gcd(p, km) != 1) {
    throw NotCoprime("modular_floor_sum: p must be coprime to km");
  }
  std::int64_t sum = floor_sum(p, km, km / params.g, k);
  for (std::int64_t mi : params.m_list) {
    std::int64_t kmi = checked_mul(k, mi);
    sum -= floor_sum(p, kmi, kmi / params.g, k);
  }
  return sum;
}

WitnessReport find_witness(const Params& params, std::int64_t k,
                           std::int64_t prime_cap) {
  if (params.g == 1) {
    throw AlmostMeanDivisibleRegime(
        "find_witness: gcd(m_1,...,m_s) = 1, denominators are bounded and no "
        "witness class exists");
  }
  if (k < 2) throw PreconditionViolated("find_witness: k must be >= 2");
  if (params.s() == 1) {
    throw DegenerateParameters(
        "find_witness: single-part sequence is constant 1");
  }

  const std::int64_t kL = checked_mul(k, params.L);
  std::int64_t residue = 0;
  std::int64_t value = 0;
  for (std::int64_t r = 1; r < kL; ++r) {
    if (std::gcd(r, kL) != 1) continue;
    std::int64_t v = discrete_sum(params, k, r);
    if (v < 0) {
      residue = r;
      value = v;
      break;
    }
  }
  if (residue == 0) {
    throw Error("find_witness: no negative residue class found");
  }

  // p must exceed k^2 m and 1/kappa so that the interval (t/p-sized) mesh
  // isolates discontinuities and only the e = 1 layer survives.
  const Rat kappa = min_breakpoint_gap(params, k);
  std::int64_t floor_threshold = checked_mul(checked_mul(k, k), params.msum);
  std::int64_t p = residue;
  while (p <= floor_threshold || Rat(p) * kappa <= 1 || !is_prime(p)) {
    p += kL;
    if (p > prime_cap) {
      throw CapExceeded(
          "find_witness: no prime found in class " + std::to_string(residue) +
              " (mod " + std::to_string(kL) + ") up to the cap",
          residue);
    }
  }

  WitnessReport report;
  report.params = params;
  report.k = k;
  report.kL = kL;
  report.residue = residue;
  report.prime = p;
  report.t = p / params.g;
  report.discrete_value = value;
  report.valuation = valuation_of_ratio(params, k, p, report.t);
  if (report.valuation != value || report.valuation >= 0) {
    throw Error("find_witness: oracle did not confirm the predicted valuation");
  }
  return report;
}

}  // namespace meandiv
