#pragma once

#include <cstdint>

#include "meandiv/params.hpp"
#include "meandiv/rational.hpp"

namespace meandiv {

/// The residue-class sum
///   sum_{j<=km/g} <pj/km> - sum_i sum_{j<=km_i/g} <pj/km_i>
///   - ( sum_{j<=m/g} <pj/m> - sum_i sum_{j<=m_i/g} <pj/m_i> )
/// with <x> the fractional part. Always an integer; depends on p only
/// through p mod kL and flips sign under p <-> kL - p. For a prime
/// p > max{1/kappa, k^2 m} coprime to kL this equals
/// nu_p(ratio(floor(p/g))). Both this form and the floor form are
/// evaluated and cross-checked. Requires gcd(p, kL) = 1 (NotCoprime).
std::int64_t discrete_sum(const Params& params, std::int64_t k,
                          std::int64_t p);

/// The floor form of the same quantity; identically -discrete_sum because
/// the pure-fraction parts telescope to zero.
std::int64_t integer_part_sum(const Params& params, std::int64_t k,
                              std::int64_t p);

/// F(p) = sum_{j<=km/g, k !| j} floor(pj/km)
///        - sum_i sum_{j<=km_i/g, k !| j} floor(pj/km_i),
/// the comparison functional for the m = lcm(m_i) case. Requires
/// msum == lcm(m_i) (PreconditionViolated) and gcd(p, km) = 1 (NotCoprime).
std::int64_t modular_floor_sum(const Params& params, std::int64_t k,
                               std::int64_t p);

/// A concrete non-divisibility certificate: a prime p in a residue class
/// mod kL and t = floor(p/g) with nu_p(ratio(t)) < 0.
struct WitnessReport {
  Params params;
  std::int64_t k = 0;
  std::int64_t kL = 0;
  std::int64_t residue = 0;  // coprime to kL, discrete_sum(residue) < 0
  std::int64_t prime = 0;    // prime == residue (mod kL), beyond the gap/size thresholds
  std::int64_t t = 0;        // floor(prime / g)
  std::int64_t valuation = 0;       // nu_prime(ratio(t)), confirmed < 0
  std::int64_t discrete_value = 0;  // discrete_sum at the residue
};

/// Requires gcd(m_i) > 1 (else AlmostMeanDivisibleRegime) and k >= 2.
/// Scans residues coprime to kL ascending for a negative discrete sum,
/// instantiates the smallest prime in that class exceeding
/// max{1/kappa, k^2 m}, and confirms the negative valuation through the
/// independent Legendre-based oracle. Throws CapExceeded (carrying the
/// residue) when no prime <= prime_cap exists in the class.
WitnessReport find_witness(const Params& params, std::int64_t k,
                           std::int64_t prime_cap = 1000000);

}  // namespace meandiv
