#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "meandiv/integral.hpp"
#include "meandiv/params.hpp"
#include "meandiv/rational.hpp"

namespace meandiv {

struct KprimeDetail {
  std::int64_t kprime;
  Rat D;           // min of I over [1/m, 1-1/m] for this k'
  std::int64_t E;  // number of discontinuities of f(k'x)-f(x) in (0,1)
};

struct BoundInfo {
  std::int64_t M;  // ceil of max over k' of 2(s-1)E/D; primes <= M are scanned
  std::vector<KprimeDetail> details;  // k first, then the reduced k' values
};

/// The prime search bound M. k' runs over k itself and k/q^{nu_q(k)} for
/// every prime divisor q of k when that quotient exceeds 1.
/// Throws NotAlmostMeanDivisible when gcd(m_i) > 1; s = 1 degenerates to
/// the constant sequence a_n = 1 and returns M = 1.
BoundInfo compute_bound(const Params& params, std::int64_t k);

/// mu(p) <= 0: the most negative value over 1 <= t < p^h of
///   sum_{n<=t} sum_{e=1}^{h+l-1} ( f(k'n/p^e) - f(n/p^e) ),
/// clamped at 0, where k' = k/p^{nu_p(k)}, h is maximal with p^h <= M and
/// l is minimal with p^l >= k'm (so every e >= h+l layer vanishes on the
/// scanned range). Returns 0 immediately when k' = 1.
std::int64_t prime_defect(const Params& params, std::int64_t k, std::int64_t p,
                          std::int64_t M);

namespace detail {
/// Same scan with `extra` additional inner layers; those layers are
/// identically zero for t < p^h, which tests assert.
std::int64_t prime_defect_layers(const Params& params, std::int64_t k,
                                 std::int64_t p, std::int64_t M, int extra);
}  // namespace detail

/// Per-prime exponents used by the scan, kept for auditability.
struct PrimeScanAudit {
  std::int64_t p;
  std::int64_t kprime;
  std::int64_t h;
  std::int64_t ell;
};

/// Full output of the constant computation: prod_{n<=t} a_{kn} / a_n lands
/// in (1/C) Z for every t.
struct CkReport {
  Params params;
  std::int64_t k;
  BoundInfo bound;
  std::map<std::int64_t, std::int64_t> mu;  // prime -> negative defect; zeros omitted
  BigInt C;                                 // prod p^{|mu(p)|}
  std::vector<PrimeScanAudit> audit;        // primes with k' > 1 only
};

/// Runs the whole pipeline: bound, per-prime defects (in parallel), C.
/// Throws NotAlmostMeanDivisible when gcd(m_i) > 1.
CkReport compute_constant(const Params& params, std::int64_t k);

}  // namespace meandiv
