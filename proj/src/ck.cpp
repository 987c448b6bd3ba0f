#include "meandiv/ck.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <future>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "meandiv/errors.hpp"
#include "meandiv/primes.hpp"

namespace meandiv {

namespace {

// Reduced multipliers scanned by the bound: k itself plus k/q^{nu_q(k)}
// for every prime divisor q of k, keeping only values > 1. Descending, so
// k comes first.
std::vector<std::int64_t> kprime_values(std::int64_t k) {
  std::set<std::int64_t, std::greater<>> vals{k};
  std::int64_t rest = k;
  for (std::int64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    std::int64_t reduced = k;
    while (reduced % q == 0) reduced /= q;
    if (reduced > 1) vals.insert(reduced);
    while (rest % q == 0) rest /= q;
  }
  if (rest > 1) {
    std::int64_t reduced = k;
    while (reduced % rest == 0) reduced /= rest;
    if (reduced > 1) vals.insert(reduced);
  }
  return {vals.begin(), vals.end()};
}

void run_chunked(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || n < 16) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> futs;
  for (unsigned w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    }));
  }
  for (auto& f : futs) f.get();
}

}  // namespace

BoundInfo compute_bound(const Params& params, std::int64_t k) {
  if (params.g > 1) {
    throw NotAlmostMeanDivisible(
        "gcd(m_1,...,m_s) = " + std::to_string(params.g) +
        " > 1: the sequence is not almost mean k-divisible");
  }
  if (k < 2) {
    throw PreconditionViolated("compute_bound: k must be >= 2");
  }
  if (params.s() == 1) {
    // a_n = 1 for every n; nothing to scan.
    return BoundInfo{1, {}};
  }
  BoundInfo out;
  Rat worst = 0;
  for (std::int64_t kprime : kprime_values(k)) {
    MinIntegral mi = min_integral(params, kprime);
    std::int64_t E = diff_breakpoints(params, kprime).count;
    if (mi.value <= 0) {
      throw Error("compute_bound: nonpositive minimum with gcd 1");
    }
    out.details.push_back(KprimeDetail{kprime, mi.value, E});
    Rat bound = Rat(2 * (params.s() - 1) * E) / mi.value;
    if (bound > worst) worst = bound;
  }
  BigInt m = rat_ceil(worst);
  if (m > std::numeric_limits<std::int64_t>::max() / 2) {
    throw Error("compute_bound: bound M does not fit the scan range");
  }
  out.M = m.convert_to<std::int64_t>();
  return out;
}

namespace detail {

std::int64_t prime_defect_layers(const Params& params, std::int64_t k,
                                 std::int64_t p, std::int64_t M, int extra) {
  std::int64_t nu = 0;
  std::int64_t kprime = k;
  while (kprime % p == 0) {
    kprime /= p;
    ++nu;
  }
  if (kprime == 1) return 0;  // every layer telescopes to zero

  std::int64_t h = 0;
  std::int64_t ph = 1;
  while (ph <= M / p) {
    ph *= p;
    ++h;
  }
  if (h == 0) return 0;

  // Smallest ell with p^ell >= k'm; together with t < p^h this makes every
  // layer e >= h+ell vanish identically, so the inner sum is exact.
  const std::int64_t km = checked_mul(kprime, params.msum);
  std::int64_t ell = 0;
  std::int64_t pl = 1;
  while (pl < km) {
    pl = checked_mul(pl, p);
    ++ell;
  }

  const std::int64_t layers = h + ell - 1 + extra;
  std::vector<std::int64_t> pe(static_cast<std::size_t>(layers) + 1, 1);
  for (std::int64_t e = 1; e <= layers; ++e) {
    pe[static_cast<std::size_t>(e)] =
        checked_mul(pe[static_cast<std::size_t>(e - 1)], p);
    checked_mul(pe[static_cast<std::size_t>(e)], params.msum);  // overflow probe
  }

  std::int64_t running = 0;
  std::int64_t best = 0;
  for (std::int64_t t = 1; t < ph; ++t) {
    const std::int64_t kt = kprime * t;
    for (std::int64_t e = 1; e <= layers; ++e) {
      const std::int64_t q = pe[static_cast<std::size_t>(e)];
      running += f_value_i64(params, kt % q, q) - f_value_i64(params, t % q, q);
    }
    if (running < best) best = running;
  }
  return best;
}

}  // namespace detail

std::int64_t prime_defect(const Params& params, std::int64_t k, std::int64_t p,
                          std::int64_t M) {
  std::int64_t mu = detail::prime_defect_layers(params, k, p, M, 0);
#ifndef NDEBUG
  // The first truncated layer must contribute nothing on the scanned range.
  assert(mu == detail::prime_defect_layers(params, k, p, M, 1));
#endif
  return mu;
}

CkReport compute_constant(const Params& params, std::int64_t k) {
  CkReport report;
  report.params = params;
  report.k = k;
  report.bound = compute_bound(params, k);
  report.C = 1;

  auto primes = primes_up_to(report.bound.M);
  std::vector<std::int64_t> defect(primes.size(), 0);
  run_chunked(primes.size(), [&](std::size_t i) {
    defect[i] = detail::prime_defect_layers(params, k, primes[i],
                                            report.bound.M, 0);
  });

  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::int64_t p = primes[i];
    std::int64_t kprime = k;
    std::int64_t h = 0, ell = 0;
    while (kprime % p == 0) kprime /= p;
    if (kprime > 1) {
      std::int64_t ph = 1;
      while (ph <= report.bound.M / p) {
        ph *= p;
        ++h;
      }
      std::int64_t pl = 1;
      while (pl < kprime * params.msum) {
        pl = checked_mul(pl, p);
        ++ell;
      }
      report.audit.push_back(PrimeScanAudit{p, kprime, h, ell});
    }
    if (defect[i] != 0) {
      report.mu[p] = defect[i];
      report.C *= boost::multiprecision::pow(BigInt(p),
                                             static_cast<unsigned>(-defect[i]));
    }
  }
  return report;
}

}  // namespace meandiv
