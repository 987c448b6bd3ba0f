#include "meandiv/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "meandiv/errors.hpp"
#include "meandiv/primes.hpp"
#include "meandiv/step_function.hpp"

namespace meandiv {

namespace {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;  // exact: out is binomial(n-r+i, i) here
  }
  return out;
}

}  // namespace

BigInt multinomial_term(const Params& params, std::int64_t n) {
  if (n < 1) throw PreconditionViolated("multinomial_term: n must be >= 1");
  BigInt out = 1;
  std::int64_t upper = 0;
  for (std::int64_t m : params.m_list) {
    std::int64_t part = checked_mul(m, n);
    upper += part;
    out *= binomial(upper, part);
  }
  return out;
}

MultinomialStepper::MultinomialStepper(Params params)
    : params_(std::move(params)) {}

const BigInt& MultinomialStepper::advance() {
  const std::int64_t n = n_;
  BigInt num = 1;
  for (std::int64_t j = params_.msum * n + 1; j <= params_.msum * (n + 1); ++j) {
    num *= j;
  }
  BigInt den = 1;
  for (std::int64_t m : params_.m_list) {
    for (std::int64_t j = m * n + 1; j <= m * (n + 1); ++j) {
      den *= j;
    }
  }
  value_ *= num;
  BigInt q, r;
  boost::multiprecision::divide_qr(value_, den, q, r);
  if (r != 0) {
    throw Error("MultinomialStepper: non-integral step");
  }
  value_ = q;
  ++n_;
  return value_;
}

RatioScanner::RatioScanner(const Params& params, std::int64_t k)
    : base_(params), scaled_(params.scaled(k)) {}

const RatioValue& RatioScanner::advance() {
  // ratio(t) = ratio(t-1) * a_{kt} / a_t, re-reduced. The bulk of a_t
  // cancels against a_{kt}, so reduce those two first and only then touch
  // the accumulated numerator, which can run to millions of digits.
  BigInt up = scaled_.advance();
  BigInt down = value_.den * base_.advance();
  BigInt g = boost::multiprecision::gcd(up, down);
  if (g > 1) {
    up /= g;
    down /= g;
  }
  value_.num *= up;
  g = boost::multiprecision::gcd(value_.num, down);
  if (g > 1) {
    value_.num /= g;
    down /= g;
  }
  value_.den = std::move(down);
  ++value_.t;
  return value_;
}

RatioValue ratio_at(const Params& params, std::int64_t k, std::int64_t t) {
  if (t < 0) throw PreconditionViolated("ratio_at: t must be >= 0");
  RatioScanner scan(params, k);
  for (std::int64_t i = 0; i < t; ++i) scan.advance();
  return scan.current();
}

namespace {

// nu_p(a_n) through Legendre's formula on the defining factorials.
std::int64_t term_valuation(const Params& params, std::int64_t n,
                            std::int64_t p) {
  std::int64_t v =
      detail::nu_p_factorial_unchecked(checked_mul(params.msum, n), p);
  for (std::int64_t m : params.m_list) {
    v -= detail::nu_p_factorial_unchecked(checked_mul(m, n), p);
  }
  return v;
}

}  // namespace

std::int64_t valuation_of_ratio(const Params& params, std::int64_t k,
                                std::int64_t p, std::int64_t t) {
  if (!is_prime(p)) {
    throw InvalidPrime("valuation_of_ratio: p = " + std::to_string(p) +
                       " is not prime");
  }
  if (k < 1 || t < 1) {
    throw PreconditionViolated("valuation_of_ratio: requires k >= 1, t >= 1");
  }

  std::int64_t legendre = 0;
  for (std::int64_t n = 1; n <= t; ++n) {
    legendre += term_valuation(params, checked_mul(k, n), p) -
                term_valuation(params, n, p);
  }

  // Independent route: nu_p as a double sum of step-function differences
  // over prime-power denominators; layers with p^e > k m t vanish.
  const std::int64_t cutoff = checked_mul(checked_mul(k, params.msum), t);
  std::int64_t fsum = 0;
  for (std::int64_t pe = p; pe <= cutoff; pe = checked_mul(pe, p)) {
    for (std::int64_t n = 1; n <= t; ++n) {
      fsum += f_value_i64(params, (k * n) % pe, pe) -
              f_value_i64(params, n % pe, pe);
    }
    if (pe > cutoff / p) break;
  }

  if (legendre != fsum) {
    throw Error("valuation_of_ratio: Legendre and step-sum routes disagree");
  }
  return legendre;
}

DenominatorScan scan_denominators(const Params& params, std::int64_t k,
                                  std::int64_t t_max) {
  if (t_max < 0) {
    throw PreconditionViolated("scan_denominators: t_max must be >= 0");
  }
  DenominatorScan out;
  if (t_max == 0) return out;
  const std::int64_t reach = checked_mul(checked_mul(k, params.msum), t_max);
  auto primes = primes_up_to(reach);
  std::vector<std::int64_t> exps(primes.size(), 0);
  std::map<std::int64_t, std::int64_t> negative;  // prime -> -exp > 0
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const std::int64_t horizon = k * params.msum * t;
    for (std::size_t i = 0; i < primes.size() && primes[i] <= horizon; ++i) {
      const std::int64_t p = primes[i];
      std::int64_t delta = term_valuation(params, k * t, p) -
                           term_valuation(params, t, p);
      if (delta == 0) continue;
      exps[i] += delta;
      if (exps[i] < 0) {
        negative[p] = -exps[i];
        out.primes_appeared.insert(p);
      } else {
        negative.erase(p);
      }
    }
    BigInt den = 1;
    for (const auto& [p, e] : negative) {
      den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
    }
    out.rows.emplace_back(t, den);
  }
  return out;
}

std::optional<std::int64_t> first_denominator_hit(const Params& params,
                                                  std::int64_t k,
                                                  std::int64_t p,
                                                  std::int64_t t_cap) {
  if (!is_prime(p)) {
    throw InvalidPrime("first_denominator_hit: p is not prime");
  }
  std::int64_t partial = 0;
  for (std::int64_t t = 1; t <= t_cap; ++t) {
    partial += term_valuation(params, checked_mul(k, t), p) -
               term_valuation(params, t, p);
    if (partial < 0) return t;
  }
  return std::nullopt;
}

bool mean_divisibility_condition(const Params& params) {
  for (std::size_t i = 0; i < params.m_list.size(); ++i) {
    if (params.msum % params.m_list[i] != 0) return false;
    for (std::size_t j = i + 1; j < params.m_list.size(); ++j) {
      if (std::gcd(params.m_list[i], params.m_list[j]) != 1) return false;
    }
  }
  return true;
}

bool gcd_product_inequality_holds(const std::vector<std::int64_t>& b_list) {
  if (b_list.size() < 2) {
    throw PreconditionViolated("gcd_product_inequality: need >= 2 entries");
  }
  std::int64_t g = 0, b = 0;
  for (std::int64_t v : b_list) {
    if (v < 1) {
      throw PreconditionViolated("gcd_product_inequality: entries must be >= 1");
    }
    g = std::gcd(g, v);
    b += v;
  }
  if (g != 1) {
    throw PreconditionViolated("gcd_product_inequality: gcd must be 1");
  }
  const std::int64_t s = static_cast<std::int64_t>(b_list.size()) - 1;
  BigInt lhs = 1, rhs = 1;
  for (std::size_t i = 0; i < b_list.size(); ++i) {
    std::int64_t others = 0;
    for (std::size_t j = 0; j < b_list.size(); ++j) {
      if (j != i) others = std::gcd(others, b_list[j]);
    }
    lhs *= std::gcd(b - b_list[i], b_list[i]);
    lhs *= others;
    rhs *= b - b_list[i];
  }
  // lhs <= prod (b - b_i)/s, compared without fractions.
  return lhs * boost::multiprecision::pow(
                   BigInt(s), static_cast<unsigned>(b_list.size())) <= rhs;
}

bool partial_sum_palindrome(const Params& params, std::int64_t k,
                            std::int64_t p, std::int64_t e, std::int64_t t) {
  if (std::gcd(p, k) != 1) {
    throw PreconditionViolated("partial_sum_palindrome: gcd(p,k) must be 1");
  }
  std::int64_t pe = 1;
  for (std::int64_t i = 0; i < e; ++i) pe = checked_mul(pe, p);
  if (t < 1 || t > pe - 1) {
    throw OutOfRange("partial_sum_palindrome: t must lie in [1, p^e - 1]");
  }
  auto H = [&](std::int64_t upto) {
    std::int64_t sum = 0;
    for (std::int64_t n = 1; n <= upto; ++n) {
      sum += f_value_i64(params, (k * n) % pe, pe) -
             f_value_i64(params, n % pe, pe);
    }
    return sum;
  };
  return H(t) == H(pe - 1 - t);
}

std::vector<BigInt> cyclotomic_terms(std::int64_t ell, std::int64_t trace,
                                     std::int64_t norm, std::int64_t n_max) {
  if (ell != 1 && ell != 2 && ell != 3 && ell != 4 && ell != 6) {
    throw PreconditionViolated(
        "cyclotomic_terms: integer recurrences cover ell in {1,2,3,4,6}");
  }
  // alpha/beta is a root of unity exactly when alpha/beta + beta/alpha =
  // trace^2/norm - 2 lies in {-2,-1,0,1,2}.
  if (norm == 0) throw DegenerateParameters("cyclotomic_terms: norm is 0");
  for (std::int64_t c = 0; c <= 4; ++c) {
    if (trace * trace == c * norm) {
      throw DegenerateParameters(
          "cyclotomic_terms: alpha/beta is a root of unity");
    }
  }

  const std::int64_t top = (ell == 1 || ell == 2) ? n_max : 2 * n_max;
  // e_j = alpha^j + beta^j and u_j = (alpha^j - beta^j)/(alpha - beta),
  // both integral via the (trace, norm) recurrence.
  std::vector<BigInt> e(static_cast<std::size_t>(top) + 1);
  std::vector<BigInt> u(static_cast<std::size_t>(top) + 1);
  std::vector<BigInt> npow(static_cast<std::size_t>(n_max) + 1);
  e[0] = 2;
  u[0] = 0;
  npow[0] = 1;
  if (top >= 1) {
    e[1] = trace;
    u[1] = 1;
  }
  for (std::int64_t j = 2; j <= top; ++j) {
    e[j] = trace * e[j - 1] - norm * e[j - 2];
    u[j] = trace * u[j - 1] - norm * u[j - 2];
  }
  for (std::int64_t j = 1; j <= n_max; ++j) npow[j] = npow[j - 1] * norm;

  std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    switch (ell) {
      case 1: out[n] = u[n]; break;
      case 2: out[n] = e[n]; break;
      case 3: out[n] = e[2 * n] + npow[n]; break;
      case 4: out[n] = e[2 * n]; break;
      case 6: out[n] = e[2 * n] - npow[n]; break;
    }
  }
  return out;
}

bool cyclotomic_sequence_divides(std::int64_t ell, std::int64_t trace,
                                 std::int64_t norm, std::int64_t k,
                                 std::int64_t n_max) {
  if (k < 1 || std::gcd(k, ell) != 1) {
    throw PreconditionViolated(
        "cyclotomic_sequence_divides: requires k >= 1 coprime to ell");
  }
  auto terms = cyclotomic_terms(ell, trace, norm, checked_mul(k, n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const BigInt& c = terms[static_cast<std::size_t>(n)];
    if (c == 0 || terms[static_cast<std::size_t>(k * n)] % c != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace meandiv
