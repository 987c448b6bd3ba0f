#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "meandiv/params.hpp"
#include "meandiv/rational.hpp"

namespace meandiv {

/// a_n = ((m_1+...+m_s) n)! / prod_i (m_i n)!, computed as a product of
/// binomial coefficients; exact and integral by construction.
BigInt multinomial_term(const Params& params, std::int64_t n);

/// Incremental generator of a_1, a_2, ... ; each advance() multiplies by
/// the exact rational step a_{n+1}/a_n (the division always comes out even).
class MultinomialStepper {
 public:
  explicit MultinomialStepper(Params params);

  const BigInt& advance();
  const BigInt& value() const { return value_; }
  std::int64_t index() const { return n_; }

 private:
  Params params_;
  std::int64_t n_ = 0;
  BigInt value_{1};
};

/// prod_{n<=t} a_{kn} / prod_{n<=t} a_n in lowest terms.
struct RatioValue {
  std::int64_t t = 0;
  BigInt num{1};
  BigInt den{1};
};

/// Incremental reduced-fraction accumulator for the product ratio:
/// ratio(t) = ratio(t-1) * a_{kt} / a_t, re-reduced each step.
class RatioScanner {
 public:
  RatioScanner(const Params& params, std::int64_t k);

  const RatioValue& advance();
  const RatioValue& current() const { return value_; }

 private:
  MultinomialStepper base_;
  MultinomialStepper scaled_;
  RatioValue value_;
};

RatioValue ratio_at(const Params& params, std::int64_t k, std::int64_t t);

/// nu_p of the product ratio at index t, computed two independent ways
/// (Legendre sums over factorials, and double sums of f over prime-power
/// denominators) which must agree; disagreement throws Error.
std::int64_t valuation_of_ratio(const Params& params, std::int64_t k,
                                std::int64_t p, std::int64_t t);

struct DenominatorScan {
  std::vector<std::pair<std::int64_t, BigInt>> rows;  // (t, den(ratio(t)))
  std::set<std::int64_t> primes_appeared;  // primes dividing some den, t <= t_max
};

/// Denominators of ratio(t) for t = 1..t_max, tracked through per-prime
/// valuations (equivalent to reducing the big-integer ratio, and cheap
/// enough to push t_max into the thousands).
DenominatorScan scan_denominators(const Params& params, std::int64_t k,
                                  std::int64_t t_max);

/// Smallest t <= t_cap at which p divides den(ratio(t)), if any.
std::optional<std::int64_t> first_denominator_hit(const Params& params,
                                                  std::int64_t k,
                                                  std::int64_t p,
                                                  std::int64_t t_cap);

/// True iff the m_i are pairwise coprime and every m_i divides msum; the
/// sequence is then mean divisible (all ratios are integers for every k).
bool mean_divisibility_condition(const Params& params);

/// The gcd product inequality behind the induction step:
///   prod_i ( gcd(b - b_i, b_i) * gcd_{j != i} b_j ) <= prod_i (b - b_i)/s
/// for positive b_1..b_{s+1} with gcd 1 and b = sum b_i. Exposed for
/// property testing; must hold whenever the precondition does.
bool gcd_product_inequality_holds(const std::vector<std::int64_t>& b_list);

/// Palindrome identity of partial sums: with H(t) = sum_{n<=t}
/// (f(kn/p^e) - f(n/p^e)) and gcd(p,k) = 1, checks H(t) == H(p^e - 1 - t).
bool partial_sum_palindrome(const Params& params, std::int64_t k,
                            std::int64_t p, std::int64_t e, std::int64_t t);

/// Terms c_n = Phi_ell(alpha^n, beta^n) for conjugate quadratic integers
/// given by (trace, norm), for ell in {1,2,3,4,6} where c_n satisfies an
/// integer recurrence (ell = 1 uses the normalized form
/// (alpha^n - beta^n)/(alpha - beta)). Throws DegenerateParameters when
/// alpha/beta is a root of unity.
std::vector<BigInt> cyclotomic_terms(std::int64_t ell, std::int64_t trace,
                                     std::int64_t norm, std::int64_t n_max);

/// Verifies c_n | c_{kn} for all n <= n_max; requires gcd(k, ell) = 1.
bool cyclotomic_sequence_divides(std::int64_t ell, std::int64_t trace,
                                 std::int64_t norm, std::int64_t k,
                                 std::int64_t n_max);

}  // namespace meandiv
