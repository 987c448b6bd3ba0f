#include "meandiv/primes.hpp"

#include <string>

#include "meandiv/errors.hpp"

namespace meandiv {

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) {
      composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t nu_p_factorial(std::int64_t n, std::int64_t p) {
  if (!is_prime(p)) {
    throw InvalidPrime("nu_p_factorial: p = " + std::to_string(p) +
                       " is not prime");
  }
  if (n < 0) {
    throw PreconditionViolated("nu_p_factorial: n must be >= 0");
  }
  return detail::nu_p_factorial_unchecked(n, p);
}

std::int64_t nu_p(std::int64_t n, std::int64_t p) {
  if (n == 0 || p < 2) {
    throw PreconditionViolated("nu_p: requires n != 0 and p >= 2");
  }
  std::int64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

namespace detail {

std::int64_t nu_p_factorial_unchecked(std::int64_t n, std::int64_t p) {
  std::int64_t total = 0;
  while (n > 0) {
    n /= p;
    total += n;
  }
  return total;
}

}  // namespace detail

}  // namespace meandiv
