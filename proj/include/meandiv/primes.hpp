#pragma once

#include <cstdint>
#include <vector>

namespace meandiv {

/// All primes <= limit in ascending order (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// Deterministic primality test by trial division.
bool is_prime(std::int64_t n);

/// nu_p(n!) = sum_{e>=1} floor(n / p^e)  (Legendre's formula).
/// Throws InvalidPrime if p is not prime, PreconditionViolated if n < 0.
std::int64_t nu_p_factorial(std::int64_t n, std::int64_t p);

/// Largest e with p^e dividing n. Requires n != 0, p >= 2.
std::int64_t nu_p(std::int64_t n, std::int64_t p);

namespace detail {
/// Legendre sum without the primality check, for hot loops.
std::int64_t nu_p_factorial_unchecked(std::int64_t n, std::int64_t p);
}  // namespace detail

}  // namespace meandiv
