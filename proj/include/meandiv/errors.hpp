#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace meandiv {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A prime-typed argument failed a primality check.
struct InvalidPrime : Error {
  using Error::Error;
};

/// An argument fell outside the documented domain.
struct OutOfRange : Error {
  using Error::Error;
};

/// A documented precondition does not hold for the given inputs.
struct PreconditionViolated : Error {
  using Error::Error;
};

/// An argument required to be coprime to a modulus is not.
struct NotCoprime : Error {
  using Error::Error;
};

/// gcd(m_1,...,m_s) > 1: no finite constant C(k) exists for this sequence.
struct NotAlmostMeanDivisible : Error {
  using Error::Error;
};

/// gcd(m_1,...,m_s) = 1: witness primes do not exist in this regime.
struct AlmostMeanDivisibleRegime : Error {
  using Error::Error;
};

/// Parameters degenerate to a trivial or undefined sequence.
struct DegenerateParameters : Error {
  using Error::Error;
};

/// A bounded search ran out of budget. Carries the residue class that was
/// already known to work so callers can report partial progress.
struct CapExceeded : Error {
  CapExceeded(const std::string& msg, std::int64_t residue_found)
      : Error(msg), residue(residue_found) {}
  std::int64_t residue;
};

}  // namespace meandiv
