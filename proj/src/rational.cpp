#include "meandiv/rational.hpp"

#include <numeric>

namespace meandiv {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) {
    --q;
  }
  return q;
}

BigInt rat_floor(const Rat& x) {
  return floor_div(numerator(x), denominator(x));
}

BigInt rat_ceil(const Rat& x) { return -floor_div(-numerator(x), denominator(x)); }

Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

std::string rat_str(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

double rat_approx(const Rat& x) { return x.convert_to<double>(); }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error("integer overflow in checked_mul");
  }
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

}  // namespace meandiv
