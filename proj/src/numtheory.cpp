#include "cayley/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "cayley/errors.hpp"

namespace cayley {

bool divides(std::int64_t a, std::int64_t b) {
  if (a == 0)
    throw division_by_zero_error("divides: divisor is zero");
  return b % a == 0;
}

bool is_prime(std::int64_t p) {
  if (p < 2)
    return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

BezoutTriple ext_gcd(std::int64_t x, std::int64_t y) {
  if (x < 1 || y < 1)
    throw std::invalid_argument("ext_gcd: arguments must be positive");
  std::int64_t old_r = x, r = y;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

std::vector<std::int64_t> rel_primes(std::int64_t n) {
  if (n < 2)
    throw std::invalid_argument("rel_primes: n must be at least 2");
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1)
      out.push_back(k);
  return out;
}

} // namespace cayley
