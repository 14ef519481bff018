#pragma once

#include <cstdint>
#include <vector>

namespace cayley {

/// gcd with Bezout coefficients: r*x + s*y = g.
struct BezoutTriple {
  std::int64_t g;
  std::int64_t r;
  std::int64_t s;
};

/// True iff b is an integer multiple of a. a must be nonzero.
bool divides(std::int64_t a, std::int64_t b);

/// Trial division; inputs are desk scale.
bool is_prime(std::int64_t p);

/// Extended Euclid for x, y >= 1. Only the Bezout identity is contractual;
/// modular inverses reduce r mod n.
BezoutTriple ext_gcd(std::int64_t x, std::int64_t y);

/// The increasing list of 1 <= k < n with gcd(k, n) = 1, for n >= 2.
std::vector<std::int64_t> rel_primes(std::int64_t n);

} // namespace cayley
