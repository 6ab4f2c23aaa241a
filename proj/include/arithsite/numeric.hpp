#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arithsite/errors.hpp"

namespace arithsite {

// Overflow-checked 64-bit arithmetic. All throws are OverflowError.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
// lcm(a, b) for a, b >= 1, overflow-checked.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Exact factorization (trial division + Pollard rho). Keys are primes,
// values are exponents >= 1; the empty map is 1.
std::map<std::uint64_t, std::uint32_t> factorize(std::uint64_t n);

// Distinct prime divisors of n, ascending. support(1) = {}.
std::vector<std::uint64_t> prime_support(std::uint64_t n);

// Exponent of p in n (n >= 1, p >= 2).
std::uint32_t valuation(std::uint64_t n, std::uint64_t p);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// The first k primes.
std::vector<std::uint64_t> first_primes(std::size_t k);

} // namespace arithsite
