#pragma once

#include <cstdint>
#include <vector>

namespace altgraph {

// Deterministic trial division. All callers work with numbers that are
// either tiny (element orders) or bounded by the census sweep range.
bool is_prime(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// All divisors of n, ascending. n >= 1.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

// Euler totient.
std::uint64_t totient(std::uint64_t m);

// lcm with overflow detection; throws std::overflow_error.
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

// n! for n <= 20 (fits in 64 bits); throws std::overflow_error beyond.
std::uint64_t factorial64(unsigned n);

}  // namespace altgraph
