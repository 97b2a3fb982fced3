#include "altgraph/numbers.hpp"

#include <numeric>
#include <stdexcept>

namespace altgraph {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t i = 5; i * i <= n; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> factors;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors_of: n must be positive");
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::uint64_t totient(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("totient: m must be positive");
  std::uint64_t result = m;
  for (const auto& [p, e] : factorize(m)) {
    result -= result / p;
  }
  return result;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm_checked: zero input");
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (q > UINT64_MAX / b) throw std::overflow_error("lcm overflows 64 bits");
  return q * b;
}

std::uint64_t factorial64(unsigned n) {
  if (n > 20) throw std::overflow_error("factorial64: n! overflows 64 bits");
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace altgraph
