#include "altgraph/alternating.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace altgraph {

AlternatingStream::AlternatingStream(int n, const BuildLimits& limits) {
  if (n < 1) throw std::invalid_argument("AlternatingStream: n must be >= 1");
  if (n > limits.brute_force_ceiling) {
    std::ostringstream msg;
    msg << "A_" << n << " enumeration exceeds the brute-force ceiling "
        << limits.brute_force_ceiling << " (override the ceiling to proceed)";
    throw CapacityError(msg.str());
  }
  table_.resize(n);
  std::iota(table_.begin(), table_.end(), std::uint8_t{0});
}

std::optional<Permutation> AlternatingStream::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return Permutation::from_table(table_);  // identity is even
  }
  while (std::next_permutation(table_.begin(), table_.end())) {
    Permutation p = Permutation::from_table(table_);
    if (is_even(p)) return p;
  }
  done_ = true;
  return std::nullopt;
}

Permutation canonical_generator(const Permutation& x) {
  const std::uint64_t o = order_of(x);
  Permutation best = x;
  Permutation y = x;
  for (std::uint64_t k = 2; k < o; ++k) {
    y = compose(y, x);
    if (std::gcd(k, o) == 1 && y < best) best = y;
  }
  return best;
}

CyclicClass cyclic_class_of(const Permutation& x) {
  CyclicClass c;
  c.representative = canonical_generator(x);
  c.order = order_of(x);
  c.type = cycle_type(c.representative);
  return c;
}

}  // namespace altgraph
