#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace altgraph {

// A partition of n viewed as a cycle type. Stored in canonical
// run-length form: strictly increasing parts with multiplicity >= 1.
// The textual form is "[1^4,2^2]" (ascending parts, caret
// multiplicities, multiplicity 1 omitted); the trivial partition of
// n is [1^n].
class PartitionType {
 public:
  PartitionType() = default;

  // [1^n]
  static PartitionType trivial(int n);

  // From a multiset of parts in any order, e.g. {2,5,6}.
  static PartitionType from_parts(std::vector<int> parts);

  // From canonical run-length form; validated.
  static PartitionType from_run_length(
      std::vector<std::pair<int, int>> parts_with_multiplicity);

  int n() const { return n_; }

  // (part, multiplicity) pairs, parts strictly increasing.
  const std::vector<std::pair<int, int>>& parts() const { return parts_; }

  // Number of parts counted with multiplicity.
  int total_parts() const;

  bool is_trivial() const;

  // lcm of the distinct parts; order([1^n]) = 1.
  std::uint64_t order() const;

  // gcd of the distinct parts.
  int gcd_parts() const;

  // The power of exponent a: each part x is replaced by gcd(a,x)
  // copies of x/gcd(a,x). Preserves n.
  PartitionType power(std::uint64_t a) const;

  // True iff the power of exponent a is proper, i.e. neither the
  // type itself nor [1^n]; equivalently gcd(a, order()) is neither 1
  // nor order().
  bool is_proper_power_exponent(std::uint64_t a) const;

  // All distinct proper powers. Since power(a) == power(gcd(a, order()))
  // it suffices to take exponents over the divisors d of order() with
  // 1 < d < order().
  std::vector<PartitionType> proper_powers() const;

  // True iff permutations of this type are even: n minus the number
  // of parts (with multiplicity) is even.
  bool is_alternating() const;

  std::string to_string() const;

  // Strict parser for the printed grammar; throws std::invalid_argument.
  static PartitionType parse(const std::string& text);

  bool operator==(const PartitionType& other) const = default;

  // Orders by n, then lexicographically on the expanded ascending
  // parts sequence: [1,1,2] < [1,3] < [2,2] < [4].
  std::strong_ordering operator<=>(const PartitionType& other) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> parts_;
};

// All partitions of n, in increasing order (see operator<=>).
// Optionally keep only alternating types and/or drop [1^n].
std::vector<PartitionType> enumerate_types(int n, bool alternating_only,
                                           bool exclude_trivial);

}  // namespace altgraph
