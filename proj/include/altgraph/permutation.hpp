#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "altgraph/partition.hpp"

namespace altgraph {

// A permutation of {1..n}, stored as a 0-based image table. Points in
// the public interface and in cycle notation are 1-based. Degree is
// capped at 255 (the brute-force ceilings keep real instances far
// smaller).
class Permutation {
 public:
  Permutation() = default;

  // The identity of the given degree.
  explicit Permutation(int degree);

  // From a 1-based image table; validated to be a bijection.
  static Permutation from_images(const std::vector<int>& images_one_based);

  // From a 0-based table, trusted (hot paths in the graph builders).
  static Permutation from_table(std::vector<std::uint8_t> table);

  int degree() const { return static_cast<int>(table_.size()); }
  int image_of(int point) const;  // 1-based
  bool is_identity() const;
  std::vector<int> images() const;  // 1-based copy

  const std::vector<std::uint8_t>& table() const { return table_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lex on image table

 private:
  std::vector<std::uint8_t> table_;
};

// result(i) = a(b(i)); degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& x);

// x^k, k >= 0, computed in O(degree) via per-cycle index shifts.
Permutation power(const Permutation& x, std::uint64_t k);

// Multiset of orbit sizes, fixed points included.
PartitionType cycle_type(const Permutation& x);

// lcm of the cycle lengths = least k >= 1 with x^k = id.
std::uint64_t order_of(const Permutation& x);

// True iff degree minus the number of cycles (fixed points included)
// is even.
bool is_even(const Permutation& x);

// Nontrivial cycles, each starting at its smallest point, ordered by
// smallest point. 1-based.
std::vector<std::vector<int>> cycles_of(const Permutation& x);

// "(1 2)(3 4)" with fixed points omitted; "id" for the identity.
std::string to_cycle_string(const Permutation& x);

// Parses the cycle notation above; degree must cover every point
// mentioned. Throws std::invalid_argument on malformed input.
Permutation parse_cycles(const std::string& text, int degree);

// |A_n| = n!/2 for n >= 2, and 1 for n <= 2. Requires n <= 21.
std::uint64_t alternating_count(int n);

// Rank of an even permutation among all even permutations of the same
// degree in lexicographic image-table order (identity has rank 0), and
// its inverse. Requires degree <= 20 and an even argument.
std::uint64_t even_rank(const Permutation& x);
Permutation even_unrank(int n, std::uint64_t rank);

}  // namespace altgraph
