#pragma once

#include <cstdint>
#include <optional>

#include "altgraph/errors.hpp"
#include "altgraph/partition.hpp"
#include "altgraph/permutation.hpp"

namespace altgraph {

// Ceilings protecting against accidental huge runs. The defaults allow
// A_10 enumeration (1,814,400 elements) and quotient-level graphs, keep
// element-level edge materialization at n <= 9, and cap partition-level
// graphs at n = 64.
struct BuildLimits {
  int brute_force_ceiling = 10;
  int element_graph_ceiling = 9;
  int partition_ceiling = 64;
};

// Single-consumer stream over A_n in lexicographic image-table order
// (the identity comes first). Parallel consumers should partition the
// rank space with even_unrank instead of sharing a stream.
class AlternatingStream {
 public:
  explicit AlternatingStream(int n, const BuildLimits& limits = {});
  std::optional<Permutation> next();

 private:
  std::vector<std::uint8_t> table_;
  bool first_ = true;
  bool done_ = false;
};

template <typename F>
void for_each_alternating(int n, F&& f, const BuildLimits& limits = {}) {
  AlternatingStream stream(n, limits);
  while (auto p = stream.next()) f(*p);
}

// The cyclic subgroup generated by a permutation, identified by a
// canonical generator: the lexicographically smallest image table among
// the generators x^k, gcd(k, o(x)) = 1.
struct CyclicClass {
  Permutation representative;
  std::uint64_t order = 1;
  PartitionType type;

  bool operator==(const CyclicClass& other) const {
    return representative == other.representative;
  }
};

Permutation canonical_generator(const Permutation& x);
CyclicClass cyclic_class_of(const Permutation& x);

}  // namespace altgraph
