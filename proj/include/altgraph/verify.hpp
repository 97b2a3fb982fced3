#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altgraph/alternating.hpp"

namespace altgraph {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Brute-force component counts (element level where the ceiling
// allows, quotient, power type, order) against the stored reference
// values, for 3 <= n <= max_n. Also confirms the class count matches
// the mu-formula total.
std::vector<Check> check_small_degree_counts(int max_n,
                                             const BuildLimits& limits = {});

// The iterative counting procedure against the direct census for
// 3 <= n <= max_n: deterministic picks plus `randomized_runs` seeded
// randomized pick orders per degree; the step count must equal the
// power type component count.
std::vector<Check> check_procedure(int max_n, std::uint64_t seed,
                                   int randomized_runs,
                                   const BuildLimits& limits = {});

// Directly built power type and order graphs against the closed-form
// columns, for from_n <= n <= to_n.
std::vector<Check> check_partition_level_counts(int from_n, int to_n,
                                                const BuildLimits& limits = {});

// Structure validation for from_n <= n <= to_n (n >= 11): one main
// component, isolated types exactly the critical-prime set, at most
// two critical primes, and an explicit non-adjacent order-2/order-3
// pair inside the main component.
std::vector<Check> check_structure(int from_n, int to_n,
                                   const BuildLimits& limits = {});

// Edge counts of built proper power graphs against the totient
// identity, for 4 <= n <= max_n.
std::vector<Check> check_edge_identity(int max_n,
                                       const BuildLimits& limits = {});

// Every isolated quotient vertex has prime order p and its
// element-level component is a complete graph on p-1 vertices;
// exhaustive for 4 <= n <= max_n.
std::vector<Check> check_isolated_class_law(int max_n,
                                            const BuildLimits& limits = {});

// Arithmetic and algebraic properties: partition power laws
// (exhaustive n <= 12), permutation/type commuting square and parity
// agreement (exhaustive n <= 7), mu totals, closed-form exactness up
// to closed_form_max_n, and the factorial identity both spellings.
std::vector<Check> check_algebra(std::uint64_t closed_form_max_n);

// Frozen reference constants (the degree-21 count, the first
// 2-connected degree, selected members outside A).
std::vector<Check> check_reference_constants();

// The degree-10 quotient-level census (heavier; opt-in) plus the
// single even-order component property.
std::vector<Check> check_degree_ten(const BuildLimits& limits = {});

bool all_pass(const std::vector<Check>& checks);

}  // namespace altgraph
