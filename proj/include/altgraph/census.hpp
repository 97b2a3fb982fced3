#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "altgraph/alternating.hpp"
#include "altgraph/bigcount.hpp"
#include "altgraph/graph.hpp"
#include "altgraph/numbers.hpp"
#include "altgraph/partition.hpp"

namespace altgraph {

// Number of elements of the given cycle type in A_n:
//   n! / (m_1^{t_1} ... m_k^{t_k} t_1! ... t_k!)
// (the same as in S_n). Rejects non-alternating types.
BigCount mu_elements(const PartitionType& t);

// Number of cyclic classes of the given type: mu_elements / phi(o(T)).
// The division is always exact; inexactness throws std::logic_error.
BigCount mu_classes(const PartitionType& t);

// n belongs to A = P u (P+1) u (P+2) u 2P u (2P+1): one of n, n-1,
// n-2, n/2 (n even), (n-1)/2 (n odd) is prime.
bool in_set_A(std::uint64_t n);

// The critical orders B(n) = P n {n, n-1, n-2, n/2, (n-1)/2}, for
// n >= 11; always at most two primes.
std::vector<std::uint64_t> critical_primes(std::uint64_t n);

// The ten mutually exclusive primality patterns governing the closed
// forms for n >= 11.
enum class CountsCase {
  nm2_and_half_prime,    // n-2 and (n-1)/2 prime
  n_and_half_prime,      // n and (n-1)/2 prime
  n_and_nm2_prime,       // n and n-2 prime
  nm2_prime_only,        // n-2 prime; n, (n-1)/2 not
  half_prime_only,       // (n-1)/2 prime; n, n-2 not
  n_prime_only,          // n prime; n-2, (n-1)/2 not
  nm1_prime_only,        // n-1 prime; n/2 not
  nm1_and_half_prime,    // n-1 and n/2 prime
  even_half_prime_only,  // n/2 prime; n-1 not
  outside_A,             // n not in A
};

const char* case_label(CountsCase c);

struct RowClassification {
  std::uint64_t n = 0;
  CountsCase row = CountsCase::outside_A;
  std::vector<std::uint64_t> critical_primes;
};

// Evaluates all ten case predicates and checks that exactly one holds
// (they are provably exclusive; a violation throws std::logic_error).
// Requires n >= 11.
RowClassification classify_row(std::uint64_t n);

enum class CountsSource { brute_force, closed_form, both };

struct CensusRow {
  std::uint64_t n = 0;
  BigCount c0;               // components of the proper (quotient) power graph
  std::uint32_t c0_ptype = 0;  // components of the proper power type graph
  std::uint32_t c0_order = 0;  // components of the proper order graph
  bool two_connected = false;
  CountsSource source = CountsSource::closed_form;
};

// Closed-form component counts: stored constants for 3 <= n <= 10,
// exact evaluation of the matched case for n >= 11. Every division is
// checked exact.
CensusRow closed_form_counts(std::uint64_t n);

// Stored reference counts for 3 <= n <= 10 (never recomputed; the
// brute-force path provides the independent second provenance).
CensusRow small_degree_counts(std::uint64_t n);

struct ProcedureOptions {
  // When set, the next type and the class representing it are chosen
  // uniformly at random instead of by the deterministic rule
  // (lexicographically least remaining type, lowest vertex index).
  std::optional<std::uint64_t> seed;
};

struct ProcedureResult {
  BigCount component_count;
  std::uint32_t steps = 0;
  std::vector<PartitionType> picked_types;  // in pick order
};

// Iterative component count over the quotient power graph: repeatedly
// pick a type T not yet covered by any visited component, take a class
// of that type, read the multiplicity k_C(T) of T in its component C,
// and accumulate mu_classes(T) / k_C(T). The number of steps equals
// the component count of the power type graph. A non-exact division
// signals a component-equitability violation and throws.
ProcedureResult procedure_count(const UndirectedGraph& quotient,
                                const ComponentCensus& census,
                                const ProcedureOptions& options = {});
ProcedureResult procedure_count(const UndirectedGraph& quotient,
                                const ProcedureOptions& options = {});

// Edge count of the proper power graph from the order-statistics
// identity: 1/2 * sum over m of s_m (2m - phi(m) - 3), where s_m is
// the number of elements of order m.
BigCount edge_count_formula(int n);

struct StructureReport {
  std::uint64_t n = 0;
  std::vector<PartitionType> main_component_types;
  std::vector<PartitionType> isolated_types;
  std::vector<std::uint64_t> isolated_primes;
  bool main_is_complete = false;
};

// Builds the power type graph for n >= 11 and validates its shape: one
// non-singleton component, isolated vertices exactly the types derived
// from the critical primes, every isolated order prime, main component
// not complete. Violations throw StructureViolation.
StructureReport structure_report(std::uint64_t n, const BuildLimits& limits = {});

// Number of components of the quotient power graph containing elements
// of order p, for p prime and n in {p, p+1, p+2}, n >= 4.
BigCount c_p_components(std::uint64_t n, std::uint64_t p);

// True iff the power graph of A_n stays connected after deleting any
// single vertex: n == 3 or n outside A.
bool two_connected(std::uint64_t n);

// Component count of the proper order graph, n >= 3: 3 iff n = 6 or
// both n and n-2 are prime; 1 iff none of n, n-1, n-2 is prime
// (and n != 6); 2 otherwise.
std::uint32_t order_graph_verdict(std::uint64_t n);

// Sweeps 11..max_n: evaluates the matched closed form for every n with
// exactness checks, and verifies |critical primes| <= 2. Throws on any
// violation.
void validate_closed_forms(std::uint64_t max_n);

}  // namespace altgraph
