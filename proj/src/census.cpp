#include "altgraph/census.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "altgraph/builders.hpp"

namespace altgraph {

BigCount mu_elements(const PartitionType& t) {
  if (!t.is_alternating())
    throw std::invalid_argument("mu_elements: not an alternating type: " +
                                t.to_string());
  BigCount denom = 1;
  for (const auto& [m, mult] : t.parts()) {
    for (int i = 0; i < mult; ++i) denom *= m;
    denom *= big_factorial(static_cast<unsigned>(mult));
  }
  return exact_div(big_factorial(static_cast<unsigned>(t.n())), denom,
                   "mu_elements");
}

BigCount mu_classes(const PartitionType& t) {
  return exact_div(mu_elements(t), BigCount(totient(t.order())), "mu_classes");
}

bool in_set_A(std::uint64_t n) {
  if (is_prime(n)) return true;
  if (n >= 1 && is_prime(n - 1)) return true;
  if (n >= 2 && is_prime(n - 2)) return true;
  if (n % 2 == 0 && is_prime(n / 2)) return true;
  if (n % 2 == 1 && is_prime((n - 1) / 2)) return true;
  return false;
}

std::vector<std::uint64_t> critical_primes(std::uint64_t n) {
  if (n < 11) throw std::invalid_argument("critical_primes requires n >= 11");
  std::vector<std::uint64_t> primes;
  const auto add = [&](std::uint64_t candidate) {
    if (is_prime(candidate)) primes.push_back(candidate);
  };
  add(n);
  add(n - 1);
  add(n - 2);
  if (n % 2 == 0) add(n / 2);
  if (n % 2 == 1) add((n - 1) / 2);
  std::sort(primes.begin(), primes.end());
  if (primes.size() > 2)
    throw std::logic_error("more than two critical primes at n = " +
                           std::to_string(n));
  return primes;
}

const char* case_label(CountsCase c) {
  switch (c) {
    case CountsCase::nm2_and_half_prime: return "n-2,(n-1)/2 prime";
    case CountsCase::n_and_half_prime: return "n,(n-1)/2 prime";
    case CountsCase::n_and_nm2_prime: return "n,n-2 prime";
    case CountsCase::nm2_prime_only: return "n-2 prime";
    case CountsCase::half_prime_only: return "(n-1)/2 prime";
    case CountsCase::n_prime_only: return "n prime";
    case CountsCase::nm1_prime_only: return "n-1 prime";
    case CountsCase::nm1_and_half_prime: return "n-1,n/2 prime";
    case CountsCase::even_half_prime_only: return "n/2 prime";
    case CountsCase::outside_A: return "n not in A";
  }
  return "?";
}

RowClassification classify_row(std::uint64_t n) {
  if (n < 11) throw std::invalid_argument("classify_row requires n >= 11");
  const bool pn = is_prime(n);
  const bool pn1 = is_prime(n - 1);
  const bool pn2 = is_prime(n - 2);
  const bool ph_even = n % 2 == 0 && is_prime(n / 2);
  const bool ph_odd = n % 2 == 1 && is_prime((n - 1) / 2);

  // All ten predicates are evaluated and exactly one must hold; the
  // only nontrivial exclusion is that n, n-2 and (n-1)/2 are never
  // simultaneously prime.
  const std::pair<CountsCase, bool> predicates[] = {
      {CountsCase::nm2_and_half_prime, pn2 && ph_odd},
      {CountsCase::n_and_half_prime, pn && ph_odd},
      {CountsCase::n_and_nm2_prime, pn && pn2},
      {CountsCase::nm2_prime_only, pn2 && !pn && !ph_odd},
      {CountsCase::half_prime_only, ph_odd && !pn && !pn2},
      {CountsCase::n_prime_only, pn && !pn2 && !ph_odd},
      {CountsCase::nm1_prime_only, pn1 && !ph_even},
      {CountsCase::nm1_and_half_prime, pn1 && ph_even},
      {CountsCase::even_half_prime_only, ph_even && !pn1},
      {CountsCase::outside_A, !in_set_A(n)},
  };

  RowClassification result;
  result.n = n;
  int matches = 0;
  for (const auto& [row, holds] : predicates) {
    if (holds) {
      result.row = row;
      ++matches;
    }
  }
  if (matches != 1)
    throw std::logic_error("case predicates matched " +
                           std::to_string(matches) + " times at n = " +
                           std::to_string(n));
  result.critical_primes = critical_primes(n);
  return result;
}

namespace {

// c0 for a matched case, from (n-2)!, (n-3)!, (n-4)!.
BigCount case_c0(CountsCase row, std::uint64_t n, const BigCount& f2,
                 const BigCount& f3, const BigCount& f4) {
  const BigCount big_n(n);
  const auto term_1_1_nm2 = [&] {  // classes of type [1^2, n-2]
    return exact_div(big_n * (n - 1) * f4, BigCount(2), "c0 term [1^2,n-2]");
  };
  const auto term_1_pp_odd = [&] {  // classes of type [1, p^2], p = (n-1)/2
    return exact_div(4 * big_n * (n - 2) * f4, BigCount(n - 1),
                     "c0 term [1,p^2]");
  };
  const auto term_n = [&] { return f2; };            // classes of type [n]
  const auto term_1_nm1 = [&] { return big_n * f3; };  // type [1, n-1]
  const auto term_pp_even = [&] {  // classes of type [p^2], p = n/2
    return exact_div(4 * BigCount(n - 1) * f3, big_n, "c0 term [p^2]");
  };

  switch (row) {
    case CountsCase::nm2_and_half_prime:
      return term_1_1_nm2() + term_1_pp_odd() + 1;
    case CountsCase::n_and_half_prime:
      return term_n() + term_1_pp_odd() + 1;
    case CountsCase::n_and_nm2_prime:
      return term_n() + term_1_1_nm2() + 1;
    case CountsCase::nm2_prime_only:
      return term_1_1_nm2() + 1;
    case CountsCase::half_prime_only:
      return term_1_pp_odd() + 1;
    case CountsCase::n_prime_only:
      return term_n() + 1;
    case CountsCase::nm1_prime_only:
      return term_1_nm1() + 1;
    case CountsCase::nm1_and_half_prime:
      return term_pp_even() + term_1_nm1() + 1;
    case CountsCase::even_half_prime_only:
      return term_pp_even() + 1;
    case CountsCase::outside_A:
      return 1;
  }
  throw std::logic_error("unreachable");
}

void case_small_counts(CountsCase row, std::uint32_t& ptype,
                       std::uint32_t& order) {
  switch (row) {
    case CountsCase::nm2_and_half_prime: ptype = 3; order = 2; return;
    case CountsCase::n_and_half_prime: ptype = 3; order = 2; return;
    case CountsCase::n_and_nm2_prime: ptype = 3; order = 3; return;
    case CountsCase::nm2_prime_only: ptype = 2; order = 2; return;
    case CountsCase::half_prime_only: ptype = 2; order = 1; return;
    case CountsCase::n_prime_only: ptype = 2; order = 2; return;
    case CountsCase::nm1_prime_only: ptype = 2; order = 2; return;
    case CountsCase::nm1_and_half_prime: ptype = 3; order = 2; return;
    case CountsCase::even_half_prime_only: ptype = 2; order = 1; return;
    case CountsCase::outside_A: ptype = 1; order = 1; return;
  }
}

}  // namespace

CensusRow small_degree_counts(std::uint64_t n) {
  if (n < 3 || n > 10)
    throw std::invalid_argument("small_degree_counts requires 3 <= n <= 10");
  static const std::uint64_t kC0[] = {1, 7, 31, 121, 421, 962, 5442, 29345};
  static const std::uint32_t kPtype[] = {1, 2, 3, 4, 4, 3, 4, 3};
  static const std::uint32_t kOrder[] = {1, 2, 3, 3, 3, 2, 2, 1};
  CensusRow row;
  row.n = n;
  row.c0 = kC0[n - 3];
  row.c0_ptype = kPtype[n - 3];
  row.c0_order = kOrder[n - 3];
  row.two_connected = row.c0 == 1;
  row.source = CountsSource::closed_form;
  return row;
}

CensusRow closed_form_counts(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("closed_form_counts requires n >= 3");
  if (n <= 10) return small_degree_counts(n);
  const RowClassification rc = classify_row(n);
  CensusRow row;
  row.n = n;
  const BigCount& f4 = big_factorial(static_cast<unsigned>(n - 4));
  const BigCount f3 = f4 * (n - 3);
  const BigCount f2 = f3 * (n - 2);
  row.c0 = case_c0(rc.row, n, f2, f3, f4);
  case_small_counts(rc.row, row.c0_ptype, row.c0_order);
  row.two_connected = row.c0 == 1;
  row.source = CountsSource::closed_form;
  return row;
}

ProcedureResult procedure_count(const UndirectedGraph& quotient,
                                const ComponentCensus& census,
                                const ProcedureOptions& options) {
  if (quotient.kind != GraphKind::quotient_power)
    throw std::invalid_argument("procedure_count requires a quotient graph");

  const std::size_t type_count = quotient.types.size();
  std::vector<bool> remaining(type_count, true);
  std::size_t remaining_count = type_count;

  // Deterministic pick: lowest vertex index of each type. Random pick
  // needs the full per-type vertex lists.
  std::vector<std::uint32_t> first_vertex(type_count, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> vertices_by_type;
  if (options.seed) vertices_by_type.resize(type_count);
  for (std::size_t v = 0; v < quotient.num_vertices; ++v) {
    const std::uint32_t t = quotient.type_of[v];
    if (first_vertex[t] == UINT32_MAX)
      first_vertex[t] = static_cast<std::uint32_t>(v);
    if (options.seed)
      vertices_by_type[t].push_back(static_cast<std::uint32_t>(v));
  }
  for (std::size_t t = 0; t < type_count; ++t) {
    if (first_vertex[t] == UINT32_MAX)
      throw std::logic_error("type not realized in quotient graph: " +
                             quotient.types[t].to_string());
  }

  std::mt19937_64 rng(options.seed.value_or(0));
  ProcedureResult result;
  result.component_count = 0;

  while (remaining_count > 0) {
    std::uint32_t type_index = UINT32_MAX;
    if (options.seed) {
      std::uniform_int_distribution<std::size_t> pick(0, remaining_count - 1);
      std::size_t skip = pick(rng);
      for (std::size_t t = 0; t < type_count; ++t) {
        if (!remaining[t]) continue;
        if (skip == 0) {
          type_index = static_cast<std::uint32_t>(t);
          break;
        }
        --skip;
      }
    } else {
      for (std::size_t t = 0; t < type_count; ++t) {
        if (remaining[t]) {
          type_index = static_cast<std::uint32_t>(t);
          break;
        }
      }
    }

    std::uint32_t vertex = first_vertex[type_index];
    if (options.seed) {
      const auto& pool = vertices_by_type[type_index];
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      vertex = pool[pick(rng)];
    }

    const std::uint32_t component = census.component_id[vertex];
    const std::uint64_t k = census.multiplicity_of(component, type_index);
    result.component_count +=
        exact_div(mu_classes(quotient.types[type_index]), BigCount(k),
                  "procedure term (component equitability)");
    result.picked_types.push_back(quotient.types[type_index]);
    ++result.steps;

    for (const auto& [t, count] : census.type_multiplicity[component]) {
      if (remaining[t]) {
        remaining[t] = false;
        --remaining_count;
      }
    }
  }
  return result;
}

ProcedureResult procedure_count(const UndirectedGraph& quotient,
                                const ProcedureOptions& options) {
  return procedure_count(quotient, components(quotient), options);
}

BigCount edge_count_formula(int n) {
  if (n < 3) throw std::invalid_argument("edge_count_formula requires n >= 3");
  std::map<std::uint64_t, BigCount> elements_of_order;
  for (const PartitionType& t : enumerate_types(n, true, true))
    elements_of_order[t.order()] += mu_elements(t);
  BigCount doubled = 0;
  for (const auto& [m, count] : elements_of_order)
    doubled += count * (2 * m - totient(m) - 3);
  return exact_div(doubled, BigCount(2), "edge count");
}

StructureReport structure_report(std::uint64_t n, const BuildLimits& limits) {
  if (n < 11) throw std::invalid_argument("structure_report requires n >= 11");
  const UndirectedGraph g = build_power_type_graph(static_cast<int>(n), limits);
  const ComponentCensus census = components(g);

  StructureReport report;
  report.n = n;

  std::uint32_t non_singletons = 0;
  std::uint32_t main_id = UINT32_MAX;
  for (std::uint32_t c = 0; c < census.component_count; ++c) {
    if (census.sizes[c] > 1) {
      ++non_singletons;
      main_id = c;
    }
  }
  if (non_singletons != 1) {
    throw StructureViolation("expected exactly one non-singleton component at n = " +
                             std::to_string(n) + ", found " +
                             std::to_string(non_singletons));
  }

  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    if (census.component_id[v] == main_id) {
      report.main_component_types.push_back(g.types[v]);
    } else {
      report.isolated_types.push_back(g.types[v]);
      const std::uint64_t o = g.types[v].order();
      if (!is_prime(o))
        throw StructureViolation("isolated type of composite order " +
                                 g.types[v].to_string());
      report.isolated_primes.push_back(o);
    }
  }

  // The isolated types must be exactly the ones the critical primes
  // dictate.
  std::vector<PartitionType> expected;
  for (std::uint64_t p : critical_primes(n)) {
    const int ip = static_cast<int>(p);
    if (p == n) expected.push_back(PartitionType::from_parts({ip}));
    if (p == n - 1) expected.push_back(PartitionType::from_parts({1, ip}));
    if (p == n - 2) expected.push_back(PartitionType::from_parts({1, 1, ip}));
    if (2 * p == n) expected.push_back(PartitionType::from_parts({ip, ip}));
    if (2 * p == n - 1)
      expected.push_back(PartitionType::from_parts({1, ip, ip}));
  }
  std::sort(expected.begin(), expected.end());
  if (expected != report.isolated_types) {
    std::ostringstream msg;
    msg << "isolated types mismatch at n = " << n << "; built {";
    for (const auto& t : report.isolated_types) msg << t.to_string() << ' ';
    msg << "} expected {";
    for (const auto& t : expected) msg << t.to_string() << ' ';
    msg << "}";
    throw StructureViolation(msg.str());
  }

  // The main component must hold the double transpositions, and every
  // proper edge of the graph lies inside it (all other components are
  // singletons), so completeness is an edge count comparison.
  const PartitionType double_transposition =
      PartitionType::from_run_length({{1, static_cast<int>(n) - 4}, {2, 2}});
  const auto dt = g.find_label(double_transposition.to_string());
  if (!dt || census.component_id[*dt] != main_id)
    throw StructureViolation("main component misses [1^{n-4},2^2] at n = " +
                             std::to_string(n));
  const std::uint64_t k = census.sizes[main_id];
  report.main_is_complete = g.edges.size() == k * (k - 1) / 2;
  if (report.main_is_complete)
    throw StructureViolation("main component is complete at n = " +
                             std::to_string(n));
  return report;
}

BigCount c_p_components(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("c_p_components: p not prime");
  if (n < 4 || n < p || n > p + 2)
    throw std::invalid_argument(
        "c_p_components requires n in {p, p+1, p+2} and n >= 4");
  if (n == 4 && p == 2) return 3;
  if (n == p) return big_factorial(static_cast<unsigned>(p - 2));
  if (n == p + 1)
    return (p + 1) * big_factorial(static_cast<unsigned>(p - 2));
  return exact_div(BigCount(p + 2) * (p + 1) *
                       big_factorial(static_cast<unsigned>(p - 2)),
                   BigCount(2), "c_p");
}

bool two_connected(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("two_connected requires n >= 3");
  return n == 3 || !in_set_A(n);
}

std::uint32_t order_graph_verdict(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("order_graph_verdict requires n >= 3");
  if (n == 3) return 1;
  if (n == 6) return 3;
  const bool pn = is_prime(n);
  const bool pn1 = is_prime(n - 1);
  const bool pn2 = is_prime(n - 2);
  if (pn && pn2) return 3;
  if (pn || pn1 || pn2) return 2;
  return 1;
}

void validate_closed_forms(std::uint64_t max_n) {
  if (max_n < 11) return;
  BigCount f4 = big_factorial(7);  // (n-4)! at n = 11
  for (std::uint64_t n = 11; n <= max_n; ++n) {
    if (n > 11) f4 *= (n - 4);
    const RowClassification rc = classify_row(n);  // exclusivity checked
    const BigCount f3 = f4 * (n - 3);
    const BigCount f2 = f3 * (n - 2);
    case_c0(rc.row, n, f2, f3, f4);  // divisions checked exact
  }
}

}  // namespace altgraph
