#include "altgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "altgraph/builders.hpp"
#include "altgraph/census.hpp"
#include "altgraph/reporting.hpp"

namespace altgraph {

namespace {

using Clock = std::chrono::steady_clock;

// Runs a check body, converting exceptions into failures. The body
// receives an output stream for failure details and returns pass/fail.
template <typename Body>
Check run_check(std::string name, Body&& body) {
  Check check;
  check.name = std::move(name);
  const auto start = Clock::now();
  std::ostringstream detail;
  try {
    check.pass = body(detail);
  } catch (const std::exception& e) {
    check.pass = false;
    detail << "exception: " << e.what();
  }
  check.detail = detail.str();
  check.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return check;
}

std::uint32_t count_components(const UndirectedGraph& g) {
  return components(g).component_count;
}

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::vector<Check> check_small_degree_counts(int max_n,
                                             const BuildLimits& limits) {
  std::vector<Check> checks;
  for (int n = 3; n <= max_n; ++n) {
    checks.push_back(run_check(
        "brute-force counts n=" + std::to_string(n),
        [n, &limits](std::ostringstream& detail) {
          const CensusRow expected = small_degree_counts(n);
          const UndirectedGraph quotient =
              build_quotient_power_graph(n, limits);
          const std::uint32_t quotient_count = count_components(quotient);
          if (BigCount(quotient_count) != expected.c0) {
            detail << "quotient count " << quotient_count << " != "
                   << to_decimal(expected.c0);
            return false;
          }
          if (n <= limits.element_graph_ceiling) {
            const std::uint32_t element_count =
                count_components(build_proper_power_graph(n, limits));
            if (element_count != quotient_count) {
              detail << "element-level count " << element_count
                     << " != quotient count " << quotient_count;
              return false;
            }
          }
          const std::uint32_t ptype_count =
              count_components(build_power_type_graph(n, limits));
          if (ptype_count != expected.c0_ptype) {
            detail << "power type count " << ptype_count << " != "
                   << expected.c0_ptype;
            return false;
          }
          const std::uint32_t order_count =
              count_components(build_order_graph(n, limits));
          if (order_count != expected.c0_order) {
            detail << "order count " << order_count << " != "
                   << expected.c0_order;
            return false;
          }
          // Class count must match the mu-formula total.
          BigCount class_total = 0;
          for (const PartitionType& t : quotient.types)
            class_total += mu_classes(t);
          if (class_total != quotient.num_vertices) {
            detail << "class total " << to_decimal(class_total)
                   << " != vertex count " << quotient.num_vertices;
            return false;
          }
          // Closed forms must agree with the stored values.
          const CensusRow closed = closed_form_counts(n);
          if (closed.c0 != expected.c0 ||
              closed.c0_ptype != expected.c0_ptype ||
              closed.c0_order != expected.c0_order) {
            detail << "closed form disagrees with stored values";
            return false;
          }
          return true;
        }));
  }
  return checks;
}

std::vector<Check> check_procedure(int max_n, std::uint64_t seed,
                                   int randomized_runs,
                                   const BuildLimits& limits) {
  std::vector<Check> checks;
  for (int n = 3; n <= max_n; ++n) {
    checks.push_back(run_check(
        "procedure vs census n=" + std::to_string(n),
        [n, seed, randomized_runs, &limits](std::ostringstream& detail) {
          const UndirectedGraph quotient =
              build_quotient_power_graph(n, limits);
          const ComponentCensus census = components(quotient);
          const std::uint32_t ptype_count =
              count_components(build_power_type_graph(n, limits));

          const ProcedureResult det = procedure_count(quotient, census);
          if (det.component_count != census.component_count ||
              det.steps != ptype_count) {
            detail << "deterministic run: count "
                   << to_decimal(det.component_count) << " (census "
                   << census.component_count << "), steps " << det.steps
                   << " (power type components " << ptype_count << ")";
            return false;
          }
          for (int i = 0; i < randomized_runs; ++i) {
            ProcedureOptions options;
            options.seed = seed + 1000u * static_cast<std::uint64_t>(n) +
                           static_cast<std::uint64_t>(i);
            const ProcedureResult random_run =
                procedure_count(quotient, census, options);
            if (random_run.component_count != census.component_count ||
                random_run.steps != ptype_count) {
              detail << "randomized run " << i << " (seed " << *options.seed
                     << "): count " << to_decimal(random_run.component_count)
                     << ", steps " << random_run.steps;
              return false;
            }
          }
          return true;
        }));
  }
  return checks;
}

std::vector<Check> check_partition_level_counts(int from_n, int to_n,
                                                const BuildLimits& limits) {
  std::vector<Check> checks;
  for (int n = from_n; n <= to_n; ++n) {
    checks.push_back(run_check(
        "partition-level counts n=" + std::to_string(n),
        [n, &limits](std::ostringstream& detail) {
          const CensusRow closed = closed_form_counts(n);
          const std::uint32_t ptype_count =
              count_components(build_power_type_graph(n, limits));
          const std::uint32_t order_count =
              count_components(build_order_graph(n, limits));
          if (ptype_count != closed.c0_ptype) {
            detail << "power type count " << ptype_count << " != closed form "
                   << closed.c0_ptype;
            return false;
          }
          if (order_count != closed.c0_order) {
            detail << "order count " << order_count << " != closed form "
                   << closed.c0_order;
            return false;
          }
          if (order_count != order_graph_verdict(n)) {
            detail << "order count " << order_count << " != verdict "
                   << order_graph_verdict(n);
            return false;
          }
          return true;
        }));
  }
  return checks;
}

std::vector<Check> check_structure(int from_n, int to_n,
                                   const BuildLimits& limits) {
  std::vector<Check> checks;
  for (int n = from_n; n <= to_n; ++n) {
    checks.push_back(run_check(
        "structure n=" + std::to_string(n),
        [n, &limits](std::ostringstream& detail) {
          const StructureReport report = structure_report(n, limits);
          std::vector<std::uint64_t> primes = report.isolated_primes;
          std::sort(primes.begin(), primes.end());
          if (primes != critical_primes(n)) {
            detail << "isolated primes do not match the critical primes";
            return false;
          }
          if (primes.size() > 2) {
            detail << "more than two isolated primes";
            return false;
          }
          if (report.main_is_complete) {
            detail << "main component reported complete";
            return false;
          }
          // Exhibit a non-adjacent pair in the main component with
          // orders 2 and 3.
          const PartitionType order2 =
              PartitionType::from_run_length({{1, n - 4}, {2, 2}});
          const PartitionType order3 =
              PartitionType::from_run_length({{1, n - 3}, {3, 1}});
          const auto& main_types = report.main_component_types;
          if (!std::binary_search(main_types.begin(), main_types.end(),
                                  order2) ||
              !std::binary_search(main_types.begin(), main_types.end(),
                                  order3)) {
            detail << "main component misses " << order2.to_string() << " or "
                   << order3.to_string();
            return false;
          }
          const UndirectedGraph g = build_power_type_graph(n, limits);
          const auto u = g.find_label(order2.to_string());
          const auto v = g.find_label(order3.to_string());
          if (!u || !v ||
              g.has_edge(static_cast<std::uint32_t>(*u),
                         static_cast<std::uint32_t>(*v))) {
            detail << "expected non-adjacent pair " << order2.to_string()
                   << ", " << order3.to_string();
            return false;
          }
          return true;
        }));
  }
  return checks;
}

std::vector<Check> check_edge_identity(int max_n, const BuildLimits& limits) {
  std::vector<Check> checks;
  for (int n = 4; n <= max_n; ++n) {
    checks.push_back(run_check(
        "edge-count identity n=" + std::to_string(n),
        [n, &limits](std::ostringstream& detail) {
          const UndirectedGraph g = build_proper_power_graph(n, limits);
          const BigCount expected = edge_count_formula(n);
          if (BigCount(g.edges.size()) != expected) {
            detail << "built " << g.edges.size() << " edges, formula gives "
                   << to_decimal(expected);
            return false;
          }
          return true;
        }));
  }
  return checks;
}

std::vector<Check> check_isolated_class_law(int max_n,
                                            const BuildLimits& limits) {
  std::vector<Check> checks;
  for (int n = 4; n <= max_n; ++n) {
    checks.push_back(run_check(
        "isolated-class law n=" + std::to_string(n),
        [n, &limits](std::ostringstream& detail) {
          const UndirectedGraph element_graph =
              build_proper_power_graph(n, limits);
          const UndirectedGraph quotient =
              build_quotient_power_graph(n, limits);
          const ComponentCensus element_census = components(element_graph);
          const auto to_class = element_to_class_map(element_graph, quotient);

          std::vector<std::vector<std::uint32_t>> fibres(
              quotient.num_vertices);
          for (std::uint32_t v = 0; v < element_graph.num_vertices; ++v)
            fibres[to_class[v]].push_back(v);

          const auto degrees = quotient.vertex_degrees();
          std::size_t isolated_count = 0;
          for (std::size_t c = 0; c < quotient.num_vertices; ++c) {
            if (degrees[c] != 0) continue;
            ++isolated_count;
            const std::uint64_t o = quotient.vertex_order(c);
            if (!is_prime(o)) {
              detail << "isolated class " << quotient.label(c)
                     << " has composite order " << o;
              return false;
            }
            const auto& fibre = fibres[c];
            if (fibre.size() != o - 1) {
              detail << "fibre of " << quotient.label(c) << " has "
                     << fibre.size() << " elements, expected " << (o - 1);
              return false;
            }
            const std::uint32_t component =
                element_census.component_id[fibre.front()];
            if (element_census.sizes[component] != fibre.size()) {
              detail << "element component of " << quotient.label(c)
                     << " is not the fibre";
              return false;
            }
            for (std::size_t i = 0; i < fibre.size(); ++i) {
              if (element_census.component_id[fibre[i]] != component) {
                detail << "fibre of " << quotient.label(c)
                       << " spans components";
                return false;
              }
              for (std::size_t j = i + 1; j < fibre.size(); ++j) {
                if (!element_graph.has_edge(fibre[i], fibre[j])) {
                  detail << "fibre of " << quotient.label(c)
                         << " is not complete";
                  return false;
                }
              }
            }
          }
          detail << isolated_count << " isolated classes checked";
          return true;
        }));
  }
  return checks;
}

std::vector<Check> check_algebra(std::uint64_t closed_form_max_n) {
  std::vector<Check> checks;

  checks.push_back(run_check(
      "partition power laws (n<=12)", [](std::ostringstream& detail) {
        for (int n = 1; n <= 12; ++n) {
          for (const PartitionType& t : enumerate_types(n, false, false)) {
            const std::uint64_t o = t.order();
            for (std::uint64_t a = 1; a <= 2 * o; ++a) {
              const PartitionType ta = t.power(a);
              if (ta != t.power(std::gcd(a, o))) {
                detail << "gcd reduction fails for " << t.to_string()
                       << " at a=" << a;
                return false;
              }
              if (ta.n() != n) {
                detail << "power of " << t.to_string()
                       << " does not partition " << n;
                return false;
              }
              if (ta.order() != o / std::gcd(a, o)) {
                detail << "order law fails for " << t.to_string()
                       << " at a=" << a;
                return false;
              }
              if (t.is_proper_power_exponent(a) !=
                  (!ta.is_trivial() && ta != t)) {
                detail << "proper-power criterion fails for " << t.to_string()
                       << " at a=" << a;
                return false;
              }
            }
            // Divisor exponents reach every power.
            std::vector<PartitionType> via_divisors = t.proper_powers();
            std::vector<PartitionType> via_sweep;
            for (std::uint64_t a = 1; a <= 3 * o; ++a)
              if (t.is_proper_power_exponent(a)) via_sweep.push_back(t.power(a));
            std::sort(via_sweep.begin(), via_sweep.end());
            via_sweep.erase(std::unique(via_sweep.begin(), via_sweep.end()),
                            via_sweep.end());
            if (via_divisors != via_sweep) {
              detail << "divisor enumeration misses powers of "
                     << t.to_string();
              return false;
            }
          }
        }
        return true;
      }));

  checks.push_back(run_check(
      "permutation/type commuting square (n<=7)",
      [](std::ostringstream& detail) {
        for (int n = 2; n <= 7; ++n) {
          bool ok = true;
          for_each_alternating(n, [&](const Permutation& x) {
            if (!ok) return;
            const PartitionType t = cycle_type(x);
            const std::uint64_t o = order_of(x);
            if (o != t.order() || !t.is_alternating() || !is_even(x)) {
              detail << "order/parity mismatch at " << to_cycle_string(x);
              ok = false;
              return;
            }
            for (std::uint64_t a = 0; a <= 2 * o + 1; ++a) {
              if (cycle_type(power(x, a)) != t.power(a)) {
                detail << "commuting square fails at " << to_cycle_string(x)
                       << " a=" << a;
                ok = false;
                return;
              }
            }
          });
          if (!ok) return false;
        }
        return true;
      }));

  checks.push_back(run_check(
      "parity vs transposition oracle (n<=6)", [](std::ostringstream& detail) {
        for (int n = 1; n <= 6; ++n) {
          std::vector<std::uint8_t> table(n);
          std::iota(table.begin(), table.end(), std::uint8_t{0});
          do {
            // Oracle: parity of the inversion count.
            int inversions = 0;
            for (int i = 0; i < n; ++i)
              for (int j = i + 1; j < n; ++j)
                if (table[j] < table[i]) ++inversions;
            const Permutation p = Permutation::from_table(table);
            if (is_even(p) != (inversions % 2 == 0)) {
              detail << "parity mismatch at " << to_cycle_string(p);
              return false;
            }
            if (cycle_type(p).is_alternating() != is_even(p)) {
              detail << "type parity mismatch at " << to_cycle_string(p);
              return false;
            }
          } while (std::next_permutation(table.begin(), table.end()));
        }
        return true;
      }));

  checks.push_back(run_check(
      "minimal annihilating exponent (n<=6)", [](std::ostringstream& detail) {
        for (int n = 2; n <= 6; ++n) {
          bool ok = true;
          for_each_alternating(n, [&](const Permutation& x) {
            if (!ok) return;
            std::uint64_t k = 1;
            Permutation y = x;
            while (!y.is_identity()) {
              y = compose(y, x);
              ++k;
            }
            if (k != order_of(x)) {
              detail << "order mismatch at " << to_cycle_string(x);
              ok = false;
            }
          });
          if (!ok) return false;
        }
        return true;
      }));

  checks.push_back(run_check(
      "mu totals (n<=20)", [](std::ostringstream& detail) {
        for (int n = 2; n <= 20; ++n) {
          BigCount total = 0;
          for (const PartitionType& t : enumerate_types(n, true, false))
            total += mu_elements(t);
          const BigCount expected =
              big_factorial(static_cast<unsigned>(n)) / 2;
          if (total != expected) {
            detail << "mu total at n=" << n << " is " << to_decimal(total)
                   << ", expected " << to_decimal(expected);
            return false;
          }
        }
        return true;
      }));

  checks.push_back(run_check(
      "closed-form exactness (11<=n<=" + std::to_string(closed_form_max_n) +
          ")",
      [closed_form_max_n](std::ostringstream&) {
        validate_closed_forms(closed_form_max_n);  // throws on violation
        return true;
      }));

  checks.push_back(run_check(
      "factorial identity spellings (n<=1000)",
      [](std::ostringstream& detail) {
        for (std::uint64_t n = 5; n <= 1000; ++n) {
          const BigCount lhs = 4 * big_factorial(static_cast<unsigned>(n)) *
                               (n - 1);
          const BigCount rhs = 4 * BigCount(n) * (n - 2) *
                               big_factorial(static_cast<unsigned>(n - 4)) *
                               (n - 1) * (n - 1) * (n - 3);
          if (lhs != rhs) {
            detail << "identity fails at n=" << n;
            return false;
          }
        }
        return true;
      }));

  return checks;
}

std::vector<Check> check_reference_constants() {
  std::vector<Check> checks;

  checks.push_back(run_check(
      "degree-21 component count", [](std::ostringstream& detail) {
        const CensusRow row = closed_form_counts(21);
        if (row.c0 != BigCount("74694359900160001")) {
          detail << "c0(21) = " << to_decimal(row.c0);
          return false;
        }
        if (factored_expression(classify_row(21)) != "21*10*17!+1") {
          detail << "factored form: "
                 << factored_expression(classify_row(21));
          return false;
        }
        return true;
      }));

  checks.push_back(run_check(
      "first 2-connected degree is 16", [](std::ostringstream& detail) {
        for (std::uint64_t n = 4; n < 16; ++n) {
          if (two_connected(n)) {
            detail << "unexpected 2-connected degree " << n;
            return false;
          }
        }
        if (!two_connected(16) || in_set_A(16)) {
          detail << "16 not recognized as 2-connected";
          return false;
        }
        return true;
      }));

  checks.push_back(run_check(
      "degree 51 is 2-connected", [](std::ostringstream& detail) {
        if (!two_connected(51) || in_set_A(51)) {
          detail << "51 misclassified";
          return false;
        }
        return true;
      }));

  checks.push_back(run_check(
      "4k^2 lies outside A (k=2..8)", [](std::ostringstream& detail) {
        for (std::uint64_t k = 2; k <= 8; ++k) {
          const std::uint64_t n = 4 * k * k;
          if (in_set_A(n) || !two_connected(n)) {
            detail << "4*" << k << "^2 = " << n << " misclassified";
            return false;
          }
        }
        return true;
      }));

  return checks;
}

std::vector<Check> check_degree_ten(const BuildLimits& limits) {
  std::vector<Check> checks;

  checks.push_back(run_check(
      "degree-10 quotient census", [&limits](std::ostringstream& detail) {
        const UndirectedGraph quotient =
            build_quotient_power_graph(10, limits);
        const ComponentCensus census = components(quotient);
        if (census.component_count != 29345) {
          detail << "quotient count " << census.component_count
                 << " != 29345";
          return false;
        }
        const ProcedureResult procedure = procedure_count(quotient, census);
        if (procedure.component_count != 29345 || procedure.steps != 3) {
          detail << "procedure gave " << to_decimal(procedure.component_count)
                 << " in " << procedure.steps << " steps";
          return false;
        }
        const std::uint32_t ptype_count =
            count_components(build_power_type_graph(10, limits));
        if (ptype_count != 3) {
          detail << "power type count " << ptype_count << " != 3";
          return false;
        }
        const std::uint32_t order_count =
            count_components(build_order_graph(10, limits));
        if (order_count != 1) {
          detail << "order count " << order_count << " != 1";
          return false;
        }
        return true;
      }));

  checks.push_back(run_check(
      "degree-10 even-order classes share a component",
      [&limits](std::ostringstream& detail) {
        const UndirectedGraph quotient =
            build_quotient_power_graph(10, limits);
        const ComponentCensus census = components(quotient);
        std::uint32_t even_component = UINT32_MAX;
        for (std::size_t v = 0; v < quotient.num_vertices; ++v) {
          if (quotient.vertex_order(v) % 2 != 0) continue;
          if (even_component == UINT32_MAX) {
            even_component = census.component_id[v];
          } else if (census.component_id[v] != even_component) {
            detail << "even-order classes split across components";
            return false;
          }
        }
        return true;
      }));

  checks.push_back(run_check(
      "degree-10 element-level graph", [&limits](std::ostringstream& detail) {
        BuildLimits raised = limits;
        raised.element_graph_ceiling =
            std::max(raised.element_graph_ceiling, 10);
        const UndirectedGraph g = build_proper_power_graph(10, raised);
        if (BigCount(g.edges.size()) != edge_count_formula(10)) {
          detail << "edge count " << g.edges.size()
                 << " disagrees with the formula "
                 << to_decimal(edge_count_formula(10));
          return false;
        }
        const std::uint32_t element_count = count_components(g);
        if (element_count != 29345) {
          detail << "element-level count " << element_count << " != 29345";
          return false;
        }
        return true;
      }));

  return checks;
}

}  // namespace altgraph
