#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "altgraph/builders.hpp"
#include "altgraph/census.hpp"
#include "altgraph/reporting.hpp"
#include "altgraph/verify.hpp"

using namespace altgraph;

TEST_SUITE_BEGIN("census");

TEST_CASE("mu_elements") {
  CHECK(mu_elements(PartitionType::parse("[1^2,2^2]")) == 45);
  CHECK(mu_elements(PartitionType::trivial(9)) == 1);
  CHECK_THROWS_AS(mu_elements(PartitionType::parse("[1,2]")),
                  std::invalid_argument);

  // direct enumeration oracle for the 5-cycles of A_5
  std::size_t five_cycles = 0;
  for_each_alternating(5, [&](const Permutation& x) {
    if (cycle_type(x) == PartitionType::parse("[5]")) ++five_cycles;
  });
  CHECK(mu_elements(PartitionType::parse("[5]")) == five_cycles);
  CHECK(five_cycles == 24);
}

TEST_CASE("exact division guards") {
  CHECK(exact_div(BigCount(12), BigCount(4), "test") == 3);
  CHECK_THROWS_AS(exact_div(BigCount(7), BigCount(2), "test"),
                  std::logic_error);
  CHECK_THROWS_AS(exact_div(BigCount(7), BigCount(0), "test"),
                  std::logic_error);
  // the class-count quotient is exact for every admissible type
  for (int n = 2; n <= 12; ++n)
    for (const PartitionType& t : enumerate_types(n, true, true))
      CHECK_NOTHROW(mu_classes(t));
}

TEST_CASE("mu_classes") {
  CHECK(mu_classes(PartitionType::parse("[3^3]")) == 1120);
  CHECK(mu_classes(PartitionType::parse("[5^2]")) == 18144);
  CHECK(mu_classes(PartitionType::parse("[1,3^3]")) == 11200);
  CHECK(mu_classes(PartitionType::parse("[1,2^2]")) == 15);
  CHECK(mu_classes(PartitionType::parse("[1^2,3]")) == 10);
  CHECK(mu_classes(PartitionType::parse("[5]")) == 6);
}

TEST_CASE("membership in A") {
  CHECK_FALSE(in_set_A(16));
  CHECK_FALSE(in_set_A(51));
  for (std::uint64_t k = 2; k <= 8; ++k) CHECK_FALSE(in_set_A(4 * k * k));
  for (std::uint64_t n = 4; n <= 15; ++n) CHECK(in_set_A(n));
  CHECK(in_set_A(15));  // 15 = 2*7 + 1
}

TEST_CASE("critical primes") {
  CHECK(critical_primes(11) == std::vector<std::uint64_t>{5, 11});
  CHECK(critical_primes(13) == std::vector<std::uint64_t>{11, 13});
  CHECK(critical_primes(16).empty());
  CHECK(critical_primes(14) == std::vector<std::uint64_t>{7, 13});
  CHECK_THROWS_AS(critical_primes(10), std::invalid_argument);
  for (std::uint64_t n = 11; n <= 3000; ++n)
    CHECK(critical_primes(n).size() <= 2);
}

TEST_CASE("row classification") {
  CHECK(classify_row(21).row == CountsCase::nm2_prime_only);
  CHECK(classify_row(12).row == CountsCase::nm1_prime_only);
  CHECK(classify_row(16).row == CountsCase::outside_A);
  CHECK(classify_row(11).row == CountsCase::n_and_half_prime);
  CHECK(classify_row(13).row == CountsCase::n_and_nm2_prime);
  CHECK(classify_row(14).row == CountsCase::nm1_and_half_prime);
  CHECK(classify_row(15).row == CountsCase::nm2_and_half_prime);  // 13, 7
  CHECK(classify_row(22).row == CountsCase::even_half_prime_only);
  CHECK(classify_row(37).row == CountsCase::n_prime_only);
  CHECK(classify_row(27).row == CountsCase::half_prime_only);  // 13
  CHECK_THROWS_AS(classify_row(10), std::invalid_argument);
  // exactly one predicate must match everywhere
  for (std::uint64_t n = 11; n <= 2000; ++n) CHECK_NOTHROW(classify_row(n));
}

TEST_CASE("closed forms") {
  const CensusRow ten = closed_form_counts(10);
  CHECK(ten.c0 == 29345);
  CHECK(ten.c0_ptype == 3);
  CHECK(ten.c0_order == 1);
  CHECK_FALSE(ten.two_connected);

  CHECK(closed_form_counts(21).c0 == BigCount("74694359900160001"));
  CHECK(closed_form_counts(21).c0 == BigCount(21) * 10 * big_factorial(17) + 1);
  CHECK(closed_form_counts(11).c0 == 562465);  // 9! + 4*11*9*7!/10 + 1
  CHECK(closed_form_counts(16).c0 == 1);
  CHECK(closed_form_counts(16).two_connected);
  CHECK(closed_form_counts(3).c0 == 1);
  CHECK(closed_form_counts(3).two_connected);
  CHECK_THROWS_AS(closed_form_counts(2), std::invalid_argument);

  for (std::uint64_t n = 3; n <= 10; ++n) {
    const CensusRow stored = small_degree_counts(n);
    const CensusRow closed = closed_form_counts(n);
    CHECK(stored.c0 == closed.c0);
    CHECK(stored.c0_ptype == closed.c0_ptype);
    CHECK(stored.c0_order == closed.c0_order);
  }
  CHECK_NOTHROW(validate_closed_forms(3000));
}

TEST_CASE("procedure") {
  const auto g3 = build_quotient_power_graph(3);
  const auto r3 = procedure_count(g3);
  CHECK(r3.component_count == 1);
  CHECK(r3.steps == 1);

  const auto g6 = build_quotient_power_graph(6);
  const auto r6 = procedure_count(g6);
  CHECK(r6.component_count == 121);
  CHECK(r6.steps == 4);

  const auto g9 = build_quotient_power_graph(9);
  const auto census9 = components(g9);
  const auto r9 = procedure_count(g9, census9);
  CHECK(r9.component_count == 5442);
  CHECK(r9.steps == 4);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    ProcedureOptions options;
    options.seed = seed;
    const auto randomized = procedure_count(g9, census9, options);
    CHECK(randomized.component_count == 5442);
    CHECK(randomized.steps == 4);
  }
}

TEST_CASE("edge count formula") {
  CHECK(edge_count_formula(4) == 4);
  CHECK(edge_count_formula(5) == 46);
  CHECK(BigCount(build_proper_power_graph(6).edges.size()) ==
        edge_count_formula(6));
}

TEST_CASE("structure reports") {
  const StructureReport r12 = structure_report(12);
  CHECK(r12.isolated_types ==
        std::vector<PartitionType>{PartitionType::parse("[1,11]")});
  CHECK(r12.isolated_primes == std::vector<std::uint64_t>{11});
  CHECK_FALSE(r12.main_is_complete);
  CHECK(std::binary_search(r12.main_component_types.begin(),
                           r12.main_component_types.end(),
                           PartitionType::parse("[1^8,2^2]")));

  const StructureReport r13 = structure_report(13);
  CHECK(r13.isolated_types ==
        std::vector<PartitionType>{PartitionType::parse("[1^2,11]"),
                                   PartitionType::parse("[13]")});

  const StructureReport r16 = structure_report(16);
  CHECK(r16.isolated_types.empty());
  CHECK(r16.main_component_types.size() ==
        enumerate_types(16, true, true).size());

  CHECK_THROWS_AS(structure_report(10), std::invalid_argument);
}

TEST_CASE("components containing order-p elements") {
  CHECK(c_p_components(4, 2) == 3);
  CHECK(c_p_components(7, 7) == 120);
  CHECK(c_p_components(9, 7) == 4320);
  CHECK(c_p_components(6, 5) == 36);
  CHECK(c_p_components(5, 3) == 10);
  CHECK(c_p_components(5, 5) == 6);
  CHECK_THROWS_AS(c_p_components(10, 7), std::invalid_argument);
  CHECK_THROWS_AS(c_p_components(9, 6), std::invalid_argument);

  // brute-force oracle: count quotient components holding an order-p
  // class
  for (const auto& [n, p] : std::vector<std::pair<int, std::uint64_t>>{
           {4, 2}, {5, 3}, {5, 5}, {6, 5}, {7, 5}, {7, 7}, {8, 7}, {9, 7}}) {
    const auto g = build_quotient_power_graph(n);
    const auto census = components(g);
    std::vector<bool> seen(census.component_count, false);
    std::uint64_t with_order_p = 0;
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
      if (g.vertex_order(v) == p && !seen[census.component_id[v]]) {
        seen[census.component_id[v]] = true;
        ++with_order_p;
      }
    }
    CHECK(c_p_components(n, p) == with_order_p);
  }
}

TEST_CASE("two-connectivity") {
  CHECK(two_connected(3));
  CHECK(two_connected(16));
  CHECK_FALSE(two_connected(15));
  CHECK(two_connected(51));
  CHECK_FALSE(two_connected(12));
}

TEST_CASE("order graph verdict") {
  CHECK(order_graph_verdict(6) == 3);
  CHECK(order_graph_verdict(13) == 3);
  CHECK(order_graph_verdict(10) == 1);
  for (std::uint64_t n = 3; n <= 10; ++n)
    CHECK(order_graph_verdict(n) == small_degree_counts(n).c0_order);
  for (std::uint64_t n = 11; n <= 200; ++n)
    CHECK(order_graph_verdict(n) == closed_form_counts(n).c0_order);
}

TEST_CASE("factored expressions") {
  CHECK(factored_expression(classify_row(21)) == "21*10*17!+1");
  CHECK(factored_expression(classify_row(11)) == "9!+4*11*9*7!/10+1");
  CHECK(factored_expression(classify_row(37)) == "35!+1");
  CHECK(factored_expression(classify_row(16)) == "1");
  CHECK(factored_expression(classify_row(12)) == "12*9!+1");
}

TEST_SUITE_END();
