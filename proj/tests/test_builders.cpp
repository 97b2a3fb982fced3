#include <doctest.h>

#include <algorithm>
#include <set>

#include "altgraph/builders.hpp"
#include "altgraph/census.hpp"
#include "altgraph/numbers.hpp"

using namespace altgraph;

namespace {

std::set<std::string> labels_of(const UndirectedGraph& g,
                                const std::vector<std::size_t>& vertices) {
  std::set<std::string> out;
  for (std::size_t v : vertices) out.insert(g.label(v));
  return out;
}

std::set<std::string> component_labels(const UndirectedGraph& g,
                                       const std::string& label) {
  return labels_of(g, component_of(g, components(g), label));
}

}  // namespace

TEST_SUITE_BEGIN("builders");

TEST_CASE("proper power graph of A_4") {
  const auto g = build_proper_power_graph(4);
  CHECK(g.num_vertices == 11);
  CHECK(g.edges.size() == 4);  // each 3-cycle pairs with its inverse
  const auto census = components(g);
  CHECK(census.component_count == 7);
  // double transpositions are the isolated vertices
  const auto isolated = isolated_vertices(g);
  CHECK(isolated.size() == 3);
  for (std::size_t v : isolated)
    CHECK(g.vertex_type(v) == PartitionType::parse("[2^2]"));
}

TEST_CASE("proper power graph of A_5") {
  const auto g = build_proper_power_graph(5);
  CHECK(g.num_vertices == 59);
  CHECK(components(g).component_count == 31);
  // 10 inverse pairs of 3-cycles plus 6 tournaments of 4 generators
  CHECK(g.edges.size() == 46);
  CHECK(BigCount(g.edges.size()) == edge_count_formula(5));
}

TEST_CASE("quotient power graph of A_4 is totally disconnected") {
  const auto g = build_quotient_power_graph(4);
  CHECK(g.num_vertices == 7);
  CHECK(g.edges.empty());
  CHECK(components(g).component_count == 7);
}

TEST_CASE("quotient component of the double transposition in A_6") {
  // (1 3 2 4)(5 6) and its inverse generate the same subgroup, so the
  // component is a single edge: the [2,4]-class above and the
  // [1^2,2^2]-class below.
  const auto g = build_quotient_power_graph(6);
  const auto comp = component_of(g, components(g), "(1 2)(3 4)");
  CHECK(comp.size() == 2);
  std::multiset<std::string> types;
  for (std::size_t v : comp) types.insert(g.vertex_type(v).to_string());
  CHECK(types == std::multiset<std::string>{"[1^2,2^2]", "[2,4]"});
  CHECK(component_labels(g, "(1 2)(3 4)") ==
        std::set<std::string>{"(1 2)(3 4)", "(1 3 2 4)(5 6)"});
  // total count for the degree still matches the reference table
  CHECK(components(g).component_count == 121);
}

TEST_CASE("quotient power graph of A_9") {
  const auto g = build_quotient_power_graph(9);
  CHECK(components(g).component_count == 5442);
}

TEST_CASE("power type graph of A_5 is totally disconnected") {
  const auto g = build_power_type_graph(5);
  CHECK(g.num_vertices == 3);
  CHECK(isolated_vertices(g).size() == 3);
}

TEST_CASE("power type graph of A_8") {
  const auto g = build_power_type_graph(8);
  CHECK(components(g).component_count == 3);
  CHECK(component_labels(g, "[1^4,2^2]") ==
        std::set<std::string>{"[1^4,2^2]", "[1^5,3]", "[1,2^2,3]", "[3,5]",
                              "[1^3,5]", "[1^2,2,4]"});
  CHECK(component_labels(g, "[2^4]") ==
        std::set<std::string>{"[2^4]", "[2,6]", "[1^2,3^2]", "[4^2]"});
  CHECK(labels_of(g, isolated_vertices(g)) ==
        std::set<std::string>{"[1,7]"});
}

TEST_CASE("power type graph of A_9: component of [3^3]") {
  const auto g = build_power_type_graph(9);
  CHECK(component_labels(g, "[3^3]") ==
        std::set<std::string>{"[3^3]", "[9]"});
  CHECK(components(g).component_count == 4);
}

TEST_CASE("power type graphs at degree 10 and beyond") {
  CHECK(components(build_power_type_graph(10)).component_count == 3);
  CHECK(labels_of(build_power_type_graph(12),
                  isolated_vertices(build_power_type_graph(12))) ==
        std::set<std::string>{"[1,11]"});
  CHECK(components(build_power_type_graph(16)).component_count == 1);
}

TEST_CASE("order graphs of small degrees") {
  const auto g6 = build_order_graph(6);
  const auto census6 = components(g6);
  CHECK(census6.component_count == 3);
  CHECK(component_labels(g6, "3") == std::set<std::string>{"3"});
  CHECK(component_labels(g6, "5") == std::set<std::string>{"5"});
  CHECK(component_labels(g6, "2") == std::set<std::string>{"2", "4"});

  const auto g7 = build_order_graph(7);
  CHECK(components(g7).component_count == 3);
  CHECK(component_labels(g7, "2") ==
        std::set<std::string>{"2", "3", "4", "6"});
  CHECK(component_labels(g7, "5") == std::set<std::string>{"5"});
  CHECK(component_labels(g7, "7") == std::set<std::string>{"7"});

  CHECK(labels_of(build_order_graph(8),
                  isolated_vertices(build_order_graph(8))) ==
        std::set<std::string>{"7"});
  CHECK(components(build_order_graph(10)).component_count == 1);
}

TEST_CASE("capacity ceilings") {
  CHECK_THROWS_AS(build_proper_power_graph(10), CapacityError);
  CHECK_THROWS_AS(build_quotient_power_graph(11), CapacityError);
  CHECK_THROWS_AS(build_power_type_graph(65), CapacityError);
  CHECK_THROWS_AS(build_order_graph(65), CapacityError);
  CHECK_THROWS_AS(build_power_type_graph(2), std::invalid_argument);
  BuildLimits raised;
  raised.element_graph_ceiling = 10;
  // allowed but not exercised here; the ceiling check must not fire
  // for n = 9 either way
  CHECK_NOTHROW(build_proper_power_graph(4, raised));
}

TEST_CASE("component inequalities across the four graphs") {
  for (int n = 3; n <= 8; ++n) {
    const auto order_count = components(build_order_graph(n)).component_count;
    const auto ptype_count =
        components(build_power_type_graph(n)).component_count;
    const auto quotient_count =
        components(build_quotient_power_graph(n)).component_count;
    const auto element_count =
        components(build_proper_power_graph(n)).component_count;
    CHECK(order_count <= ptype_count);
    CHECK(ptype_count <= quotient_count);
    CHECK(quotient_count == element_count);
  }
}

TEST_CASE("odd or unknown labels are rejected") {
  const auto g = build_proper_power_graph(4);
  CHECK_FALSE(g.find_label("(1 2)").has_value());  // odd permutation
  CHECK(g.find_label("(1 2)(3 4)").has_value());
  const auto q = build_quotient_power_graph(4);
  // any class member addresses the class vertex
  CHECK(q.find_label("(1 2 3)") == q.find_label("(1 3 2)"));
}

TEST_CASE("quotient components are fibre unions of element components") {
  for (int n = 4; n <= 9; ++n) {
    const auto element_graph = build_proper_power_graph(n);
    const auto quotient = build_quotient_power_graph(n);
    const auto element_census = components(element_graph);
    const auto quotient_census = components(quotient);
    const auto to_class = element_to_class_map(element_graph, quotient);

    // every fibre is a full set of generators of one cyclic subgroup
    std::vector<std::uint64_t> fibre_size(quotient.num_vertices, 0);
    for (std::size_t v = 0; v < element_graph.num_vertices; ++v)
      ++fibre_size[to_class[v]];
    for (std::size_t c = 0; c < quotient.num_vertices; ++c)
      CHECK(fibre_size[c] == totient(quotient.vertex_order(c)));

    // The induced map between component ids must be a bijection.
    std::vector<std::uint32_t> image(quotient_census.component_count,
                                     UINT32_MAX);
    std::vector<bool> hit(element_census.component_count, false);
    for (std::size_t v = 0; v < element_graph.num_vertices; ++v) {
      const std::uint32_t qc = quotient_census.component_id[to_class[v]];
      const std::uint32_t ec = element_census.component_id[v];
      if (image[qc] == UINT32_MAX) {
        image[qc] = ec;
        CHECK_FALSE(hit[ec]);
        hit[ec] = true;
      } else {
        CHECK(image[qc] == ec);
      }
    }
    CHECK(quotient_census.component_count == element_census.component_count);
  }
}

TEST_CASE("even-order classes split across components for 4 <= n <= 9") {
  for (int n = 4; n <= 9; ++n) {
    const auto quotient = build_quotient_power_graph(n);
    const auto census = components(quotient);
    std::set<std::uint32_t> even_components;
    for (std::size_t v = 0; v < quotient.num_vertices; ++v)
      if (quotient.vertex_order(v) % 2 == 0)
        even_components.insert(census.component_id[v]);
    CHECK(even_components.size() > 1);
  }
}

TEST_CASE("type projection of quotient components") {
  // Types admissible for a quotient component form a power type
  // component.
  for (int n = 4; n <= 8; ++n) {
    const auto quotient = build_quotient_power_graph(n);
    const auto quotient_census = components(quotient);
    const auto ptype = build_power_type_graph(n);
    const auto ptype_census = components(ptype);
    for (std::uint32_t c = 0; c < quotient_census.component_count; ++c) {
      std::set<std::uint32_t> projected_components;
      std::set<std::size_t> projected_types;
      for (const auto& [type_index, count] :
           quotient_census.type_multiplicity[c]) {
        const auto v = ptype.find_label(quotient.types[type_index].to_string());
        REQUIRE(v.has_value());
        projected_types.insert(*v);
        projected_components.insert(ptype_census.component_id[*v]);
      }
      CHECK(projected_components.size() == 1);
      // ... and the projection is the whole component, not a subset
      const std::uint32_t target = *projected_components.begin();
      CHECK(projected_types.size() == ptype_census.sizes[target]);
    }
  }
}

TEST_SUITE_END();
