#include <doctest.h>

#include <stdexcept>

#include "altgraph/builders.hpp"
#include "altgraph/graph.hpp"

using namespace altgraph;

namespace {

// Hand-built order-kind graph over the given values and edges.
UndirectedGraph order_graph(std::vector<std::uint64_t> values,
                            std::vector<std::pair<std::uint32_t, std::uint32_t>>
                                edges) {
  UndirectedGraph g;
  g.kind = GraphKind::order;
  g.n = 0;
  g.order_value = std::move(values);
  g.num_vertices = g.order_value.size();
  g.edges = std::move(edges);
  g.finalize_edges();
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("kind names round trip") {
  for (GraphKind kind :
       {GraphKind::proper_power, GraphKind::quotient_power,
        GraphKind::power_type, GraphKind::order}) {
    CHECK(kind_from_name(kind_name(kind)) == kind);
  }
  CHECK_FALSE(kind_from_name("nonsense").has_value());
}

TEST_CASE("union-find") {
  UnionFind uf(5);
  CHECK(uf.component_count() == 5);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(3, 4));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.component_count() == 3);
  CHECK(uf.find(0) == uf.find(1));
  CHECK(uf.find(0) != uf.find(2));
  CHECK(uf.size_of(3) == 2);
  CHECK(uf.size_of(2) == 1);
}

TEST_CASE("components of an edgeless graph") {
  const auto g = order_graph({2, 3, 5, 7}, {});
  const auto census = components(g);
  CHECK(census.component_count == 4);
  CHECK(census.sizes == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(isolated_vertices(g).size() == 4);
}

TEST_CASE("components of a path") {
  const auto g = order_graph({2, 4, 8}, {{0, 1}, {1, 2}});
  const auto census = components(g);
  CHECK(census.component_count == 1);
  CHECK(census.sizes == std::vector<std::uint64_t>{3});
  CHECK(isolated_vertices(g).empty());
  CHECK(component_of(g, census, std::size_t{1}) ==
        std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("component ids follow first appearance") {
  const auto g = order_graph({2, 3, 4, 9}, {{1, 3}, {0, 2}});
  const auto census = components(g);
  CHECK(census.component_id == std::vector<std::uint32_t>{0, 1, 0, 1});
}

TEST_CASE("edges are canonical") {
  auto g = order_graph({2, 4, 8}, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edges ==
        std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.vertex_degrees() == std::vector<std::uint32_t>{1, 2, 1});
}

TEST_CASE("type multiplicities add up per type") {
  // every k_C(T) column sums to the number of vertices of type T
  const auto g = altgraph::build_quotient_power_graph(6);
  const auto census = components(g);
  std::vector<std::uint64_t> by_type(g.types.size(), 0);
  for (std::size_t v = 0; v < g.num_vertices; ++v) ++by_type[g.type_of[v]];
  std::vector<std::uint64_t> from_census(g.types.size(), 0);
  std::uint64_t total = 0;
  for (std::uint32_t c = 0; c < census.component_count; ++c) {
    total += census.sizes[c];
    for (const auto& [t, k] : census.type_multiplicity[c]) from_census[t] += k;
  }
  CHECK(from_census == by_type);
  CHECK(total == g.num_vertices);
}

TEST_CASE("label lookup on an order graph") {
  const auto g = order_graph({2, 3, 5}, {});
  CHECK(g.label(1) == "3");
  CHECK(g.find_label("5") == std::size_t{2});
  CHECK_FALSE(g.find_label("7").has_value());
  const auto census = components(g);
  CHECK_THROWS_AS(component_of(g, census, "7"), std::invalid_argument);
}

TEST_SUITE_END();
