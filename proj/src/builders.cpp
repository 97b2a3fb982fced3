#include "altgraph/builders.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "altgraph/numbers.hpp"

namespace altgraph {

namespace {

void check_degree(int n, int ceiling, const char* what) {
  if (n < 3) throw std::invalid_argument("graph builders require n >= 3");
  if (n > ceiling) {
    std::ostringstream msg;
    msg << what << " for A_" << n << " exceeds its ceiling " << ceiling
        << " (override the ceiling to proceed)";
    throw CapacityError(msg.str());
  }
}

std::uint32_t type_index_of(const std::vector<PartitionType>& table,
                            const PartitionType& t) {
  const auto it = std::lower_bound(table.begin(), table.end(), t);
  if (it == table.end() || *it != t)
    throw std::logic_error("cycle type missing from type table: " +
                           t.to_string());
  return static_cast<std::uint32_t>(it - table.begin());
}

}  // namespace

UndirectedGraph build_proper_power_graph(int n, const BuildLimits& limits) {
  check_degree(n, std::min(limits.brute_force_ceiling,
                           limits.element_graph_ceiling),
               "element-level power graph");

  UndirectedGraph g;
  g.kind = GraphKind::proper_power;
  g.n = n;
  g.num_vertices = alternating_count(n) - 1;  // identity removed
  g.types = enumerate_types(n, /*alternating_only=*/true,
                            /*exclude_trivial=*/true);
  g.element_rank.resize(g.num_vertices);
  g.type_of.resize(g.num_vertices);

  AlternatingStream stream(n, limits);
  stream.next();  // skip the identity (rank 0)
  std::uint64_t rank = 0;
  while (auto x = stream.next()) {
    ++rank;
    const std::uint32_t v = static_cast<std::uint32_t>(rank - 1);
    g.element_rank[v] = rank;
    g.type_of[v] = type_index_of(g.types, cycle_type(*x));
    const std::uint64_t o = order_of(*x);
    Permutation y = *x;
    for (std::uint64_t m = 2; m < o; ++m) {
      y = compose(y, *x);
      const std::uint32_t w = static_cast<std::uint32_t>(even_rank(y) - 1);
      g.edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  g.finalize_edges();
  return g;
}

UndirectedGraph build_quotient_power_graph(int n, const BuildLimits& limits) {
  check_degree(n, limits.brute_force_ceiling, "quotient power graph");

  // Pass 1: canonical representative rank of every non-identity element.
  std::vector<std::uint64_t> rep_ranks;
  rep_ranks.reserve(alternating_count(n) - 1);
  AlternatingStream stream(n, limits);
  stream.next();  // identity
  while (auto x = stream.next()) {
    rep_ranks.push_back(even_rank(canonical_generator(*x)));
  }
  std::sort(rep_ranks.begin(), rep_ranks.end());
  rep_ranks.erase(std::unique(rep_ranks.begin(), rep_ranks.end()),
                  rep_ranks.end());

  UndirectedGraph g;
  g.kind = GraphKind::quotient_power;
  g.n = n;
  g.num_vertices = rep_ranks.size();
  g.element_rank = std::move(rep_ranks);
  g.types = enumerate_types(n, true, true);
  g.type_of.resize(g.num_vertices);

  const auto class_index = [&g](std::uint64_t rank) -> std::uint32_t {
    const auto it = std::lower_bound(g.element_rank.begin(),
                                     g.element_rank.end(), rank);
    if (it == g.element_rank.end() || *it != rank)
      throw std::logic_error("class representative rank not found");
    return static_cast<std::uint32_t>(it - g.element_rank.begin());
  };

  // Pass 2: per class, the subgroup containment edges.
  for (std::uint32_t v = 0; v < g.num_vertices; ++v) {
    const Permutation rep = even_unrank(n, g.element_rank[v]);
    g.type_of[v] = type_index_of(g.types, cycle_type(rep));
    const std::uint64_t o = order_of(rep);
    for (std::uint64_t d : divisors_of(o)) {
      if (d == 1 || d == o) continue;
      const std::uint64_t w_rank =
          even_rank(canonical_generator(power(rep, d)));
      const std::uint32_t w = class_index(w_rank);
      g.edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  g.finalize_edges();
  return g;
}

UndirectedGraph build_power_type_graph(int n, const BuildLimits& limits) {
  check_degree(n, limits.partition_ceiling, "power type graph");

  UndirectedGraph g;
  g.kind = GraphKind::power_type;
  g.n = n;
  g.types = enumerate_types(n, true, true);
  g.num_vertices = g.types.size();
  for (std::uint32_t v = 0; v < g.num_vertices; ++v) {
    for (const PartitionType& p : g.types[v].proper_powers()) {
      // A proper power of an alternating type is alternating and
      // nontrivial, so it is always a vertex.
      const std::uint32_t w = type_index_of(g.types, p);
      g.edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  g.finalize_edges();
  return g;
}

UndirectedGraph build_order_graph(int n, const BuildLimits& limits) {
  check_degree(n, limits.partition_ceiling, "order graph");

  UndirectedGraph g;
  g.kind = GraphKind::order;
  g.n = n;
  for (const PartitionType& t : enumerate_types(n, true, true))
    g.order_value.push_back(t.order());
  std::sort(g.order_value.begin(), g.order_value.end());
  g.order_value.erase(
      std::unique(g.order_value.begin(), g.order_value.end()),
      g.order_value.end());
  g.num_vertices = g.order_value.size();

  for (std::uint32_t i = 0; i < g.num_vertices; ++i) {
    for (std::uint32_t j = i + 1; j < g.num_vertices; ++j) {
      if (g.order_value[j] % g.order_value[i] == 0)
        g.edges.emplace_back(i, j);
    }
  }
  g.finalize_edges();
  return g;
}

std::vector<std::uint32_t> element_to_class_map(
    const UndirectedGraph& element_graph,
    const UndirectedGraph& quotient_graph) {
  if (element_graph.kind != GraphKind::proper_power ||
      quotient_graph.kind != GraphKind::quotient_power ||
      element_graph.n != quotient_graph.n)
    throw std::invalid_argument("element_to_class_map: mismatched graphs");

  const int n = element_graph.n;
  std::vector<std::uint32_t> map(element_graph.num_vertices);
  for (std::size_t v = 0; v < element_graph.num_vertices; ++v) {
    const Permutation x = even_unrank(n, element_graph.element_rank[v]);
    const std::uint64_t rep_rank = even_rank(canonical_generator(x));
    const auto it = std::lower_bound(quotient_graph.element_rank.begin(),
                                     quotient_graph.element_rank.end(),
                                     rep_rank);
    if (it == quotient_graph.element_rank.end() || *it != rep_rank)
      throw std::logic_error("class of element not present in quotient graph");
    map[v] = static_cast<std::uint32_t>(
        it - quotient_graph.element_rank.begin());
  }
  return map;
}

}  // namespace altgraph
