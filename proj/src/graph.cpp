#include "altgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "altgraph/alternating.hpp"
#include "altgraph/permutation.hpp"

namespace altgraph {

const char* kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::proper_power: return "power";
    case GraphKind::quotient_power: return "quotient";
    case GraphKind::power_type: return "ptype";
    case GraphKind::order: return "order";
  }
  return "?";
}

std::optional<GraphKind> kind_from_name(std::string_view name) {
  if (name == "power") return GraphKind::proper_power;
  if (name == "quotient") return GraphKind::quotient_power;
  if (name == "ptype") return GraphKind::power_type;
  if (name == "order") return GraphKind::order;
  return std::nullopt;
}

const PartitionType& UndirectedGraph::vertex_type(std::size_t v) const {
  if (kind == GraphKind::power_type) return types[v];
  if (kind == GraphKind::order)
    throw std::logic_error("order graph vertices have no type");
  return types[type_of[v]];
}

std::uint64_t UndirectedGraph::vertex_order(std::size_t v) const {
  if (kind == GraphKind::order) return order_value[v];
  return vertex_type(v).order();
}

std::string UndirectedGraph::label(std::size_t v) const {
  switch (kind) {
    case GraphKind::proper_power:
    case GraphKind::quotient_power:
      return to_cycle_string(even_unrank(n, element_rank[v]));
    case GraphKind::power_type:
      return types[v].to_string();
    case GraphKind::order:
      return std::to_string(order_value[v]);
  }
  return {};
}

std::optional<std::size_t> UndirectedGraph::find_label(
    const std::string& text) const {
  switch (kind) {
    case GraphKind::proper_power:
    case GraphKind::quotient_power: {
      Permutation p = parse_cycles(text, n);
      if (!is_even(p)) return std::nullopt;
      if (kind == GraphKind::quotient_power) {
        // Any member of the class addresses the class vertex.
        p = canonical_generator(p);
      }
      const std::uint64_t r = even_rank(p);
      const auto it =
          std::lower_bound(element_rank.begin(), element_rank.end(), r);
      if (it == element_rank.end() || *it != r) return std::nullopt;
      return static_cast<std::size_t>(it - element_rank.begin());
    }
    case GraphKind::power_type: {
      const PartitionType t = PartitionType::parse(text);
      const auto it = std::lower_bound(types.begin(), types.end(), t);
      if (it == types.end() || *it != t) return std::nullopt;
      return static_cast<std::size_t>(it - types.begin());
    }
    case GraphKind::order: {
      std::uint64_t v = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc{} || ptr != text.data() + text.size())
        return std::nullopt;
      const auto it =
          std::lower_bound(order_value.begin(), order_value.end(), v);
      if (it == order_value.end() || *it != v) return std::nullopt;
      return static_cast<std::size_t>(it - order_value.begin());
    }
  }
  return std::nullopt;
}

bool UndirectedGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::uint32_t> UndirectedGraph::vertex_degrees() const {
  std::vector<std::uint32_t> deg(num_vertices, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void UndirectedGraph::finalize_edges() {
  for (auto& [u, v] : edges) {
    if (u == v) throw std::logic_error("self-loop generated");
    if (u > v) std::swap(u, v);
    if (v >= num_vertices) throw std::logic_error("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

UnionFind::UnionFind(std::size_t n)
    : parent_(n), size_(n, 1), count_(static_cast<std::uint32_t>(n)) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
}

std::uint32_t UnionFind::find(std::uint32_t x) {
  std::uint32_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::uint32_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::uint32_t x, std::uint32_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --count_;
  return true;
}

std::uint64_t UnionFind::size_of(std::uint32_t x) { return size_[find(x)]; }

std::uint64_t ComponentCensus::multiplicity_of(std::uint32_t component,
                                               std::uint32_t type_index) const {
  const auto& row = type_multiplicity[component];
  const auto it = std::lower_bound(
      row.begin(), row.end(), type_index,
      [](const auto& entry, std::uint32_t key) { return entry.first < key; });
  if (it == row.end() || it->first != type_index) return 0;
  return it->second;
}

ComponentCensus components(const UndirectedGraph& g) {
  UnionFind uf(g.num_vertices);
  for (const auto& [u, v] : g.edges) uf.unite(u, v);

  ComponentCensus census;
  census.component_id.assign(g.num_vertices, UINT32_MAX);
  std::vector<std::uint32_t> root_to_id(g.num_vertices, UINT32_MAX);
  for (std::size_t v = 0; v < g.num_vertices; ++v) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(v));
    if (root_to_id[root] == UINT32_MAX) {
      root_to_id[root] = census.component_count++;
      census.sizes.push_back(0);
    }
    census.component_id[v] = root_to_id[root];
    ++census.sizes[root_to_id[root]];
  }

  if (g.has_types()) {
    census.type_multiplicity.resize(census.component_count);
    for (std::size_t v = 0; v < g.num_vertices; ++v) {
      const std::uint32_t type_index =
          g.kind == GraphKind::power_type ? static_cast<std::uint32_t>(v)
                                          : g.type_of[v];
      auto& row = census.type_multiplicity[census.component_id[v]];
      const auto it = std::lower_bound(
          row.begin(), row.end(), type_index,
          [](const auto& entry, std::uint32_t key) { return entry.first < key; });
      if (it != row.end() && it->first == type_index) {
        ++it->second;
      } else {
        row.insert(it, {type_index, 1});
      }
    }
  }
  return census;
}

std::vector<std::size_t> isolated_vertices(const UndirectedGraph& g) {
  const auto deg = g.vertex_degrees();
  std::vector<std::size_t> result;
  for (std::size_t v = 0; v < g.num_vertices; ++v)
    if (deg[v] == 0) result.push_back(v);
  return result;
}

std::vector<std::size_t> component_of(const UndirectedGraph& g,
                                      const ComponentCensus& census,
                                      std::size_t vertex) {
  if (vertex >= g.num_vertices)
    throw std::invalid_argument("component_of: vertex out of range");
  const std::uint32_t id = census.component_id[vertex];
  std::vector<std::size_t> result;
  for (std::size_t v = 0; v < g.num_vertices; ++v)
    if (census.component_id[v] == id) result.push_back(v);
  return result;
}

std::vector<std::size_t> component_of(const UndirectedGraph& g,
                                      const ComponentCensus& census,
                                      const std::string& label) {
  const auto v = g.find_label(label);
  if (!v) throw std::invalid_argument("unknown vertex label: " + label);
  return component_of(g, census, *v);
}

}  // namespace altgraph
