#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "altgraph/partition.hpp"

namespace altgraph {

enum class GraphKind {
  proper_power,    // vertices: elements of A_n except id
  quotient_power,  // vertices: cyclic classes of A_n except [id]
  power_type,      // vertices: alternating types of n except [1^n]
  order            // vertices: element orders of A_n except 1
};

const char* kind_name(GraphKind kind);
std::optional<GraphKind> kind_from_name(std::string_view name);

// One engine serves all four graphs: adjacency is a sorted unique list
// of index pairs (u < v); labels live in parallel arrays chosen by
// kind. Loops are never materialized, so isolation means degree 0 over
// proper edges.
struct UndirectedGraph {
  GraphKind kind = GraphKind::power_type;
  int n = 0;
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  // proper_power / quotient_power: even-permutation rank of the
  // element (resp. class representative), strictly increasing.
  std::vector<std::uint64_t> element_rank;
  // order: the order values, strictly increasing.
  std::vector<std::uint64_t> order_value;
  // Type table, sorted. power_type: vertex i is types[i];
  // proper_power / quotient_power: vertex i has type types[type_of[i]].
  std::vector<PartitionType> types;
  std::vector<std::uint32_t> type_of;

  bool has_types() const { return kind != GraphKind::order; }
  const PartitionType& vertex_type(std::size_t v) const;
  std::uint64_t vertex_order(std::size_t v) const;

  std::string label(std::size_t v) const;
  std::optional<std::size_t> find_label(const std::string& text) const;

  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::vector<std::uint32_t> vertex_degrees() const;

  // Sorts and deduplicates edges; checks endpoints. Builders call this
  // once after generation.
  void finalize_edges();
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::uint32_t find(std::uint32_t x);
  bool unite(std::uint32_t x, std::uint32_t y);
  std::uint32_t component_count() const { return count_; }
  std::uint64_t size_of(std::uint32_t x);

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t count_;
};

struct ComponentCensus {
  std::uint32_t component_count = 0;
  // Per vertex; ids are contiguous from 0 in order of first vertex
  // appearance.
  std::vector<std::uint32_t> component_id;
  std::vector<std::uint64_t> sizes;
  // Per component: (index into the graph's type table, k_C(T)), sorted
  // by type index. Empty for the order graph.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>
      type_multiplicity;

  std::uint64_t multiplicity_of(std::uint32_t component,
                                std::uint32_t type_index) const;
};

// Disjoint-set union over all edges.
ComponentCensus components(const UndirectedGraph& g);

// Vertices of degree 0, in index order.
std::vector<std::size_t> isolated_vertices(const UndirectedGraph& g);

// Vertex set of the component containing the given vertex (or label),
// in index order. The label overload throws std::invalid_argument for
// unknown labels.
std::vector<std::size_t> component_of(const UndirectedGraph& g,
                                      const ComponentCensus& census,
                                      std::size_t vertex);
std::vector<std::size_t> component_of(const UndirectedGraph& g,
                                      const ComponentCensus& census,
                                      const std::string& label);

}  // namespace altgraph
