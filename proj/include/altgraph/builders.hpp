#pragma once

#include "altgraph/alternating.hpp"
#include "altgraph/graph.hpp"

namespace altgraph {

// Proper power graph of A_n: vertices are the non-identity elements,
// with an edge whenever one element is a power of the other. Edges are
// materialized, so this is gated by limits.element_graph_ceiling in
// addition to the enumeration ceiling.
UndirectedGraph build_proper_power_graph(int n, const BuildLimits& limits = {});

// Proper quotient power graph: vertices are cyclic classes, with an
// edge whenever one cyclic subgroup contains the other. Edges are
// generated from each class representative x via the divisor powers
// x^d, d | o(x), 1 < d < o(x), which reach exactly the proper
// nontrivial subgroups of <x>.
UndirectedGraph build_quotient_power_graph(int n,
                                           const BuildLimits& limits = {});

// Proper power type graph: vertices are the alternating cycle types of
// n except [1^n], with an edge whenever one type is a proper power of
// the other.
UndirectedGraph build_power_type_graph(int n, const BuildLimits& limits = {});

// Proper order graph: vertices are the element orders of A_n except 1,
// with edges on divisibility.
UndirectedGraph build_order_graph(int n, const BuildLimits& limits = {});

// For each vertex of the proper power graph, the vertex of the
// quotient graph holding its cyclic class.
std::vector<std::uint32_t> element_to_class_map(
    const UndirectedGraph& element_graph, const UndirectedGraph& quotient_graph);

}  // namespace altgraph
