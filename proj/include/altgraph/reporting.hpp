#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altgraph/census.hpp"
#include "altgraph/graph.hpp"

namespace altgraph {

enum class OutputFormat { tsv, json, markdown };

std::optional<OutputFormat> format_from_name(std::string_view name);

// Factored spelling of the closed form for n >= 11, e.g. "21*10*17!+1";
// the decimal string stays the contractual form.
std::string factored_expression(const RowClassification& rc);

struct CensusTableRow {
  CensusRow counts;
  std::optional<RowClassification> classification;  // n >= 11 only
  std::optional<BigCount> brute_force_c0;
};

std::string render_census_table(const std::vector<CensusTableRow>& rows,
                                OutputFormat format);

// Vertex/edge/component summary for a built graph; component vertex
// sets are listed when the graph is small enough to read.
std::string render_graph_summary(const UndirectedGraph& g,
                                 const ComponentCensus& census);

std::string render_classification(const RowClassification& rc,
                                  const CensusRow& counts);

}  // namespace altgraph
