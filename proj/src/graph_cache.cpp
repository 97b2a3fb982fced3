#include "altgraph/graph_cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "altgraph/alternating.hpp"
#include "altgraph/permutation.hpp"

namespace altgraph {

using nlohmann::json;

std::string graph_to_json(const UndirectedGraph& g) {
  json record;
  record["format"] = kGraphCacheFormat;
  record["kind"] = kind_name(g.kind);
  record["n"] = g.n;
  json labels = json::array();
  for (std::size_t v = 0; v < g.num_vertices; ++v) labels.push_back(g.label(v));
  record["labels"] = std::move(labels);
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
  record["edges"] = std::move(edges);
  return record.dump();
}

std::optional<UndirectedGraph> graph_from_json(const std::string& text) {
  json record = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded()) return std::nullopt;
  try {
    if (record.at("format").get<std::string>() != kGraphCacheFormat)
      return std::nullopt;
    const auto kind = kind_from_name(record.at("kind").get<std::string>());
    if (!kind) return std::nullopt;

    UndirectedGraph g;
    g.kind = *kind;
    g.n = record.at("n").get<int>();
    const auto& labels = record.at("labels");
    g.num_vertices = labels.size();

    switch (g.kind) {
      case GraphKind::proper_power:
      case GraphKind::quotient_power: {
        for (const auto& label : labels) {
          const Permutation p = parse_cycles(label.get<std::string>(), g.n);
          g.element_rank.push_back(even_rank(p));
        }
        // Per-vertex types, resolved against the full type table.
        g.types = enumerate_types(g.n, true, true);
        for (std::size_t v = 0; v < g.num_vertices; ++v) {
          const PartitionType t =
              cycle_type(even_unrank(g.n, g.element_rank[v]));
          const auto it = std::lower_bound(g.types.begin(), g.types.end(), t);
          if (it == g.types.end() || *it != t) return std::nullopt;
          g.type_of.push_back(
              static_cast<std::uint32_t>(it - g.types.begin()));
        }
        if (!std::is_sorted(g.element_rank.begin(), g.element_rank.end()))
          return std::nullopt;
        break;
      }
      case GraphKind::power_type: {
        for (const auto& label : labels)
          g.types.push_back(PartitionType::parse(label.get<std::string>()));
        if (!std::is_sorted(g.types.begin(), g.types.end()))
          return std::nullopt;
        break;
      }
      case GraphKind::order: {
        for (const auto& label : labels)
          g.order_value.push_back(std::stoull(label.get<std::string>()));
        if (!std::is_sorted(g.order_value.begin(), g.order_value.end()))
          return std::nullopt;
        break;
      }
    }

    for (const auto& edge : record.at("edges")) {
      if (!edge.is_array() || edge.size() != 2) return std::nullopt;
      g.edges.emplace_back(edge[0].get<std::uint32_t>(),
                           edge[1].get<std::uint32_t>());
    }
    g.finalize_edges();
    return g;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void write_graph_file(const UndirectedGraph& g,
                      const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write graph file: " + path.string());
  out << graph_to_json(g) << '\n';
}

std::optional<UndirectedGraph> read_graph_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str());
}

std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 GraphKind kind, int n) {
  std::ostringstream name;
  name << kind_name(kind) << "-n" << n << ".json";
  return dir / name.str();
}

}  // namespace altgraph
