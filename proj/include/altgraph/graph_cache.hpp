#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "altgraph/graph.hpp"

namespace altgraph {

// Self-describing serialized graph record: kind, degree, vertex labels
// in canonical text form, edge list as index pairs. Keyed by an
// embedded format tag; stale or unreadable records are ignored on
// read, never errors.
inline constexpr const char* kGraphCacheFormat = "altgraph-graph-v1";

std::string graph_to_json(const UndirectedGraph& g);
std::optional<UndirectedGraph> graph_from_json(const std::string& text);

void write_graph_file(const UndirectedGraph& g,
                      const std::filesystem::path& path);
std::optional<UndirectedGraph> read_graph_file(
    const std::filesystem::path& path);

// Canonical cache location for (kind, n) under a cache directory.
std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 GraphKind kind, int n);

}  // namespace altgraph
