#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regmis/graph.hpp"

namespace regmis {

enum class GraphFormat {
  /// "p edge <n> <m>" header followed by 1-indexed "e <u> <v>" lines.
  DimacsCol,
  /// 0-indexed "u v" lines with an optional "# n=<n>" header.
  EdgeList,
};

GraphFormat parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat format);

/// Parses a graph. Duplicate edges are dropped and reported through
/// `warnings` (when non-null); every other defect throws InputError.
Graph parse_graph(std::string_view text, GraphFormat format,
                  std::vector<std::string>* warnings = nullptr);

/// Byte-stable text form: edges sorted lexicographically. The edge-list form
/// carries a "# n=" header only when the vertex count is not implied by the
/// largest endpoint.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// "fnv1a64:<16 hex digits>" over the edge-list serialization.
std::string content_hash(const Graph& g);

Graph read_graph_file(const std::string& path, GraphFormat format,
                      std::vector<std::string>* warnings = nullptr);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace regmis
