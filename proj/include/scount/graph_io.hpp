#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "scount/graph.hpp"

namespace scount {

enum class GraphFormat { Graph6, Json };

/// Optional calligraph marks carried by the JSON format.
struct Marks {
  std::pair<Vertex, Vertex> edge;
  Vertex apex = 0;

  bool operator==(const Marks &) const = default;
};

struct ParsedGraph {
  Graph graph;
  std::optional<Marks> marks;
};

/// Throws ParseError (with byte offset) on malformed text and Error
/// (Validation) when the text decodes to a non-simple graph.
ParsedGraph parse_graph(std::string_view text, GraphFormat format);

/// graph6 ignores marks. JSON output is a single line.
std::string serialize_graph(const Graph &g, GraphFormat format,
                            const std::optional<Marks> &marks = std::nullopt);

/// JSON when the first non-blank byte is '{', graph6 otherwise.
GraphFormat detect_format(std::string_view text);

} // namespace scount
