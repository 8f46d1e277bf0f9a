#include "scount/graph_io.hpp"

#include <json.hpp>

#include "scount/error.hpp"

namespace scount {
namespace {

constexpr int kGraph6MaxVertices = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

ParsedGraph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
    base = kGraph6Header.size();
  std::string_view body = text.substr(base);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r' ||
                           body.back() == ' ' || body.back() == '\t'))
    body.remove_suffix(1);
  if (body.empty())
    throw ParseError("empty graph6 string", base);

  for (std::size_t i = 0; i < body.size(); ++i) {
    auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126)
      throw ParseError("invalid graph6 byte", base + i);
  }
  const int n = static_cast<unsigned char>(body[0]) - 63;
  if (n > kGraph6MaxVertices)
    throw ParseError("graph6 strings beyond 62 vertices are not supported",
                     base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (body.size() - 1 != need)
    throw ParseError("graph6 length does not match vertex count",
                     base + std::min(body.size(), need + 1));

  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(body[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1)
        edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    int last = static_cast<unsigned char>(body.back()) - 63;
    if (last & ((1 << (6 - k % 6)) - 1))
      throw ParseError("nonzero graph6 padding bits", base + body.size() - 1);
  }
  return {Graph(n, edges), std::nullopt};
}

std::string serialize_graph6(const Graph &g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices)
    throw Error(ErrorKind::Domain, "graph6 output limited to 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

ParsedGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  auto fail = [](const std::string &msg) -> ParseError {
    return ParseError("graph JSON: " + msg, 0);
  };
  if (!doc.is_object())
    throw fail("top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw fail("\"vertices\" must be an integer");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw fail("\"edges\" must be an array");

  const auto n = doc["vertices"].get<long long>();
  if (n < 0 || n > 1 << 20)
    throw fail("\"vertices\" out of range");
  std::vector<std::pair<int, int>> edges;
  for (const auto &e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw fail("each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  ParsedGraph out{Graph(static_cast<int>(n), edges), std::nullopt};

  if (doc.contains("marks") && !doc["marks"].is_null()) {
    const auto &m = doc["marks"];
    if (!m.is_object() || !m.contains("edge") || !m["edge"].is_array() ||
        m["edge"].size() != 2 || !m["edge"][0].is_number_integer() ||
        !m["edge"][1].is_number_integer() || !m.contains("apex") ||
        !m["apex"].is_number_integer())
      throw fail("\"marks\" must be {\"edge\": [a, b], \"apex\": c}");
    out.marks = Marks{{m["edge"][0].get<int>(), m["edge"][1].get<int>()},
                      m["apex"].get<int>()};
  }
  return out;
}

std::string serialize_json(const Graph &g, const std::optional<Marks> &marks) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (const Edge &e : g.edges())
    edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (marks)
    doc["marks"] = {{"edge", {marks->edge.first, marks->edge.second}},
                    {"apex", marks->apex}};
  return doc.dump();
}

} // namespace

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_json(text);
}

std::string serialize_graph(const Graph &g, GraphFormat format,
                            const std::optional<Marks> &marks) {
  return format == GraphFormat::Graph6 ? serialize_graph6(g)
                                       : serialize_json(g, marks);
}

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r')
      continue;
    return c == '{' ? GraphFormat::Json : GraphFormat::Graph6;
  }
  return GraphFormat::Graph6;
}

} // namespace scount
