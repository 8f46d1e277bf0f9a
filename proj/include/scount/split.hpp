#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "scount/calligraph.hpp"
#include "scount/graph.hpp"

namespace scount {

/// One side of a split. The calligraph uses local labels: apex 0, base
/// (1, 2), remaining vertices 3.. in increasing original label order;
/// `vertices[i]` is the original label of local vertex i.
struct SplitSide {
  MarkedCalligraph calligraph;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges; // original labels

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

struct SplitCandidate {
  SplitSide left;
  SplitSide right;
  std::pair<Vertex, Vertex> shared_base;
  Vertex shared_apex = 0;
};

struct SplitSearchConfig {
  /// Upper bound on component bipartitions times apex-edge assignments
  /// examined for a single (base edge, apex) anchor.
  std::uint64_t max_assignments_per_anchor = std::uint64_t{1} << 20;
  /// Minimum vertex count on both sides for find_nontrivial_split.
  int nontrivial_min_vertices = 5;
};

using SplitVisitor = std::function<void(const SplitCandidate &)>;

/// Visits every calligraphic split of g exactly once (left/right exchange is
/// not reported separately). Requires a connected graph on >= 4 vertices.
void enumerate_splits(const Graph &g, const SplitVisitor &visit,
                      const SplitSearchConfig &cfg = {});
std::vector<SplitCandidate> enumerate_splits(const Graph &g,
                                             const SplitSearchConfig &cfg = {});

/// All splits with both sides of at least nontrivial_min_vertices vertices,
/// in preference order: most balanced first, then by canonical keys of the
/// marked sides, then by enumeration order.
std::vector<SplitCandidate> nontrivial_splits(const Graph &g,
                                              const SplitSearchConfig &cfg = {});

/// First entry of nontrivial_splits(), or nothing. Requires a minimally
/// rigid graph.
std::optional<SplitCandidate>
find_nontrivial_split(const Graph &g, const SplitSearchConfig &cfg = {});

} // namespace scount
