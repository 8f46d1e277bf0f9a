#include "scount/calligraph.hpp"

#include "scount/rigidity.hpp"

namespace scount {

MarkedCalligraph validate_calligraph(Graph g, std::pair<Vertex, Vertex> base,
                                     Vertex apex) {
  using Reason = CalligraphError::Reason;
  const int n = g.vertex_count();
  auto in_range = [n](Vertex x) { return x >= 0 && x < n; };
  if (!in_range(base.first) || !in_range(base.second) || !in_range(apex) ||
      base.first == base.second)
    throw CalligraphError(Reason::MarkOutOfRange,
                          "calligraph marks are not distinct vertices");
  if (apex == base.first || apex == base.second)
    throw CalligraphError(Reason::ApexOnBase,
                          "apex coincides with a base endpoint");
  if (!g.has_edge(base.first, base.second))
    throw CalligraphError(Reason::MissingBaseEdge, "missing base edge");
  if (static_cast<long>(g.edge_count()) != 2L * n - 4)
    throw CalligraphError(Reason::EdgeCount,
                          "edge-count mismatch: |E| = " +
                              std::to_string(g.edge_count()) +
                              ", expected 2|V| - 4 = " +
                              std::to_string(2 * n - 4));
  if (!is_rigid_spanning(g.with_edge(apex, base.first)) &&
      !is_rigid_spanning(g.with_edge(apex, base.second)))
    throw CalligraphError(Reason::NotRigid,
                          "neither apex augmentation is rigid");
  return MarkedCalligraph(std::move(g), base, apex);
}

MarkedCalligraph basic_L() {
  return validate_calligraph(Graph(3, {{1, 2}, {0, 1}}), {1, 2}, 0);
}

MarkedCalligraph basic_R() {
  return validate_calligraph(Graph(3, {{1, 2}, {0, 2}}), {1, 2}, 0);
}

MarkedCalligraph basic_C() {
  return validate_calligraph(Graph(4, {{1, 2}, {0, 3}, {1, 3}, {2, 3}}),
                             {1, 2}, 0);
}

Graph augment(const MarkedCalligraph &h, Gadget gadget) {
  const auto [first, second] = h.base();
  switch (gadget) {
  case Gadget::L:
    return h.graph().with_edge(h.apex(), first);
  case Gadget::R:
    return h.graph().with_edge(h.apex(), second);
  case Gadget::C: {
    const Vertex nb[] = {h.apex(), first, second};
    return h.graph().with_vertex(nb);
  }
  }
  return h.graph();
}

} // namespace scount
