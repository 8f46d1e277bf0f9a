#pragma once

#include <string>
#include <utility>

#include "scount/error.hpp"
#include "scount/graph.hpp"

namespace scount {

/// A graph with an ordered base edge (first, second) and an apex vertex.
///
/// `base.first` plays the role of vertex 1 and `base.second` of vertex 2 in
/// the usual notation, so the class entries b and c attach to them
/// respectively. Only validate_calligraph() and the basic_* factories create
/// instances, so every value satisfies the calligraph conditions.
class MarkedCalligraph {
public:
  const Graph &graph() const { return graph_; }
  std::pair<Vertex, Vertex> base() const { return base_; }
  Vertex apex() const { return apex_; }

  /// Same graph and apex, base endpoints exchanged.
  MarkedCalligraph mirrored() const {
    return MarkedCalligraph(graph_, {base_.second, base_.first}, apex_);
  }

private:
  friend MarkedCalligraph validate_calligraph(Graph, std::pair<Vertex, Vertex>,
                                              Vertex);
  MarkedCalligraph(Graph g, std::pair<Vertex, Vertex> base, Vertex apex)
      : graph_(std::move(g)), base_(base), apex_(apex) {}

  Graph graph_;
  std::pair<Vertex, Vertex> base_;
  Vertex apex_;
};

class CalligraphError : public Error {
public:
  enum class Reason { MarkOutOfRange, ApexOnBase, MissingBaseEdge, EdgeCount, NotRigid };

  CalligraphError(Reason reason, const std::string &what)
      : Error(ErrorKind::Domain, what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

private:
  Reason reason_;
};

/// Checks |E| = 2|V| - 4, that the base edge exists, that the apex is a
/// third vertex, and that adding {apex, first} or {apex, second} gives a
/// rigid graph. Throws CalligraphError naming the first violated condition.
MarkedCalligraph validate_calligraph(Graph g, std::pair<Vertex, Vertex> base,
                                     Vertex apex);

/// Base edge (1,2), apex 0, extra edge {0,1}.
MarkedCalligraph basic_L();
/// Base edge (1,2), apex 0, extra edge {0,2}.
MarkedCalligraph basic_R();
/// Base edge (1,2), apex 0, vertex 3 joined to 0, 1 and 2.
MarkedCalligraph basic_C();

enum class Gadget { L, R, C };

/// Union with the named basic calligraph glued along apex and base: L adds
/// {apex, first}, R adds {apex, second}, C adds a fresh vertex joined to
/// apex, first and second. Existing edges are not duplicated.
Graph augment(const MarkedCalligraph &h, Gadget gadget);

} // namespace scount
