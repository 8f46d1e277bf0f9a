#pragma once

#include <cstddef>

#include "scount/graph.hpp"

namespace scount {

/// Size of a maximal (2,3)-sparse edge subset, found by the (2,3)-pebble game
/// inserting edges in input order.
std::size_t independent_edge_count(const Graph &g);

/// |E| = 2|V| - 3 and every subgraph on >= 2 vertices has |E'| <= 2|V'| - 3.
/// Throws Error(Domain) for graphs with fewer than two vertices.
bool is_tight_2_3(const Graph &g);

/// Minimal rigidity in the plane and on the sphere; same test as
/// is_tight_2_3 by the Pollaczek-Geiringer/Laman characterization.
bool is_minimally_rigid(const Graph &g);

/// True iff g contains a spanning minimally rigid subgraph.
bool is_rigid_spanning(const Graph &g);

/// Exhaustive subset check of the Laman counts; refuses graphs with more
/// than eight vertices.
bool brute_force_laman(const Graph &g);

} // namespace scount
