#pragma once

#include <vector>

#include "scount/graph.hpp"

namespace scount {

/// One representative per isomorphism class of graphs on n vertices, built
/// by edge augmentation with canonical-key deduplication. Practical for
/// n <= 7.
std::vector<Graph> enumerate_graphs(int n);

/// One representative per isomorphism class of minimally rigid graphs on n
/// vertices (n >= 2), built by Henneberg vertex additions and edge splits.
std::vector<Graph> enumerate_laman_graphs(int n);

} // namespace scount
