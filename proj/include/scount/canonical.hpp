#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scount/graph.hpp"

namespace scount {

/// Labels that canonicalization must respect. The apex is fixed exactly;
/// the base pair is fixed as a set (its members may be exchanged).
struct Pins {
  std::optional<Vertex> apex;
  std::optional<std::pair<Vertex, Vertex>> base;
};

struct CanonicalKey {
  std::string bytes;
  /// True when the canonical labeling put base.first after base.second.
  bool swap_flag = false;

  std::string hex() const;
  static CanonicalKey from_hex(const std::string &hex);

  bool operator==(const CanonicalKey &) const = default;
  auto operator<=>(const CanonicalKey &) const = default;
};

/// Canonical labeling of a vertex-colored graph: returns perm with perm[x]
/// the canonical label of x. Colors are compared as integers and are part of
/// the isomorphism notion (a color-preserving relabeling maps to the same
/// canonical form). Requires vertex_count() <= 64.
std::vector<Vertex> canonical_labeling(const Graph &g,
                                       std::span<const int> colors);

CanonicalKey canonical_key(const Graph &g, const Pins &pins = {});

} // namespace scount
