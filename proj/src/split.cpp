#include "scount/split.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "scount/canonical.hpp"
#include "scount/error.hpp"
#include "scount/rigidity.hpp"

namespace scount {
namespace {

struct Component {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges; // induced edges plus edges into the anchor triple
};

std::vector<Component> components_without(const Graph &g,
                                          const std::vector<std::vector<Vertex>> &adj,
                                          Vertex a, Vertex b, Vertex c) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  comp[a] = comp[b] = comp[c] = -2;
  std::vector<Component> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1)
      continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      out[id].vertices.push_back(x);
      for (Vertex y : adj[x])
        if (comp[y] == -1) {
          comp[y] = id;
          stack.push_back(y);
        }
    }
  }
  for (const Edge &e : g.edges()) {
    int id = comp[e.u] >= 0 ? comp[e.u] : comp[e.v];
    if (id >= 0)
      out[id].edges.push_back(e);
  }
  return out;
}

// Builds a side with local labels apex 0, base 1 and 2, the rest sorted.
std::optional<SplitSide> make_side(Vertex u, Vertex v, Vertex w,
                                   std::vector<Vertex> rest,
                                   std::vector<Edge> edges) {
  std::sort(rest.begin(), rest.end());
  std::vector<Vertex> vertices{w, u, v};
  vertices.insert(vertices.end(), rest.begin(), rest.end());
  const long nv = static_cast<long>(vertices.size());
  if (static_cast<long>(edges.size()) != 2 * nv - 4)
    return std::nullopt;
  std::sort(edges.begin(), edges.end());
  Graph local = Graph::from_subset(vertices, edges);
  try {
    MarkedCalligraph h = validate_calligraph(std::move(local), {1, 2}, 0);
    return SplitSide{std::move(h), std::move(vertices), std::move(edges)};
  } catch (const CalligraphError &) {
    return std::nullopt;
  }
}

CanonicalKey side_key(const SplitSide &s) {
  return canonical_key(s.calligraph.graph(), Pins{0, std::pair{1, 2}});
}

} // namespace

void enumerate_splits(const Graph &g, const SplitVisitor &visit,
                      const SplitSearchConfig &cfg) {
  if (g.vertex_count() < 4)
    throw Error(ErrorKind::Domain, "split search needs at least 4 vertices");
  if (!g.is_connected())
    throw Error(ErrorKind::Domain, "split search needs a connected graph");

  const auto adj = g.adjacency();
  for (const Edge &base : g.edges()) {
    const Vertex u = base.u, v = base.v;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w == u || w == v)
        continue;
      auto comps = components_without(g, adj, u, v, w);
      if (comps.empty())
        continue;
      std::vector<Edge> apex_edges;
      if (g.has_edge(u, w))
        apex_edges.emplace_back(u, w);
      if (g.has_edge(v, w))
        apex_edges.emplace_back(v, w);

      const std::size_t k = comps.size();
      if (k - 1 + apex_edges.size() >= 63 ||
          (std::uint64_t{1} << (k - 1 + apex_edges.size())) >
              cfg.max_assignments_per_anchor)
        throw Error(ErrorKind::Domain,
                    "split enumeration cap exceeded at anchor edge {" +
                        std::to_string(u) + "," + std::to_string(v) +
                        "}, apex " + std::to_string(w) + " (" +
                        std::to_string(k) + " components)");

      // Component 0 always goes left, so each unordered split appears once.
      for (std::uint64_t cmask = 0; cmask < (std::uint64_t{1} << (k - 1));
           ++cmask) {
        std::vector<Vertex> lv, rv;
        std::vector<Edge> le{base}, re{base};
        for (std::size_t i = 0; i < k; ++i) {
          bool right = i > 0 && ((cmask >> (i - 1)) & 1);
          auto &vs = right ? rv : lv;
          auto &es = right ? re : le;
          vs.insert(vs.end(), comps[i].vertices.begin(), comps[i].vertices.end());
          es.insert(es.end(), comps[i].edges.begin(), comps[i].edges.end());
        }
        for (unsigned amask = 0; amask < (1u << apex_edges.size()); ++amask) {
          auto l_edges = le, r_edges = re;
          for (std::size_t j = 0; j < apex_edges.size(); ++j)
            ((amask >> j) & 1 ? r_edges : l_edges).push_back(apex_edges[j]);
          auto left = make_side(u, v, w, lv, std::move(l_edges));
          if (!left)
            continue;
          auto right = make_side(u, v, w, rv, std::move(r_edges));
          if (!right)
            continue;
          visit(SplitCandidate{std::move(*left), std::move(*right), {u, v}, w});
        }
      }
    }
  }
}

std::vector<SplitCandidate> enumerate_splits(const Graph &g,
                                             const SplitSearchConfig &cfg) {
  std::vector<SplitCandidate> out;
  enumerate_splits(g, [&](const SplitCandidate &s) { out.push_back(s); }, cfg);
  return out;
}

std::vector<SplitCandidate> nontrivial_splits(const Graph &g,
                                              const SplitSearchConfig &cfg) {
  const int m = cfg.nontrivial_min_vertices;
  if (g.vertex_count() < 2 * m - 3)
    return {};

  struct Ranked {
    int imbalance;
    std::string lo, hi;
    std::size_t index;
    SplitCandidate split;
  };
  std::vector<Ranked> ranked;
  enumerate_splits(
      g,
      [&](const SplitCandidate &s) {
        if (s.left.vertex_count() < m || s.right.vertex_count() < m)
          return;
        std::string a = side_key(s.left).hex(), b = side_key(s.right).hex();
        if (b < a)
          std::swap(a, b);
        ranked.push_back({std::abs(s.left.vertex_count() - s.right.vertex_count()),
                          std::move(a), std::move(b), ranked.size(), s});
      },
      cfg);
  std::sort(ranked.begin(), ranked.end(), [](const Ranked &x, const Ranked &y) {
    return std::tie(x.imbalance, x.lo, x.hi, x.index) <
           std::tie(y.imbalance, y.lo, y.hi, y.index);
  });
  std::vector<SplitCandidate> out;
  out.reserve(ranked.size());
  for (auto &r : ranked)
    out.push_back(std::move(r.split));
  return out;
}

std::optional<SplitCandidate> find_nontrivial_split(const Graph &g,
                                                    const SplitSearchConfig &cfg) {
  if (!is_minimally_rigid(g))
    throw Error(ErrorKind::Domain, "graph is not minimally rigid");
  auto splits = nontrivial_splits(g, cfg);
  if (splits.empty())
    return std::nullopt;
  return std::move(splits.front());
}

} // namespace scount
