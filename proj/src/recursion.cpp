#include "scount/recursion.hpp"

#include <climits>

#include "scount/graph_io.hpp"
#include "scount/rigidity.hpp"

namespace scount {
namespace {

enum class Basic { None, L, R, C };

Basic recognise(const MarkedCalligraph &h) {
  const Graph &g = h.graph();
  const auto [first, second] = h.base();
  const Vertex apex = h.apex();
  if (g.vertex_count() == 3)
    return g.has_edge(apex, first) ? Basic::L : Basic::R;
  if (g.vertex_count() == 4 && g.edge_count() == 4 && !g.has_edge(apex, first) &&
      !g.has_edge(apex, second)) {
    Vertex w = 0;
    while (w == apex || w == first || w == second)
      ++w;
    if (g.has_edge(w, apex) && g.has_edge(w, first) && g.has_edge(w, second))
      return Basic::C;
  }
  return Basic::None;
}

nlohmann::json class_json(const S2Class &c) { return {c.a, c.b, c.c}; }

nlohmann::json describe(const Graph &g) {
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"graph6", serialize_graph(g, GraphFormat::Graph6)}};
}

nlohmann::json describe(const MarkedCalligraph &h) {
  nlohmann::json j = describe(h.graph());
  j["base"] = {h.base().first, h.base().second};
  j["apex"] = h.apex();
  return j;
}

} // namespace

const char *gadget_name(Gadget g) {
  switch (g) {
  case Gadget::L:
    return "L";
  case Gadget::R:
    return "R";
  case Gadget::C:
    return "C";
  }
  return "?";
}

Engine::Engine(EngineConfig cfg, std::shared_ptr<CacheStore> cache)
    : cfg_(std::move(cfg)), cache_(std::move(cache)) {
  if (!cache_)
    cache_ = std::make_shared<CacheStore>();
}

CountResult Engine::count_realizations(const Graph &g) {
  trace_ = nullptr;
  nlohmann::json root;
  CountResult r = count_impl(g, 0, INT_MAX, cfg_.trace ? &root : nullptr);
  if (cfg_.trace)
    trace_ = std::move(root);
  return r;
}

ClassResult Engine::s2_class(const MarkedCalligraph &h) {
  trace_ = nullptr;
  nlohmann::json root;
  ClassResult r = class_impl(h, 0, h.graph().vertex_count() + 2,
                             cfg_.trace ? &root : nullptr);
  if (cfg_.trace)
    trace_ = std::move(root);
  return r;
}

CountResult Engine::count_impl(const Graph &g, int depth, int bound,
                               nlohmann::json *node) {
  if (depth > cfg_.max_depth)
    throw Error(ErrorKind::Domain,
                "recursion depth limit " + std::to_string(cfg_.max_depth) + " exceeded");
  if (g.vertex_count() >= bound)
    throw Error(ErrorKind::Domain, "recursion did not shrink the graph");
  if (g.vertex_count() < 2 || !is_minimally_rigid(g))
    throw Error(ErrorKind::Domain, "graph is not minimally rigid");

  if (node)
    *node = describe(g);
  const CanonicalKey key = canonical_key(g);
  if (auto hit = cache_->get_count(key)) {
    if (node) {
      (*node)["method"] = "cache";
      (*node)["count"] = *hit;
    }
    return {*hit, "cache"};
  }

  CountResult result;
  nlohmann::json provenance;
  if (auto split = find_nontrivial_split(g, cfg_.split)) {
    nlohmann::json left, right;
    const int n = g.vertex_count();
    ClassResult c1 = class_impl(split->left.calligraph, depth + 1, n,
                                node ? &left : nullptr);
    ClassResult c2 = class_impl(split->right.calligraph, depth + 1, n,
                                node ? &right : nullptr);
    result = {quad_form(c1.cls, c2.cls), "split"};
    provenance = {{"method", "split"},
                  {"classes", {class_json(c1.cls), class_json(c2.cls)}}};
    if (node) {
      left["original_vertices"] = split->left.vertices;
      right["original_vertices"] = split->right.vertices;
      (*node)["split"] = {{"base", {split->shared_base.first, split->shared_base.second}},
                          {"apex", split->shared_apex},
                          {"left", std::move(left)},
                          {"right", std::move(right)}};
    }
  } else {
    CountCertificate cert = fallback_count(g, cfg_.fallback);
    result = {cert.agreed_count, "fallback"};
    provenance = {{"method", "fallback"}, {"certificate", cert.to_json()}};
    if (node)
      (*node)["certificate"] = cert.to_json();
  }

  if (g.vertex_count() >= 3 && result.count % 2 != 0)
    throw Error(ErrorKind::Numerical,
                "odd realization count " + std::to_string(result.count));
  cache_->put_count(key, result.count, std::move(provenance));
  if (node) {
    (*node)["method"] = result.method;
    (*node)["count"] = result.count;
  }
  return result;
}

ClassResult Engine::class_impl(const MarkedCalligraph &h, int depth, int bound,
                               nlohmann::json *node) {
  if (depth > cfg_.max_depth)
    throw Error(ErrorKind::Domain,
                "recursion depth limit " + std::to_string(cfg_.max_depth) + " exceeded");
  if (node)
    *node = describe(h);

  auto finish = [&](ClassResult r) {
    if (node) {
      (*node)["method"] = r.method;
      (*node)["class"] = class_json(r.cls);
    }
    return r;
  };

  if (cfg_.use_base_cases) {
    switch (recognise(h)) {
    case Basic::L:
      return finish({kClassL, "base-case", {}});
    case Basic::R:
      return finish({kClassR, "base-case", {}});
    case Basic::C:
      return finish({kClassC, "base-case", {}});
    case Basic::None:
      break;
    }
  }

  const CanonicalKey key = canonical_key(h.graph(), Pins{h.apex(), h.base()});
  if (auto hit = cache_->get_class(key))
    return finish({*hit, "cache", {}});

  ClassResult r;
  r.method = "equations";
  std::array<std::int64_t, 3> rhs{};
  nlohmann::json eqs = nlohmann::json::array();
  int i = 0;
  for (Gadget f : {Gadget::L, Gadget::R, Gadget::C}) {
    Graph aug = augment(h, f);
    ClassEquation eq{f, is_minimally_rigid(aug), 0};
    nlohmann::json child;
    if (eq.minimally_rigid)
      eq.value = count_impl(aug, depth + 1, bound, node ? &child : nullptr).count;
    rhs[i++] = eq.value;
    r.equations.push_back(eq);
    if (node) {
      nlohmann::json e = {{"gadget", gadget_name(f)},
                          {"minimally_rigid", eq.minimally_rigid},
                          {"value", eq.value}};
      if (eq.minimally_rigid)
        e["count"] = std::move(child);
      eqs.push_back(std::move(e));
    }
  }
  const auto [r_l, r_r, r_c] = rhs;
  if (r_c % 4 != 0 || r_l % 2 != 0 || r_r % 2 != 0)
    throw Error(ErrorKind::Numerical,
                "class integrality violated: r_L=" + std::to_string(r_l) +
                    " r_R=" + std::to_string(r_r) + " r_C=" + std::to_string(r_c));
  const std::int64_t a = r_c / 4;
  r.cls = {a, a - r_l / 2, a - r_r / 2};

  nlohmann::json prov_eqs = nlohmann::json::array();
  for (const ClassEquation &eq : r.equations)
    prov_eqs.push_back({{"gadget", gadget_name(eq.gadget)}, {"value", eq.value}});
  cache_->put_class(key, r.cls, {{"method", "equations"}, {"equations", prov_eqs}});
  if (node)
    (*node)["equations"] = std::move(eqs);
  return finish(std::move(r));
}

} // namespace scount
