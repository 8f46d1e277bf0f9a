#include <doctest.h>

#include "scount/calligraph.hpp"
#include "scount/enumerate.hpp"
#include "scount/rigidity.hpp"
#include "support.hpp"

using namespace scount;
using Reason = CalligraphError::Reason;

namespace {

Reason reason_of(const Graph &g, std::pair<Vertex, Vertex> base, Vertex apex) {
  try {
    validate_calligraph(g, base, apex);
  } catch (const CalligraphError &e) {
    return e.reason();
  }
  FAIL("validation unexpectedly passed");
  return Reason::NotRigid;
}

} // namespace

TEST_CASE("basic calligraphs") {
  CHECK(basic_L().graph() == Graph(3, {{1, 2}, {0, 1}}));
  CHECK(basic_R().graph() == Graph(3, {{1, 2}, {0, 2}}));
  CHECK(basic_C().graph() == Graph(4, {{1, 2}, {0, 3}, {1, 3}, {2, 3}}));
  for (const MarkedCalligraph &h : {basic_L(), basic_R(), basic_C()}) {
    CHECK(h.apex() == 0);
    CHECK(h.base() == std::pair{1, 2});
  }
}

TEST_CASE("validation accepts the gadgets and reports the first failure") {
  CHECK_NOTHROW(validate_calligraph(Graph(3, {{1, 2}, {0, 1}}), {1, 2}, 0));
  CHECK_NOTHROW(validate_calligraph(Graph(4, {{1, 2}, {0, 3}, {1, 3}, {2, 3}}), {1, 2}, 0));
  CHECK(reason_of(fixtures::k3(), {1, 2}, 0) == Reason::EdgeCount);
  CHECK(reason_of(Graph(3, {{1, 2}, {0, 1}}), {1, 2}, 1) == Reason::ApexOnBase);
  CHECK(reason_of(Graph(3, {{1, 2}, {0, 1}}), {0, 2}, 1) == Reason::MissingBaseEdge);
  CHECK(reason_of(Graph(3, {{1, 2}, {0, 1}}), {1, 2}, 3) == Reason::MarkOutOfRange);
  // 2|V|-4 edges, but all of them in an overbraced K4 beside the apex
  Graph loose(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(reason_of(loose, {1, 2}, 4) == Reason::NotRigid);
}

TEST_CASE("mirror property of validation") {
  for (int n = 3; n <= 6; ++n)
    for (const Graph &g : enumerate_graphs(n)) {
      if (g.edge_count() != static_cast<std::size_t>(2 * n - 4))
        continue;
      for (const Edge &e : g.edges())
        for (Vertex a = 0; a < n; ++a) {
          if (e.contains(a))
            continue;
          bool forward = true, backward = true;
          try {
            validate_calligraph(g, {e.u, e.v}, a);
          } catch (const CalligraphError &) {
            forward = false;
          }
          try {
            validate_calligraph(g, {e.v, e.u}, a);
          } catch (const CalligraphError &) {
            backward = false;
          }
          REQUIRE(forward == backward);
        }
    }
}

TEST_CASE("augmentation") {
  MarkedCalligraph c = basic_C();
  Graph hl = augment(c, Gadget::L);
  CHECK(hl == Graph(4, {{1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 1}}));
  CHECK(hl.edge_count() == 5);
  CHECK(fixtures::isomorphic_brute(hl, fixtures::k4_minus_edge()));
  CHECK_FALSE(hl.has_edge(0, 2));

  Graph hc = augment(c, Gadget::C);
  CHECK(hc.vertex_count() == 5);
  CHECK(hc.edge_count() == 7);
  CHECK(fixtures::isomorphic_brute(hc, fixtures::double_c()));

  // the L edge already exists in L itself
  CHECK(augment(basic_L(), Gadget::L) == basic_L().graph());
  CHECK(augment(basic_L(), Gadget::R) == fixtures::k3());
}

TEST_CASE("augmenting with C always meets the Laman edge count") {
  for (int n = 4; n <= 6; ++n)
    for (const Graph &g : enumerate_laman_graphs(n))
      for (const Edge &e : g.edges()) {
        for (Vertex a = 0; a < n; ++a) {
          if (e.contains(a))
            continue;
          Graph cut = g.without_edge(a, e.u);
          if (cut == g)
            continue;
          MarkedCalligraph m = validate_calligraph(cut, {e.u, e.v}, a);
          Graph aug = augment(m, Gadget::C);
          REQUIRE(aug.vertex_count() == n + 1);
          REQUIRE(aug.edge_count() == cut.edge_count() + 3);
          REQUIRE(is_minimally_rigid(augment(m, Gadget::L)));
        }
      }
}

TEST_CASE("mirrored swaps the base only") {
  MarkedCalligraph l = basic_L();
  MarkedCalligraph m = l.mirrored();
  CHECK(m.base() == std::pair{2, 1});
  CHECK(m.apex() == 0);
  CHECK(m.graph() == l.graph());
}
