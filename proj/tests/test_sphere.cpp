#include <doctest.h>

#include "scount/rigidity.hpp"
#include "scount/sphere.hpp"
#include "support.hpp"

using namespace scount;

namespace {

FallbackConfig multihom() {
  FallbackConfig cfg;
  cfg.solver.tracker.start = StartSystem::MultiHomogeneous;
  return cfg;
}

} // namespace

TEST_CASE("length samples are seeded and inside the interval") {
  Graph g = fixtures::prism();
  EdgeLengthAssignment a = sample_lengths(g, 5), b = sample_lengths(g, 5);
  CHECK(a.lambda == b.lambda);
  CHECK(a.lambda != sample_lengths(g, 6).lambda);
  for (auto [e, l] : a.lambda) {
    CHECK(l > 0.5);
    CHECK(l < 3.5);
    CHECK(a.inner_product(e) == doctest::Approx(1.0 - l / 2.0));
  }
  CHECK_THROWS_AS(sample_lengths(g, 1, {0.0, 4.5}), Error);
}

TEST_CASE("realization system is square after fixing the gauge") {
  for (const Graph &g : {fixtures::k3(), fixtures::k4_minus_edge(), fixtures::double_c(),
                         fixtures::prism()}) {
    RealizationSystem s = build_system(g, sample_lengths(g, 1));
    const int n = g.vertex_count();
    CHECK(s.system.num_vars == 3 * n - 4);
    CHECK(s.system.equations.size() == static_cast<std::size_t>(3 * n - 4));
    CHECK(g.has_edge(s.pinned, s.planar));
    for (Vertex v = 0; v < n; ++v)
      CHECK(g.degree(s.pinned) >= g.degree(v));
    CHECK(s.layout[s.pinned].x < 0);
    CHECK(s.layout[s.planar].y < 0);
    CHECK(s.vertex_groups().size() == static_cast<std::size_t>(n - 1));
  }
  CHECK_THROWS_AS(build_system(fixtures::k4(), sample_lengths(fixtures::k4(), 1)), Error);
}

TEST_CASE("a realization satisfies the system and its half-turn does too") {
  // K3 on the sphere from explicit points: pinned vertex at the pole.
  Graph g = fixtures::k3();
  EdgeLengthAssignment lengths = sample_lengths(g, 3);
  RealizationSystem s = build_system(g, lengths);
  TrialRecord rec = solve_count(s, SolverConfig{}, 3);
  CHECK(rec.count == 2);
  CHECK(rec.symmetry_pairing_ok);
  CHECK(rec.distinct_endpoints == 4);
}

TEST_CASE("fallback counts") {
  CHECK(fallback_count(Graph(2, {{0, 1}}), FallbackConfig{}).agreed_count == 1);
  CHECK(fallback_count(fixtures::k3(), FallbackConfig{}).agreed_count == 2);

  CountCertificate k4e = fallback_count(fixtures::k4_minus_edge(), FallbackConfig{});
  CHECK(k4e.agreed_count == 4);
  CHECK(k4e.trials.size() == 3);
  CHECK(k4e.symmetry_pairing_ok);
  CHECK(k4e.distinct_endpoints == 8);
  CHECK(k4e.paths_tracked == 3 * 32);

  CHECK(fallback_count(fixtures::double_c(), FallbackConfig{}).agreed_count == 8);
  CHECK(fallback_count(fixtures::double_c(), multihom()).agreed_count == 8);
}

TEST_CASE("three-prism count") {
  // frozen from three agreeing random-length runs of the multihomogeneous
  // solver; the total-degree run below confirms it independently
  CountCertificate c = fallback_count(fixtures::prism(), multihom());
  CHECK(c.agreed_count == 32);
  FallbackConfig td;
  td.trials = 1;
  CHECK(fallback_count(fixtures::prism(), td).agreed_count == 32);
}

TEST_CASE("certificates are reproducible for a fixed seed") {
  FallbackConfig cfg = multihom();
  cfg.seed = 17;
  CHECK(fallback_count(fixtures::double_c(), cfg).to_json() ==
        fallback_count(fixtures::double_c(), cfg).to_json());
}

TEST_CASE("solver refusals") {
  CHECK_THROWS_AS(fallback_count(fixtures::k4(), FallbackConfig{}), Error);
  // nine vertices: 23 unknowns is above the total-degree limit
  Graph big = fixtures::prism();
  std::vector<Vertex> a{0, 1}, b{6, 2}, c{7, 3};
  big = big.with_vertex(a).with_vertex(b).with_vertex(c);
  REQUIRE(is_minimally_rigid(big));
  try {
    fallback_count(big, FallbackConfig{});
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Usage);
  }
  FallbackConfig none;
  none.trials = 0;
  CHECK_THROWS_AS(fallback_count(fixtures::k3(), none), Error);
}
