#include <doctest.h>

#include <algorithm>

#include "scount/homotopy.hpp"
#include "scount/sphere.hpp"
#include "support.hpp"

using namespace scount;

namespace {

Polynomial poly(std::vector<Term> terms) { return Polynomial{std::move(terms)}; }

std::vector<std::vector<Complex>> finite(const HomotopyRun &run) {
  std::vector<std::vector<Complex>> out;
  for (const PathOutcome &p : run.paths)
    if (p.kind == EndpointKind::Finite)
      out.push_back(p.solution);
  return out;
}

} // namespace

TEST_CASE("polynomial evaluation and degree") {
  // 3 x0^2 x1 - 2 x1 + 1
  Polynomial p = poly({{3.0, {{0, 2}, {1, 1}}}, {-2.0, {{1, 1}}}, {1.0, {}}});
  std::vector<Complex> x{2.0, -1.0};
  CHECK(p.evaluate(x) == Complex(-9.0));
  CHECK(p.degree() == 3);
  std::vector<Complex> grad(2);
  p.accumulate_gradient(x, grad);
  CHECK(grad[0] == Complex(-12.0));
  CHECK(grad[1] == Complex(10.0));
}

TEST_CASE("univariate quadratic has two finite roots") {
  PolySystem sys{1, {poly({{1.0, {{0, 2}}}, {-2.0, {}}})}, {"x"}};
  HomotopyRun run = solve_homotopy(sys, {{0}}, TrackerConfig{}, 1);
  auto roots = finite(run);
  REQUIRE(roots.size() == 2);
  std::vector<double> re{roots[0][0].real(), roots[1][0].real()};
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
  CHECK(re[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("circle meets a line in two points; the extra path goes to infinity") {
  // x^2 + y^2 - 1 = 0, x y - 0.25 = 0: four finite points
  // x^2 - y^2 = 0.5, x - y = 0: no solution with x = y, both paths diverge
  PolySystem circle{2,
                    {poly({{1.0, {{0, 2}}}, {1.0, {{1, 2}}}, {-1.0, {}}}),
                     poly({{1.0, {{0, 1}, {1, 1}}}, {-0.25, {}}})},
                    {"x", "y"}};
  CHECK(finite(solve_homotopy(circle, {}, TrackerConfig{}, 2)).size() == 4);

  PolySystem parallel{2,
                      {poly({{1.0, {{0, 2}}}, {-1.0, {{1, 2}}}, {-0.5, {}}}),
                       poly({{1.0, {{0, 1}}}, {-1.0, {{1, 1}}}})},
                      {"x", "y"}};
  HomotopyRun run = solve_homotopy(parallel, {}, TrackerConfig{}, 2);
  CHECK(run.paths.size() == 2);
  CHECK(finite(run).empty());
  for (const PathOutcome &p : run.paths)
    CHECK(p.kind == EndpointKind::AtInfinity);
}

TEST_CASE("start solution counts") {
  Graph g = fixtures::k4_minus_edge();
  RealizationSystem sys = build_system(g, sample_lengths(g, 1));
  // one quadratic per free vertex and per edge, except the edges at the
  // pinned vertex which are linear
  int pinned_degree = g.degree(sys.pinned);
  std::uint64_t bezout = 1ULL << (3 + g.edge_count() - pinned_degree);
  CHECK(bezout == 32);
  CHECK(start_solution_count(sys.system, {}, StartSystem::TotalDegree, 1 << 20) == bezout);
  std::uint64_t mh = start_solution_count(sys.system, sys.vertex_groups(),
                                          StartSystem::MultiHomogeneous, 1 << 20);
  CHECK(mh <= bezout);
  CHECK(mh >= 8);
  CHECK(start_solution_count(sys.system, {}, StartSystem::TotalDegree, 10) == 11);
}

TEST_CASE("results do not depend on the number of threads") {
  Graph g = fixtures::double_c();
  RealizationSystem sys = build_system(g, sample_lengths(g, 4));
  TrackerConfig one, three;
  three.jobs = 3;
  HomotopyRun a = solve_homotopy(sys.system, {}, one, 9);
  HomotopyRun b = solve_homotopy(sys.system, {}, three, 9);
  REQUIRE(a.paths.size() == b.paths.size());
  for (std::size_t i = 0; i < a.paths.size(); ++i) {
    REQUIRE(a.paths[i].kind == b.paths[i].kind);
    REQUIRE(a.paths[i].solution == b.paths[i].solution);
  }
}

TEST_CASE("path cap is enforced") {
  Graph g = fixtures::prism();
  RealizationSystem sys = build_system(g, sample_lengths(g, 1));
  TrackerConfig cfg;
  cfg.max_paths = 100;
  CHECK_THROWS_AS(solve_homotopy(sys.system, {}, cfg, 1), Error);
}
