// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if a gating
// criterion fails.
//
// Environment:
//   SCOUNT_ACCEPT_STRIDE   sample every k-th 8-vertex graph with a split
//                          (default 10; 1 runs the whole corpus)
//   SCOUNT_STRETCH         set to 1 to run the 17-vertex reproduction
//   SCOUNT_STRETCH_CACHE   cache file for the stretch run

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "scount/enumerate.hpp"
#include "scount/recursion.hpp"
#include "scount/rigidity.hpp"
#include "support.hpp"

using namespace scount;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

long env_long(const char *name, long fallback) {
  const char *v = std::getenv(name);
  return v && *v ? std::strtol(v, nullptr, 10) : fallback;
}

// Every count and certificate produced along the way, for criterion 7.
struct Ledger {
  std::vector<std::int64_t> counts;
  std::vector<bool> pairings;

  void add(const CountCertificate &c) {
    counts.push_back(c.agreed_count);
    for (const TrialRecord &t : c.trials)
      pairings.push_back(t.symmetry_pairing_ok);
  }
};

Ledger ledger;

FallbackConfig multihom_fallback() {
  FallbackConfig f;
  f.solver.tracker.start = StartSystem::MultiHomogeneous;
  return f;
}

Outcome quad_form_arithmetic() {
  auto t0 = Clock::now();
  bool ok = quad_form({1, 1, 0}, {2, 0, 0}) == 4 && quad_form({1, 0, 1}, {2, 0, 0}) == 4 &&
            quad_form({2, 0, 0}, {2, 0, 0}) == 8 &&
            quad_form({384, 0, 0}, {640, 256, 384}) == 491520;
  double t = seconds_since(t0);
  return {ok && t < 1e-3, "4, 4, 8, 491520 in " + fmt(t) + " (limit 1 ms)"};
}

Outcome base_classes() {
  auto t0 = Clock::now();
  EngineConfig cfg;
  Engine e(cfg);
  bool ok = e.s2_class(basic_L()).cls == S2Class{1, 1, 0} &&
            e.s2_class(basic_R()).cls == S2Class{1, 0, 1} &&
            e.s2_class(basic_C()).cls == S2Class{2, 0, 0};
  cfg.use_base_cases = false;
  ClassResult forced = Engine(cfg).s2_class(basic_C());
  const auto &q = forced.equations;
  bool eq_ok = forced.method == "equations" && q.size() == 3 && q[0].value == 4 &&
               q[1].value == 4 && q[2].value == 8 && forced.cls == S2Class{2, 0, 0};
  return {ok && eq_ok, "base cases (1,1,0) (1,0,1) (2,0,0); equations r_L=" +
                           std::to_string(q.at(0).value) + " r_R=" +
                           std::to_string(q.at(1).value) + " r_C=" +
                           std::to_string(q.at(2).value) + " give " +
                           forced.cls.to_string() + " in " + fmt(seconds_since(t0))};
}

Outcome fallback_anchors() {
  auto t0 = Clock::now();
  FallbackConfig cfg; // total-degree start system, three trials
  CountCertificate a = fallback_count(fixtures::k4_minus_edge(), cfg);
  CountCertificate b = fallback_count(fixtures::double_c(), cfg);
  ledger.add(a);
  ledger.add(b);
  double t = seconds_since(t0);
  bool ok = a.agreed_count == 4 && b.agreed_count == 8 && a.trials.size() == 3 &&
            b.trials.size() == 3 && t < 60.0;
  return {ok, "K4 minus edge -> " + std::to_string(a.agreed_count) +
                  ", two glued C gadgets -> " + std::to_string(b.agreed_count) +
                  ", 3 trials each, " + fmt(t) + " (limit 60 s)"};
}

Outcome class_transform() {
  const Matrix3 &O = ClassTransform::O;
  const Matrix3 &A = ClassTransform::A;
  bool ok = multiply(multiply(O, A), transpose(O)) == A &&
            ClassTransform::apply(O, {1, 1, 0}) == S2Class{1, 1, 0} &&
            ClassTransform::apply(O, {1, 0, 1}) == S2Class{1, 0, 1} &&
            ClassTransform::apply(O, {2, 0, 0}) == S2Class{6, 4, 4};
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> d(-10000, 10000);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    S2Class x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng)};
    if (quad_form(ClassTransform::apply(O, x), ClassTransform::apply(O, y)) != quad_form(x, y))
      ++bad;
  }
  return {ok && bad == 0, "O A O^T = A, fixed points, O(2,0,0)=(6,4,4); " +
                              std::to_string(bad) + "/1000 random pairs changed"};
}

Outcome pebble_oracle() {
  auto t0 = Clock::now();
  std::size_t graphs = 0, rigid = 0, mismatches = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph &g : enumerate_graphs(n)) {
      ++graphs;
      bool fast = is_minimally_rigid(g);
      rigid += fast;
      mismatches += fast != brute_force_laman(g);
    }
  return {mismatches == 0 && rigid == 1 + 1 + 1 + 3 + 13 + 70,
          std::to_string(graphs) + " graphs on 2..7 vertices, " + std::to_string(rigid) +
              " minimally rigid, " + std::to_string(mismatches) + " mismatches in " +
              fmt(seconds_since(t0))};
}

Outcome split_invariance() {
  auto t0 = Clock::now();
  const long stride = std::max(1L, env_long("SCOUNT_ACCEPT_STRIDE", 10));
  EngineConfig cfg;
  cfg.fallback = multihom_fallback();
  auto cache = std::make_shared<CacheStore>();
  std::size_t checked = 0, mismatches = 0, eligible = 0;
  std::ostringstream bad;
  for (int n = 7; n <= 8; ++n) {
    std::size_t seen = 0;
    for (const Graph &g : enumerate_laman_graphs(n)) {
      if (!find_nontrivial_split(g))
        continue;
      ++eligible;
      if (n == 8 && seen++ % stride != 0)
        continue;
      Engine e(cfg, cache);
      CountResult split = e.count_realizations(g);
      CountCertificate direct = fallback_count(g, cfg.fallback);
      ledger.counts.push_back(split.count);
      ledger.add(direct);
      ++checked;
      if (split.method != "split" || split.count != direct.agreed_count) {
        ++mismatches;
        bad << " " << split.count << "!=" << direct.agreed_count;
      }
    }
  }
  return {mismatches == 0 && checked > 0,
          std::to_string(checked) + " of " + std::to_string(eligible) +
              " graphs with a non-trivial split (all on 7 vertices, every " +
              std::to_string(stride) + "th on 8), " + std::to_string(mismatches) +
              " mismatches" + bad.str() + " in " + fmt(seconds_since(t0))};
}

Outcome parity_and_pairing() {
  // add every Laman graph on 3..6 vertices to what earlier criteria produced
  for (int n = 3; n <= 6; ++n)
    for (const Graph &g : enumerate_laman_graphs(n))
      ledger.add(fallback_count(g, multihom_fallback()));
  std::size_t odd = 0, unpaired = 0;
  for (std::int64_t c : ledger.counts)
    odd += c % 2 != 0;
  for (bool p : ledger.pairings)
    unpaired += !p;
  return {odd == 0 && unpaired == 0 && !ledger.counts.empty(),
          std::to_string(ledger.counts.size()) + " counts, " + std::to_string(odd) +
              " odd; " + std::to_string(ledger.pairings.size()) + " endpoint sets, " +
              std::to_string(unpaired) + " not paired by the half-turn"};
}

Outcome stretch() {
  auto t0 = Clock::now();
  EngineConfig cfg;
  cfg.fallback = multihom_fallback();
  const char *path = std::getenv("SCOUNT_STRETCH_CACHE");
  auto cache = path && *path ? std::make_shared<CacheStore>(path)
                             : std::make_shared<CacheStore>();
  Engine e(cfg, cache);
  Graph g = fixtures::two_calligraph_17();
  auto split = find_nontrivial_split(g);
  if (!split)
    return {false, "no split found"};
  S2Class c1 = e.s2_class(split->left.calligraph).cls;
  S2Class c2 = e.s2_class(split->right.calligraph).cls;
  std::int64_t count = e.count_realizations(g).count;
  auto matches = [](S2Class x, S2Class want) { return x == want || x.swapped() == want; };
  bool classes = (matches(c1, {384, 0, 0}) && matches(c2, {640, 256, 384})) ||
                 (matches(c2, {384, 0, 0}) && matches(c1, {640, 256, 384}));
  return {count == 491520 && classes, "count " + std::to_string(count) + ", classes " +
                                          c1.to_string() + " and " + c2.to_string() +
                                          " in " + fmt(seconds_since(t0))};
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    std::function<Outcome()> check;
    bool gating;
  };
  const std::vector<Criterion> criteria{
      {1, "quad_form arithmetic", quad_form_arithmetic, true},
      {2, "basic classes and the C equations", base_classes, true},
      {3, "fallback anchors", fallback_anchors, true},
      {4, "class transform properties", class_transform, true},
      {5, "pebble game equals brute-force Laman", pebble_oracle, true},
      {6, "split count equals fallback count", split_invariance, true},
      {7, "parity and half-turn pairing", parity_and_pairing, true},
      {8, "17-vertex count 491520 (stretch)", stretch, false},
  };

  int failed = 0;
  for (const Criterion &c : criteria) {
    if (!c.gating && env_long("SCOUNT_STRETCH", 0) != 1) {
      std::cout << "SKIP criterion " << c.id << ": " << c.name
                << " (non-gating; set SCOUNT_STRETCH=1)" << std::endl;
      continue;
    }
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
              << " -- " << o.detail << (c.gating ? "" : " [non-gating]") << std::endl;
    if (!o.pass && c.gating)
      ++failed;
  }
  return failed == 0 ? 0 : 1;
}
