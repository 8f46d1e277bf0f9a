#include "scount/sphere.hpp"

#include <algorithm>
#include <random>

#include "scount/rigidity.hpp"

namespace scount {
namespace {

// A coordinate of a vertex: an unknown, or a gauge constant.
struct Coordinate {
  int var = -1;
  double constant = 0.0;
};

Coordinate coordinate(const RealizationSystem &s, Vertex v, int axis) {
  const VertexVariables &vv = s.layout[v];
  int var = axis == 0 ? vv.x : axis == 1 ? vv.y : vv.z;
  if (var >= 0)
    return {var, 0.0};
  if (v == s.pinned && axis == 2)
    return {-1, 1.0};
  return {-1, 0.0};
}

// Appends a * b to p, folding constants into a single trailing term.
void add_product(Polynomial &p, Coordinate a, Coordinate b, Complex &constant) {
  if ((a.var < 0 && a.constant == 0.0) || (b.var < 0 && b.constant == 0.0))
    return;
  if (a.var < 0 && b.var < 0) {
    constant += a.constant * b.constant;
    return;
  }
  if (a.var < 0 || b.var < 0) {
    const Coordinate &unknown = a.var < 0 ? b : a;
    const double c = a.var < 0 ? a.constant : b.constant;
    p.terms.push_back({c, {{unknown.var, 1}}});
    return;
  }
  if (a.var == b.var)
    p.terms.push_back({1.0, {{a.var, 2}}});
  else
    p.terms.push_back({1.0, {{std::min(a.var, b.var), 1}, {std::max(a.var, b.var), 1}}});
}

Polynomial dot_equation(const RealizationSystem &s, Vertex a, Vertex b,
                        double rhs) {
  Polynomial p;
  Complex constant = -rhs;
  for (int axis = 0; axis < 3; ++axis)
    add_product(p, coordinate(s, a, axis), coordinate(s, b, axis), constant);
  if (constant != 0.0)
    p.terms.push_back({constant, {}});
  return p;
}

double relative_distance(const std::vector<Complex> &a,
                         const std::vector<Complex> &b) {
  double diff = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(a[i]));
  }
  return diff / scale;
}

// Relative residual small enough that the point solves the target system.
bool residual_ok(const RealizationSystem &sys, const std::vector<Complex> &x) {
  double scale = 1.0, res = 0.0;
  for (const Complex &c : x)
    scale = std::max(scale, std::abs(c));
  for (const Complex &v : sys.system.evaluate(x))
    res = std::max(res, std::abs(v));
  return res <= 1e-8 * scale * scale;
}

const char *start_name(StartSystem s) {
  return s == StartSystem::TotalDegree ? "total-degree" : "multihomogeneous";
}

} // namespace

EdgeLengthAssignment sample_lengths(const Graph &g, std::uint64_t seed,
                                    LengthInterval interval) {
  if (!(interval.lo > 0.0 && interval.hi < 4.0 && interval.lo < interval.hi))
    throw Error(ErrorKind::Usage, "length interval must lie inside (0, 4)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(interval.lo, interval.hi);
  EdgeLengthAssignment out;
  out.seed = seed;
  for (const Edge &e : g.edges())
    out.lambda[e] = dist(rng);
  return out;
}

VariableGroups RealizationSystem::vertex_groups() const {
  VariableGroups groups;
  for (const VertexVariables &vv : layout) {
    std::vector<int> g;
    for (int var : {vv.x, vv.y, vv.z})
      if (var >= 0)
        g.push_back(var);
    if (!g.empty())
      groups.push_back(std::move(g));
  }
  return groups;
}

std::vector<Complex> RealizationSystem::half_turn(const std::vector<Complex> &solution) const {
  std::vector<Complex> out = solution;
  for (const VertexVariables &vv : layout) {
    if (vv.x >= 0)
      out[vv.x] = -out[vv.x];
    if (vv.y >= 0)
      out[vv.y] = -out[vv.y];
  }
  return out;
}

RealizationSystem build_system(const Graph &g, const EdgeLengthAssignment &lengths) {
  if (g.vertex_count() < 2 || !is_minimally_rigid(g))
    throw Error(ErrorKind::Domain, "realization system needs a minimally rigid graph");

  RealizationSystem s;
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v)
    deg[v] = g.degree(v);
  s.pinned = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
  s.planar = -1;
  for (Vertex v = 0; v < n; ++v)
    if (g.has_edge(s.pinned, v) && (s.planar < 0 || deg[v] > deg[s.planar]))
      s.planar = v;

  s.layout.assign(n, {});
  int next = 0;
  auto name = [&](const char *axis, Vertex v) {
    s.system.var_names.push_back(std::string(axis) + std::to_string(v));
    return next++;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (v == s.pinned)
      continue;
    s.layout[v].x = name("x", v);
    if (v != s.planar)
      s.layout[v].y = name("y", v);
    s.layout[v].z = name("z", v);
  }
  s.system.num_vars = next;

  for (Vertex v = 0; v < n; ++v)
    if (v != s.pinned)
      s.system.equations.push_back(dot_equation(s, v, v, 1.0));
  for (const Edge &e : g.edges())
    s.system.equations.push_back(dot_equation(s, e.u, e.v, lengths.inner_product(e)));

  if (static_cast<int>(s.system.equations.size()) != s.system.num_vars ||
      s.system.num_vars != 3 * n - 4)
    throw Error(ErrorKind::Domain, "gauge accounting failed: system is not square");
  return s;
}

static nlohmann::json trial_json(const TrialRecord &t) {
  return {{"seed", t.seed},
          {"count", t.count},
          {"paths_tracked", t.paths_tracked},
          {"paths_converged", t.paths_converged},
          {"paths_diverged_to_infinity", t.paths_diverged_to_infinity},
          {"singular_endpoints", t.singular_endpoints},
          {"ill_conditioned_endpoints", t.ill_conditioned_endpoints},
          {"failed_paths", t.failed_paths},
          {"distinct_endpoints", t.distinct_endpoints},
          {"symmetry_pairing_ok", t.symmetry_pairing_ok},
          {"attempts", t.attempts}};
}

nlohmann::json CountCertificate::to_json() const {
  nlohmann::json trials_json = nlohmann::json::array();
  for (const TrialRecord &t : trials)
    trials_json.push_back(trial_json(t));
  nlohmann::json rejected_json = nlohmann::json::array();
  for (const TrialRecord &t : rejected_trials)
    rejected_json.push_back(trial_json(t));
  return {{"agreed_count", agreed_count},
          {"start_system", start_system},
          {"paths_tracked", paths_tracked},
          {"paths_converged", paths_converged},
          {"paths_diverged_to_infinity", paths_diverged_to_infinity},
          {"distinct_endpoints", distinct_endpoints},
          {"singular_endpoints", singular_endpoints},
          {"symmetry_pairing_ok", symmetry_pairing_ok},
          {"trials", std::move(trials_json)},
          {"rejected_trials", std::move(rejected_json)}};
}

TrialRecord solve_count(const RealizationSystem &sys, const SolverConfig &cfg,
                        std::uint64_t seed) {
  if (cfg.tracker.start == StartSystem::TotalDegree &&
      sys.system.num_vars > cfg.total_degree_max_vars)
    throw Error(ErrorKind::Usage,
                "total-degree homotopy refused for " +
                    std::to_string(sys.system.num_vars) +
                    " unknowns; use the multihomogeneous start system");

  const VariableGroups groups = sys.vertex_groups();
  TrialRecord rec;
  std::string problem;
  for (int attempt = 0; attempt <= cfg.retries; ++attempt) {
    HomotopyRun run = solve_homotopy(sys.system, groups, cfg.tracker, seed, attempt);
    rec = TrialRecord{};
    rec.seed = seed;
    rec.attempts = attempt + 1;
    rec.paths_tracked = run.paths.size();

    std::vector<std::vector<Complex>> distinct;
    std::uint64_t duplicates = 0;
    for (PathOutcome &p : run.paths) {
      switch (p.kind) {
      case EndpointKind::Finite: {
        ++rec.paths_converged;
        bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const auto &d) {
          return relative_distance(d, p.solution) <= cfg.dedup_tol;
        });
        if (seen)
          ++duplicates;
        else
          distinct.push_back(std::move(p.solution));
        break;
      }
      case EndpointKind::AtInfinity:
        ++rec.paths_diverged_to_infinity;
        break;
      case EndpointKind::Singular:
        ++rec.singular_endpoints;
        if (p.t_reached == 1.0 && residual_ok(sys, p.solution))
          ++rec.ill_conditioned_endpoints;
        break;
      case EndpointKind::Failed:
        ++rec.failed_paths;
        break;
      }
    }
    rec.distinct_endpoints = distinct.size();

    rec.symmetry_pairing_ok = distinct.size() % 2 == 0;
    for (const auto &d : distinct) {
      auto image = sys.half_turn(d);
      if (relative_distance(image, d) <= cfg.dedup_tol) {
        rec.symmetry_pairing_ok = false; // fixed point of the half-turn
        break;
      }
      bool found = std::any_of(distinct.begin(), distinct.end(), [&](const auto &o) {
        return relative_distance(image, o) <= cfg.dedup_tol;
      });
      if (!found) {
        rec.symmetry_pairing_ok = false;
        break;
      }
    }
    rec.count = static_cast<std::int64_t>(distinct.size() / 2);

    if (rec.ill_conditioned_endpoints > 0) {
      problem = "ill-conditioned: " + std::to_string(rec.ill_conditioned_endpoints) +
                " endpoints are near-singular solutions; the length sample is"
                " too close to a degenerate one";
      break;
    }
    if (rec.failed_paths > 0 || duplicates > 0)
      problem = "uncertified: " + std::to_string(rec.failed_paths) +
                " unclassified paths, " + std::to_string(duplicates) +
                " duplicate endpoints";
    else if (!rec.symmetry_pairing_ok)
      problem = "pairing violated: " + std::to_string(distinct.size()) +
                " endpoints do not split into half-turn orbits";
    else
      return rec;
  }

  CountCertificate partial;
  partial.trials.push_back(rec);
  partial.start_system = start_name(cfg.tracker.start);
  throw NumericalFailure(problem, std::move(partial));
}

CountCertificate fallback_count(const Graph &g, const FallbackConfig &cfg) {
  if (cfg.trials < 1)
    throw Error(ErrorKind::Usage, "at least one trial is required");
  CountCertificate cert;
  cert.start_system = start_name(cfg.solver.tracker.start);
  cert.symmetry_pairing_ok = true;
  std::uint64_t next_seed = cfg.seed;
  while (static_cast<int>(cert.trials.size()) < cfg.trials) {
    const std::uint64_t seed = next_seed++;
    RealizationSystem sys = build_system(g, sample_lengths(g, seed, cfg.lengths));
    TrialRecord rec;
    try {
      rec = solve_count(sys, cfg.solver, seed);
    } catch (const NumericalFailure &f) {
      cert.rejected_trials.insert(cert.rejected_trials.end(),
                                  f.certificate().trials.begin(),
                                  f.certificate().trials.end());
      if (static_cast<int>(cert.rejected_trials.size()) > cfg.resamples)
        throw NumericalFailure(f.what(), cert);
      continue;
    }
    cert.paths_tracked += rec.paths_tracked;
    cert.paths_converged += rec.paths_converged;
    cert.paths_diverged_to_infinity += rec.paths_diverged_to_infinity;
    cert.singular_endpoints += rec.singular_endpoints;
    cert.symmetry_pairing_ok = cert.symmetry_pairing_ok && rec.symmetry_pairing_ok;
    cert.trials.push_back(rec);
  }
  const std::int64_t first = cert.trials.front().count;
  for (const TrialRecord &t : cert.trials)
    if (t.count != first)
      throw NumericalFailure("trial disagreement: counts differ across length samples",
                             cert);
  cert.agreed_count = first;
  cert.distinct_endpoints = cert.trials.front().distinct_endpoints;
  return cert;
}

} // namespace scount
