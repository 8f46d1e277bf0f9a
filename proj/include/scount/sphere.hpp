#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scount/error.hpp"
#include "scount/graph.hpp"
#include "scount/homotopy.hpp"
#include "scount/polynomial.hpp"

namespace scount {

/// Squared chord lengths lambda_e in (0, 4) for every edge, sampled
/// independently and uniformly from a sub-interval.
struct EdgeLengthAssignment {
  std::map<Edge, double> lambda;
  std::uint64_t seed = 0;

  /// Prescribed inner product <rho(u), rho(v)> = 1 - lambda_e / 2.
  double inner_product(const Edge &e) const { return 1.0 - lambda.at(e) / 2.0; }
};

struct LengthInterval {
  double lo = 0.5;
  double hi = 3.5;
};

EdgeLengthAssignment sample_lengths(const Graph &g, std::uint64_t seed,
                                    LengthInterval interval = {});

/// Position of a vertex's coordinates in the unknown vector; -1 marks a
/// coordinate fixed by the gauge (pinned vertex, or y of the second gauge
/// vertex).
struct VertexVariables {
  int x = -1, y = -1, z = -1;
};

/// Sphere and edge equations with the rotation gauge fixed: `pinned` sits at
/// (0, 0, 1) and `planar` is restricted to the plane y = 0.
struct RealizationSystem {
  PolySystem system;
  std::vector<VertexVariables> layout;
  Vertex pinned = 0;
  Vertex planar = 1;

  /// One group per unpinned vertex, for multihomogeneous start systems.
  VariableGroups vertex_groups() const;
  /// The residual half-turn about the z-axis: x, y -> -x, -y.
  std::vector<Complex> half_turn(const std::vector<Complex> &solution) const;
};

/// Requires a minimally rigid graph. The gauge edge joins a vertex of
/// maximum degree to its highest-degree neighbour (lowest labels on ties).
RealizationSystem build_system(const Graph &g, const EdgeLengthAssignment &lengths);

struct SolverConfig {
  TrackerConfig tracker;
  /// Relative distance below which two endpoints are the same solution.
  double dedup_tol = 1e-6;
  /// Whole-system re-runs with a perturbed gamma after an uncertified run.
  int retries = 2;
  /// Total-degree runs are refused above this many unknowns.
  int total_degree_max_vars = 20;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  std::uint64_t paths_tracked = 0;
  std::uint64_t paths_converged = 0;
  std::uint64_t paths_diverged_to_infinity = 0;
  std::uint64_t singular_endpoints = 0;
  /// Singular endpoints reached at t = 1 with a vanishing residual: genuine
  /// but ill-conditioned solutions, the mark of a near-degenerate sample.
  std::uint64_t ill_conditioned_endpoints = 0;
  std::uint64_t failed_paths = 0;
  std::uint64_t distinct_endpoints = 0;
  bool symmetry_pairing_ok = false;
  int attempts = 0;
  std::int64_t count = 0;
};

/// Evidence behind a fallback count. Aggregated fields sum over trials.
struct CountCertificate {
  std::uint64_t paths_tracked = 0;
  std::uint64_t paths_converged = 0;
  std::uint64_t paths_diverged_to_infinity = 0;
  std::uint64_t distinct_endpoints = 0;
  std::uint64_t singular_endpoints = 0;
  bool symmetry_pairing_ok = false;
  std::vector<TrialRecord> trials;
  /// Length samples discarded because their run could not be certified.
  std::vector<TrialRecord> rejected_trials;
  std::int64_t agreed_count = 0;
  std::string start_system;

  nlohmann::json to_json() const;
};

/// Thrown when the solver cannot certify a count. Carries every trial
/// gathered so far.
class NumericalFailure : public Error {
public:
  NumericalFailure(const std::string &what, CountCertificate partial)
      : Error(ErrorKind::Numerical, what), certificate_(std::move(partial)) {}

  const CountCertificate &certificate() const { return certificate_; }

private:
  CountCertificate certificate_;
};

/// Tracks all start paths, deduplicates the finite nonsingular endpoints,
/// checks the half-turn pairing and reports half the endpoint count. Throws
/// NumericalFailure ("uncertified" / "pairing violated" / "ill-conditioned")
/// when `retries` re-runs do not produce a clean result. Ill-conditioned
/// samples are not re-run.
TrialRecord solve_count(const RealizationSystem &sys, const SolverConfig &cfg,
                        std::uint64_t seed);

struct FallbackConfig {
  SolverConfig solver;
  int trials = 3;
  std::uint64_t seed = 1;
  /// Replacement length samples drawn when a sample cannot be certified.
  int resamples = 3;
  LengthInterval lengths;
};

/// Runs solve_count on `trials` independent random length assignments (seeds
/// seed, seed+1, ...) and returns the certificate of the agreed count. A
/// sample whose run fails is replaced by the next unused seed, at most
/// `resamples` times. Throws NumericalFailure on disagreement.
CountCertificate fallback_count(const Graph &g, const FallbackConfig &cfg);

} // namespace scount
