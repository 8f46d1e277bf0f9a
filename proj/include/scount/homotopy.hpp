#pragma once

#include <cstdint>
#include <vector>

#include "scount/polynomial.hpp"

namespace scount {

enum class StartSystem {
  /// One homogenizing variable; start equations z_i^{d_i} - h^{d_i}.
  TotalDegree,
  /// One homogenizing variable per variable group; start equations are
  /// products of random linear forms matching the group degrees.
  MultiHomogeneous,
};

enum class Predictor { Euler, RungeKutta4 };

/// Path tracking and endpoint classification settings.
struct TrackerConfig {
  StartSystem start = StartSystem::TotalDegree;
  Predictor predictor = Predictor::RungeKutta4;
  double corrector_tol = 1e-10;
  int corrector_iterations = 3;
  double initial_dt = 0.01;
  double max_dt = 0.05;
  double min_dt = 1e-14;
  int max_steps = 10000;
  /// Re-tracks of a failed path with four times smaller steps.
  int path_retries = 2;
  /// A path stuck within this distance of t = 1 counts as having reached
  /// the end zone, where it is classified instead of being reported failed.
  double end_zone = 1e-3;
  /// |h_g| / max|X_g| below this marks a point at infinity.
  double infinity_tol = 1e-8;
  /// Jacobian condition number above which a finite endpoint is singular.
  double singular_condition = 1e8;
  /// Residual bound (relative) for accepting a finite endpoint.
  double residual_tol = 1e-8;
  std::uint64_t max_paths = std::uint64_t{1} << 20;
  int jobs = 1;
};

enum class EndpointKind { Finite, AtInfinity, Singular, Failed };

struct PathOutcome {
  EndpointKind kind = EndpointKind::Failed;
  /// Affine coordinates; filled for Finite and Singular endpoints.
  std::vector<Complex> solution;
  double t_reached = 0.0;
  int steps = 0;
  double condition = 0.0;
};

struct HomotopyRun {
  std::uint64_t start_solutions = 0;
  std::vector<PathOutcome> paths;
};

/// Variable partition used by a start system: TotalDegree ignores `groups`
/// and uses one group holding every variable.
using VariableGroups = std::vector<std::vector<int>>;

/// Number of start solutions (the total degree or the multihomogeneous
/// Bezout number of the grouping). Stops counting past `cap` and returns
/// cap + 1 in that case.
std::uint64_t start_solution_count(const PolySystem &target,
                                   const VariableGroups &groups,
                                   StartSystem kind, std::uint64_t cap);

/// Tracks every start solution of a gamma-twisted linear homotopy
/// (1 - t) gamma G + t F in per-group projective coordinates with random
/// affine patches. `seed` fixes gamma, the start system and the patches;
/// `attempt` perturbs gamma only. Results are independent of cfg.jobs.
HomotopyRun solve_homotopy(const PolySystem &target, const VariableGroups &groups,
                           const TrackerConfig &cfg, std::uint64_t seed,
                           int attempt = 0);

} // namespace scount
