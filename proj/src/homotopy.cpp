#include "scount/homotopy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <thread>

#include <Eigen/Dense>

#include "scount/error.hpp"

namespace scount {
namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Complex random_complex(std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double re = normal(rng);
  double im = normal(rng);
  return {re, im};
}

// Homogeneous linear form over the coordinates of one group: the group's
// variables in order, then its homogenizing variable.
struct LinearForm {
  int group = 0;
  std::vector<Complex> coef;
};

struct Factorization {
  std::vector<LinearForm> forms;
};

VariableGroups effective_groups(const PolySystem &target,
                                const VariableGroups &groups, StartSystem kind) {
  if (kind == StartSystem::TotalDegree) {
    std::vector<int> all(target.num_vars);
    for (int i = 0; i < target.num_vars; ++i)
      all[i] = i;
    return {all};
  }
  std::vector<int> seen(target.num_vars, 0);
  for (const auto &g : groups)
    for (int v : g) {
      if (v < 0 || v >= target.num_vars || seen[v]++)
        throw Error(ErrorKind::Validation, "variable groups must partition the variables");
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(ErrorKind::Validation, "variable groups must cover every variable");
  return groups;
}

// Group degree table d[i][g] of equation i in group g.
std::vector<std::vector<int>> group_degrees(const PolySystem &target,
                                            const VariableGroups &groups) {
  std::vector<std::vector<int>> d(target.equations.size(),
                                  std::vector<int>(groups.size(), 0));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<char> mask(target.num_vars, 0);
    for (int v : groups[g])
      mask[v] = 1;
    for (std::size_t i = 0; i < target.equations.size(); ++i)
      d[i][g] = target.equations[i].degree_in(mask);
  }
  return d;
}

// Enumerates assignments of one factor per equation so that every group
// receives exactly as many factors as it has variables.
class ChoiceEnumerator {
public:
  ChoiceEnumerator(std::vector<std::vector<int>> factor_groups,
                   std::vector<int> capacity)
      : factor_groups_(std::move(factor_groups)), capacity_(std::move(capacity)),
        appears_after_(factor_groups_.size() + 1,
                       std::vector<int>(capacity_.size(), 0)) {
    for (std::size_t i = factor_groups_.size(); i-- > 0;) {
      appears_after_[i] = appears_after_[i + 1];
      std::vector<char> hit(capacity_.size(), 0);
      for (int g : factor_groups_[i])
        hit[g] = 1;
      for (std::size_t g = 0; g < capacity_.size(); ++g)
        appears_after_[i][g] += hit[g];
    }
  }

  template <class Visit> bool run(std::uint64_t cap, Visit &&visit) {
    current_.assign(factor_groups_.size(), 0);
    count_ = 0;
    cap_ = cap;
    return dfs(0, visit);
  }

  std::uint64_t count() const { return count_; }

private:
  template <class Visit> bool dfs(std::size_t i, Visit &visit) {
    if (i == factor_groups_.size()) {
      if (++count_ > cap_)
        return false;
      visit(current_);
      return true;
    }
    for (std::size_t g = 0; g < capacity_.size(); ++g)
      if (capacity_[g] > appears_after_[i][g])
        return true; // some group can no longer be filled
    for (std::size_t k = 0; k < factor_groups_[i].size(); ++k) {
      int g = factor_groups_[i][k];
      if (capacity_[g] == 0)
        continue;
      --capacity_[g];
      current_[i] = static_cast<std::uint8_t>(k);
      bool ok = dfs(i + 1, visit);
      ++capacity_[g];
      if (!ok)
        return false;
    }
    return true;
  }

  std::vector<std::vector<int>> factor_groups_;
  std::vector<int> capacity_;
  std::vector<std::vector<int>> appears_after_;
  std::vector<std::uint8_t> current_;
  std::uint64_t count_ = 0;
  std::uint64_t cap_ = 0;
};

std::vector<std::vector<int>> factor_groups_for(const PolySystem &target,
                                                const VariableGroups &groups,
                                                StartSystem kind) {
  std::vector<std::vector<int>> fg(target.equations.size());
  if (kind == StartSystem::TotalDegree) {
    for (std::size_t i = 0; i < target.equations.size(); ++i)
      fg[i].assign(std::max(1, target.equations[i].degree()), 0);
    return fg;
  }
  auto d = group_degrees(target, groups);
  for (std::size_t i = 0; i < target.equations.size(); ++i)
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (int k = 0; k < d[i][g]; ++k)
        fg[i].push_back(static_cast<int>(g));
  return fg;
}

std::vector<int> capacities(const VariableGroups &groups) {
  std::vector<int> cap;
  for (const auto &g : groups)
    cap.push_back(static_cast<int>(g.size()));
  return cap;
}

class Homotopy {
public:
  Homotopy(const PolySystem &target, const VariableGroups &groups_in,
           StartSystem kind, std::uint64_t seed, int attempt)
      : target_(target), groups_(effective_groups(target, groups_in, kind)),
        n_(target.num_vars), m_(static_cast<int>(groups_.size())), dim_(n_ + m_) {
    if (static_cast<int>(target.equations.size()) != n_)
      throw Error(ErrorKind::Domain, "homotopy needs a square system");

    var_group_.assign(n_, 0);
    for (int g = 0; g < m_; ++g)
      for (int v : groups_[g])
        var_group_[v] = g;

    auto rng = make_rng(seed, 0x5eed);
    homogenize();

    factors_.resize(n_);
    if (kind == StartSystem::TotalDegree) {
      for (int i = 0; i < n_; ++i) {
        const int d = std::max(1, target.equations[i].degree());
        for (int k = 0; k < d; ++k) {
          LinearForm f{0, std::vector<Complex>(n_ + 1, 0.0)};
          f.coef[i] = 1.0;
          f.coef[n_] = -std::polar(1.0, 2.0 * std::numbers::pi * k / d);
          factors_[i].forms.push_back(std::move(f));
        }
      }
    } else {
      auto d = group_degrees(target, groups_);
      for (int i = 0; i < n_; ++i)
        for (int g = 0; g < m_; ++g)
          for (int k = 0; k < d[i][g]; ++k) {
            LinearForm f{g, {}};
            for (std::size_t c = 0; c <= groups_[g].size(); ++c)
              f.coef.push_back(random_complex(rng));
            factors_[i].forms.push_back(std::move(f));
          }
    }

    for (int g = 0; g < m_; ++g) {
      std::vector<Complex> a;
      for (std::size_t c = 0; c <= groups_[g].size(); ++c)
        a.push_back(random_complex(rng));
      patches_.push_back(std::move(a));
    }

    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    gamma_ = std::polar(1.0, angle(rng));
    if (attempt > 0) {
      auto retry_rng = make_rng(seed, 0xa77e0000ULL + attempt);
      gamma_ = std::polar(1.0, angle(retry_rng));
    }
  }

  int dim() const { return dim_; }
  const VariableGroups &groups() const { return groups_; }

  Complex coord(const VectorXcd &X, int g, std::size_t c) const {
    return c < groups_[g].size() ? X[groups_[g][c]] : X[n_ + g];
  }

  Complex form_value(const LinearForm &f, const VectorXcd &X) const {
    Complex s = 0.0;
    for (std::size_t c = 0; c < f.coef.size(); ++c)
      s += f.coef[c] * coord(X, f.group, c);
    return s;
  }

  void add_form_gradient(const LinearForm &f, Complex scale, MatrixXcd &J,
                         int row) const {
    for (std::size_t c = 0; c < f.coef.size(); ++c) {
      int idx = c < groups_[f.group].size() ? groups_[f.group][c] : n_ + f.group;
      J(row, idx) += scale * f.coef[c];
    }
  }

  // Fills H(X,t), dH/dX and dH/dt. Any of the outputs may be skipped.
  void evaluate(const VectorXcd &X, double t, VectorXcd *H, MatrixXcd *J,
                VectorXcd *Ht) const {
    if (H)
      H->resize(dim_);
    if (J)
      J->setZero(dim_, dim_);
    if (Ht)
      Ht->setZero(dim_);
    std::span<const Complex> xs(X.data(), static_cast<std::size_t>(dim_));
    thread_local std::vector<Complex> grad, val, prefix, suffix;
    grad.resize(dim_);
    const Complex gs = (1.0 - t) * gamma_;

    for (int i = 0; i < n_; ++i) {
      const Polynomial &f = hom_[i];
      Complex fv = f.evaluate(xs);
      const auto &forms = factors_[i].forms;
      const std::size_t k = forms.size();
      val.resize(k);
      prefix.assign(k + 1, 1.0);
      suffix.assign(k + 1, 1.0);
      for (std::size_t j = 0; j < k; ++j)
        val[j] = form_value(forms[j], X);
      for (std::size_t j = 0; j < k; ++j)
        prefix[j + 1] = prefix[j] * val[j];
      for (std::size_t j = k; j-- > 0;)
        suffix[j] = suffix[j + 1] * val[j];
      Complex gv = prefix[k];

      if (H)
        (*H)[i] = gs * gv + t * fv;
      if (Ht)
        (*Ht)[i] = fv - gamma_ * gv;
      if (J) {
        std::fill(grad.begin(), grad.end(), Complex(0.0));
        f.accumulate_gradient(xs, grad);
        for (int c = 0; c < dim_; ++c)
          (*J)(i, c) = t * grad[c];
        for (std::size_t j = 0; j < k; ++j)
          add_form_gradient(forms[j], gs * prefix[j] * suffix[j + 1], *J, i);
      }
    }
    for (int g = 0; g < m_; ++g) {
      const int row = n_ + g;
      Complex s = -1.0;
      for (std::size_t c = 0; c < patches_[g].size(); ++c)
        s += patches_[g][c] * coord(X, g, c);
      if (H)
        (*H)[row] = s;
      if (J)
        add_form_gradient(LinearForm{g, patches_[g]}, 1.0, *J, row);
    }
  }

  VectorXcd start_point(const std::vector<std::uint8_t> &choice) const {
    VectorXcd X(dim_);
    for (int g = 0; g < m_; ++g) {
      const int size = static_cast<int>(groups_[g].size()) + 1;
      MatrixXcd A = MatrixXcd::Zero(size, size);
      VectorXcd b = VectorXcd::Zero(size);
      int row = 0;
      for (int i = 0; i < n_; ++i) {
        const LinearForm &f = factors_[i].forms[choice[i]];
        if (f.group != g)
          continue;
        for (int c = 0; c < size; ++c)
          A(row, c) = f.coef[c];
        ++row;
      }
      for (int c = 0; c < size; ++c)
        A(row, c) = patches_[g][c];
      b[row] = 1.0;
      VectorXcd y = A.fullPivLu().solve(b);
      for (int c = 0; c < size; ++c)
        X[c + 1 < size ? groups_[g][c] : n_ + g] = y[c];
    }
    return X;
  }

  double min_relative_h(const VectorXcd &X) const {
    double worst = std::numeric_limits<double>::infinity();
    for (int g = 0; g < m_; ++g) {
      double scale = 0.0;
      for (std::size_t c = 0; c <= groups_[g].size(); ++c)
        scale = std::max(scale, std::abs(coord(X, g, c)));
      worst = std::min(worst, std::abs(X[n_ + g]) / std::max(scale, 1e-300));
    }
    return worst;
  }

  std::vector<Complex> affine(const VectorXcd &X) const {
    std::vector<Complex> x(n_);
    for (int v = 0; v < n_; ++v)
      x[v] = X[v] / X[n_ + var_group_[v]];
    return x;
  }

  const PolySystem &target() const { return target_; }

private:
  void homogenize() {
    auto d = group_degrees(target_, groups_);
    hom_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      for (const Term &term : target_.equations[i].terms) {
        std::vector<int> deg(m_, 0);
        for (auto [var, e] : term.powers)
          deg[var_group_[var]] += e;
        Term h = term;
        for (int g = 0; g < m_; ++g)
          if (d[i][g] > deg[g])
            h.powers.emplace_back(n_ + g, d[i][g] - deg[g]);
        hom_[i].terms.push_back(std::move(h));
      }
    }
  }

  const PolySystem &target_;
  VariableGroups groups_;
  int n_, m_, dim_;
  std::vector<int> var_group_;
  std::vector<Polynomial> hom_;
  std::vector<Factorization> factors_;
  std::vector<std::vector<Complex>> patches_;
  Complex gamma_;
};

// Solves A x = b in place by Gaussian elimination with partial pivoting on
// |a|^2; A is overwritten. Returns false on an exactly singular pivot.
bool lu_solve(MatrixXcd &A, VectorXcd &b) {
  const Eigen::Index n = A.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    double best = std::norm(A(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (double v = std::norm(A(i, k)); v > best) {
        best = v;
        p = i;
      }
    if (best == 0.0)
      return false;
    if (p != k) {
      A.row(k).swap(A.row(p));
      std::swap(b[k], b[p]);
    }
    const Complex inv = 1.0 / A(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i)
      A(i, k) *= inv;
    for (Eigen::Index j = k + 1; j < n; ++j) {
      const Complex akj = A(k, j);
      if (akj == 0.0)
        continue;
      Complex *col = &A(0, j);
      const Complex *piv = &A(0, k);
      for (Eigen::Index i = k + 1; i < n; ++i)
        col[i] -= piv[i] * akj;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      b[i] -= A(i, k) * b[k];
  }
  for (Eigen::Index k = n; k-- > 0;) {
    Complex s = b[k];
    for (Eigen::Index j = k + 1; j < n; ++j)
      s -= A(k, j) * b[j];
    b[k] = s / A(k, k);
  }
  return true;
}

bool all_finite(const VectorXcd &v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
      return false;
  return true;
}

// Newton on the affine target. Returns the Jacobian condition number of the
// final point, or infinity when the iteration diverged or stalled.
double refine_affine(const PolySystem &target, std::vector<Complex> &x,
                     double tol, double &residual) {
  const int n = target.num_vars;
  MatrixXcd J(n, n);
  VectorXcd F(n);
  std::vector<Complex> grad(n);
  auto eval = [&] {
    for (int i = 0; i < n; ++i) {
      F[i] = target.equations[i].evaluate(x);
      std::fill(grad.begin(), grad.end(), Complex(0.0));
      target.equations[i].accumulate_gradient(x, grad);
      for (int c = 0; c < n; ++c)
        J(i, c) = grad[c];
    }
  };
  for (int it = 0; it < 6; ++it) {
    eval();
    VectorXcd dx = J.partialPivLu().solve(-F);
    if (!all_finite(dx))
      break;
    double scale = 1.0;
    for (auto &c : x)
      scale = std::max(scale, std::abs(c));
    for (int i = 0; i < n; ++i)
      x[i] += dx[i];
    if (dx.norm() <= tol * scale)
      break;
  }
  eval();
  residual = F.norm();
  Eigen::JacobiSVD<MatrixXcd> svd(J);
  const auto &s = svd.singularValues();
  if (s.size() == 0)
    return 1.0;
  double smin = s[s.size() - 1];
  if (!(smin > 0.0))
    return std::numeric_limits<double>::infinity();
  return s[0] / smin;
}

class Tracker {
public:
  Tracker(const Homotopy &h, const TrackerConfig &cfg) : h_(h), cfg_(cfg) {}

  PathOutcome track(const VectorXcd &start) const {
    PathOutcome out;
    double initial = cfg_.initial_dt, max_dt = cfg_.max_dt;
    for (int attempt = 0; attempt <= cfg_.path_retries; ++attempt) {
      out = track_once(start, initial, max_dt);
      if (out.kind != EndpointKind::Failed)
        return out;
      initial /= 4.0;
      max_dt /= 4.0;
    }
    return out;
  }

private:
  bool tangent(const VectorXcd &X, double t, VectorXcd &dx) const {
    h_.evaluate(X, t, nullptr, &J_, &Ht_);
    dx = -Ht_;
    return lu_solve(J_, dx) && all_finite(dx);
  }

  bool predict(VectorXcd &X, double t, double dt) const {
    VectorXcd k1, k2, k3, k4;
    if (!tangent(X, t, k1))
      return false;
    if (cfg_.predictor == Predictor::Euler) {
      X += dt * k1;
      return true;
    }
    if (!tangent(X + 0.5 * dt * k1, t + 0.5 * dt, k2) ||
        !tangent(X + 0.5 * dt * k2, t + 0.5 * dt, k3) ||
        !tangent(X + dt * k3, t + dt, k4))
      return false;
    X += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    return true;
  }

  bool correct(VectorXcd &X, double t, int iterations, double tol) const {
    for (int it = 0; it < iterations; ++it) {
      h_.evaluate(X, t, &H_, &J_, nullptr);
      VectorXcd dx = -H_;
      if (!lu_solve(J_, dx) || !all_finite(dx))
        return false;
      X += dx;
      if (dx.norm() <= tol * std::max(1.0, X.norm()))
        return true;
    }
    return false;
  }

  PathOutcome track_once(const VectorXcd &start, double dt, double max_dt) const {
    PathOutcome out;
    VectorXcd X = start;
    double t = 0.0;
    int successes = 0;
    int steps = 0;
    bool reached = false;
    while (true) {
      if (steps >= cfg_.max_steps)
        break;
      ++steps;
      const bool last = dt >= 1.0 - t;
      const double step = last ? 1.0 - t : dt;
      VectorXcd Y = X;
      const double t_next = last ? 1.0 : t + step;
      if (predict(Y, t, step) &&
          correct(Y, t_next, cfg_.corrector_iterations, cfg_.corrector_tol)) {
        X = std::move(Y);
        t = t_next;
        if (last) {
          reached = true;
          break;
        }
        if (++successes >= 3) {
          dt = std::min(2.0 * dt, max_dt);
          successes = 0;
        }
        if (1.0 - t < cfg_.end_zone && h_.min_relative_h(X) < cfg_.infinity_tol)
          break;
      } else {
        successes = 0;
        dt *= 0.5;
        if (dt < cfg_.min_dt)
          break;
      }
    }
    out.t_reached = t;
    out.steps = steps;

    if (reached)
      correct(X, 1.0, 10, cfg_.corrector_tol * 1e-2);
    else if (1.0 - t >= cfg_.end_zone)
      return out; // Failed

    if (h_.min_relative_h(X) < (reached ? cfg_.infinity_tol : 1e-4)) {
      out.kind = EndpointKind::AtInfinity;
      return out;
    }
    std::vector<Complex> x = h_.affine(X);
    double residual = 0.0;
    double cond = refine_affine(h_.target(), x, cfg_.corrector_tol, residual);
    double scale = 1.0;
    for (auto &c : x)
      scale = std::max(scale, std::abs(c));
    out.condition = cond;
    out.solution = std::move(x);
    if (std::isfinite(cond) && cond <= cfg_.singular_condition &&
        residual <= cfg_.residual_tol * scale * scale)
      out.kind = EndpointKind::Finite;
    else
      out.kind = EndpointKind::Singular;
    return out;
  }

  const Homotopy &h_;
  const TrackerConfig &cfg_;
  mutable MatrixXcd J_;
  mutable VectorXcd H_, Ht_;
};

} // namespace

std::uint64_t start_solution_count(const PolySystem &target,
                                   const VariableGroups &groups,
                                   StartSystem kind, std::uint64_t cap) {
  auto eff = effective_groups(target, groups, kind);
  if (kind == StartSystem::TotalDegree) {
    std::uint64_t d = 1;
    for (const Polynomial &p : target.equations) {
      d *= static_cast<std::uint64_t>(std::max(1, p.degree()));
      if (d > cap)
        return cap + 1;
    }
    return d;
  }
  ChoiceEnumerator e(factor_groups_for(target, eff, kind), capacities(eff));
  e.run(cap, [](const std::vector<std::uint8_t> &) {});
  return std::min(e.count(), cap + 1);
}

HomotopyRun solve_homotopy(const PolySystem &target, const VariableGroups &groups,
                           const TrackerConfig &cfg, std::uint64_t seed,
                           int attempt) {
  Homotopy h(target, groups, cfg.start, seed, attempt);

  const auto &eff = h.groups();
  ChoiceEnumerator e(factor_groups_for(target, eff, cfg.start), capacities(eff));
  std::vector<std::uint8_t> choices;
  const std::size_t width = target.equations.size();
  bool within = e.run(cfg.max_paths, [&](const std::vector<std::uint8_t> &c) {
    choices.insert(choices.end(), c.begin(), c.end());
  });
  if (!within)
    throw Error(ErrorKind::Numerical,
                "start system exceeds the path cap of " +
                    std::to_string(cfg.max_paths) + " paths");

  HomotopyRun run;
  run.start_solutions = e.count();
  run.paths.resize(run.start_solutions);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    Tracker tracker(h, cfg);
    while (true) {
      std::uint64_t idx = next.fetch_add(1);
      if (idx >= run.start_solutions)
        return;
      std::vector<std::uint8_t> c(choices.begin() + idx * width,
                                  choices.begin() + (idx + 1) * width);
      run.paths[idx] = tracker.track(h.start_point(c));
    }
  };
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  return run;
}

} // namespace scount
