#include "tcpsolve/tracer.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace tcpsolve {

void validate(const TracerConfig& cfg) {
  validate(cfg.params);
  if (!(cfg.dt_min > 0 && cfg.dt_min <= cfg.dt0 && cfg.dt0 <= cfg.dt_max &&
        cfg.dt_max <= 1.0))
    throw std::invalid_argument("require 0 < dt_min <= dt0 <= dt_max <= 1");
  if (!(cfg.eps2 > 0 && cfg.eps2 <= cfg.eps1))
    throw std::invalid_argument("require 0 < eps2 <= eps1");
  if (cfg.max_newton_per_step < 1 || cfg.final_newton_budget < 1 ||
      cfg.max_steps < 1)
    throw std::invalid_argument("iteration limits must be positive");
  if (cfg.guard_radius && !(*cfg.guard_radius > 0))
    throw std::invalid_argument("guard_radius must be positive");
}

std::string to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::converged: return "converged";
    case TraceStatus::stalled: return "stalled";
    case TraceStatus::guard_tripped: return "guard_tripped";
    case TraceStatus::max_steps: return "max_steps";
  }
  return "unknown";
}

void update_step(StepController& ctrl, int newton_iters_used) {
  if (newton_iters_used > 3) {
    ctrl.current_dt = std::max(0.5 * ctrl.current_dt, ctrl.dt_min);
    ctrl.consecutive_uncut = 0;
    return;
  }
  ++ctrl.consecutive_uncut;
  if (ctrl.consecutive_uncut >= 2)
    ctrl.current_dt = std::min(2.0 * ctrl.current_dt, ctrl.dt_max);
}

bool cut_step(StepController& ctrl) {
  ctrl.consecutive_uncut = 0;
  if (ctrl.current_dt <= ctrl.dt_min) return false;
  ctrl.current_dt = std::max(0.5 * ctrl.current_dt, ctrl.dt_min);
  return true;
}

PredictResult euler_predict(const TcpProblem& p, const HomotopyParams& params,
                            const HomotopyPoint& pt, double dt) {
  PredictResult res;
  Matrix j = jacobian_z(p, pt);
  Vector rhs = -jacobian_t(p, params, pt);
  Eigen::PartialPivLU<Matrix> lu(j);
  double rcond = lu.rcond();
  if (!std::isfinite(rcond) || rcond < 1e-14) return res;
  res.tangent = lu.solve(rhs);
  if (!res.tangent.allFinite()) return res;
  // tangent is dz/dt; t decreases by dt, so the predictor moves against it
  res.z_tilde = pt.z() - dt * res.tangent;
  res.ok = true;
  return res;
}

CorrectResult newton_correct(const TcpProblem& p, const HomotopyParams& params,
                             const Vector& z_init, double t_fixed, double tol,
                             int max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("corrector tol must be positive");
  CorrectResult res;
  res.z = z_init;
  HomotopyPoint pt = split_z(res.z, t_fixed);
  Vector h = evaluate_h(p, params, pt);
  if (!h.allFinite()) return res;
  if (h.norm() <= tol) {
    res.converged = true;
    return res;
  }
  while (res.iterations < max_iter) {
    Matrix j = jacobian_z(p, pt);
    Eigen::JacobiSVD<Matrix> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    Vector step = svd.solve(h);
    res.z -= step;
    ++res.iterations;
    if (!res.z.allFinite()) return res;
    pt = split_z(res.z, t_fixed);
    h = evaluate_h(p, params, pt);
    if (!h.allFinite()) return res;
    if (h.norm() <= tol) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

bool divergence_guard(const TcpProblem& p, const TracerConfig& cfg,
                      const HomotopyPoint& pt,
                      std::optional<double> beta_estimate) {
  if (!(pt.t < 1.0)) return false;
  std::optional<double> beta =
      beta_estimate ? beta_estimate : cfg.beta_estimate;
  double x_inf = pt.x.lpNorm<Eigen::Infinity>();
  if (beta && *beta > 0.0) {
    double num = cfg.params.a.maxCoeff() +
                 p.q().lpNorm<Eigen::Infinity>() +
                 cfg.params.b.lpNorm<Eigen::Infinity>();
    double bound = std::max(1.0, num / ((1.0 - pt.t) * *beta));
    return std::pow(x_inf, p.order() - 1) > 10.0 * bound;
  }
  if (cfg.guard_radius) return x_inf > *cfg.guard_radius;
  return false;
}

namespace {

bool strictly_positive(const Vector& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!(v[i] > 0.0)) return false;
  return true;
}

}  // namespace

TraceResult trace(const TcpProblem& p, const TracerConfig& cfg) {
  validate(cfg);
  const int n = p.dim();
  if (cfg.params.a.size() != n)
    throw std::invalid_argument("tracer parameter length != problem dimension");

  TraceResult res;
  HomotopyPoint pt = start_point(cfg.params);
  if (cfg.record_path) res.path.push_back(pt);

  StepController ctrl{cfg.dt0, 0, cfg.dt_min, cfg.dt_max};
  const int max_attempts = 10 * cfg.max_steps;

  auto finish = [&](TraceStatus status) {
    res.status = status;
    if (status == TraceStatus::converged) {
      // snap degenerate near-zero components to the exact face; the endpoint
      // residual only determines them to ~eps2^(1/(m-1))
      double snap = 1e-2 * (1.0 + pt.x.lpNorm<Eigen::Infinity>());
      res.solution = purify(p, pt.x, snap, cfg.eps2);
    } else {
      res.solution = {pt.x, pt.y};
    }
    res.residue = reformulation_residual(p, res.solution);
    return res;
  };

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    if (res.itr >= cfg.max_steps) return finish(TraceStatus::max_steps);

    // Step 1: new t, clamped to 0 on the terminal step
    double dt = ctrl.current_dt;
    bool final_step = false;
    double t_next = pt.t - dt;
    if (t_next <= 0.0) {
      final_step = true;
      dt = pt.t;
      t_next = 0.0;
    }

    // Step 2: Euler predictor
    PredictResult pred = euler_predict(p, cfg.params, pt, dt);

    bool accepted = false;
    CorrectResult corr;
    if (pred.ok) {
      // Step 3: Newton corrector at fixed t_next
      double tol = final_step ? cfg.eps2 : cfg.eps1;
      int budget = final_step ? cfg.final_newton_budget : cfg.max_newton_per_step;
      corr = newton_correct(p, cfg.params, pred.z_tilde, t_next, tol, budget);
      res.nwtitr += corr.iterations;
      if (corr.converged) {
        HomotopyPoint cand = split_z(corr.z, t_next);
        if (final_step) {
          accepted = cand.x.minCoeff() >= -cfg.eps2 &&
                     cand.y.minCoeff() >= -cfg.eps2;
        } else {
          // the traced trajectory lies in the open positive orthant
          accepted = strictly_positive(cand.x) && strictly_positive(cand.y);
        }
        if (accepted) {
          pt = cand;
          ++res.itr;
          if (cfg.record_path) res.path.push_back(pt);
          res.steps.push_back({pt.t, dt, corr.iterations,
                               evaluate_h(p, cfg.params, pt).norm(),
                               pt.x.lpNorm<Eigen::Infinity>()});
          if (divergence_guard(p, cfg, pt))
            return finish(TraceStatus::guard_tripped);
          if (final_step) return finish(TraceStatus::converged);
          // Step 4
          update_step(ctrl, corr.iterations);
        }
      }
    }

    if (!accepted) {
      if (!cut_step(ctrl)) return finish(TraceStatus::stalled);
    }
  }
  return finish(TraceStatus::max_steps);
}

}  // namespace tcpsolve
