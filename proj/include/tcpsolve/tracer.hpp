#pragma once

#include "tcpsolve/homotopy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tcpsolve {

struct TracerConfig {
  HomotopyParams params;
  double dt0 = 0.1;
  double eps1 = 1e-5;   // corrector tolerance at interior steps
  double eps2 = 1e-12;  // corrector tolerance at the final step
  double dt_min = 1e-6;
  double dt_max = 0.5;
  int max_newton_per_step = 20;
  int final_newton_budget = 60;  // Jacobian may be singular at t=0
  int max_steps = 1000;
  std::optional<double> guard_radius;
  std::optional<double> beta_estimate;
  bool record_path = true;

  static TracerConfig defaults(int n) {
    TracerConfig cfg;
    cfg.params = HomotopyParams::ones(n);
    return cfg;
  }
};

/// Throws on an invalid configuration.
void validate(const TracerConfig& cfg);

enum class TraceStatus { converged, stalled, guard_tripped, max_steps };

std::string to_string(TraceStatus s);

struct StepRecord {
  double t = 0.0;       // t reached by this accepted step
  double dt = 0.0;      // step size used
  int newton_iters = 0;
  double h_norm = 0.0;
  double x_inf = 0.0;
};

struct TraceResult {
  CandidatePair solution;
  double residue = 0.0;
  int itr = 0;      // accepted prediction steps, terminal one included
  int nwtitr = 0;   // all corrector iterations, failed attempts included
  std::vector<HomotopyPoint> path;
  std::vector<StepRecord> steps;
  TraceStatus status = TraceStatus::stalled;
};

/// Adaptive step-size state. A corrector needing more than three iterations
/// halves the next step; a cut resets the uncut counter; once two
/// consecutive steps complete without a cut, every further uncut step
/// doubles. Always clamped to [dt_min, dt_max].
struct StepController {
  double current_dt = 0.1;
  int consecutive_uncut = 0;
  double dt_min = 1e-6;
  double dt_max = 0.5;
};

void update_step(StepController& ctrl, int newton_iters_used);

/// Halve the step after a rejected attempt. Returns false when the step is
/// already at dt_min (nothing left to cut).
bool cut_step(StepController& ctrl);

struct PredictResult {
  bool ok = false;
  Vector z_tilde;  // z_k - dt * tangent
  Vector tangent;  // dz/dt, from D_z H g = -D_t H
};

/// Euler predictor at (z_k, t_k): solve for the path tangent by a direct
/// factorization and step toward t_k - dt. Fails (ok=false) when the
/// Jacobian's condition estimate exceeds 1e14.
PredictResult euler_predict(const TcpProblem& p, const HomotopyParams& params,
                            const HomotopyPoint& pt, double dt);

struct CorrectResult {
  Vector z;
  int iterations = 0;
  bool converged = false;
};

/// Newton corrector at fixed t. Each update solves a minimum-norm
/// least-squares problem with singular values below 1e-12 * sigma_max
/// treated as zero, standing in for the pseudo-inverse.
CorrectResult newton_correct(const TcpProblem& p, const HomotopyParams& params,
                             const Vector& z_init, double t_fixed, double tol,
                             int max_iter);

/// True when the path state exceeds the strict-semi-positivity norm bound
/// (with a 10x slack on the estimated beta) or, lacking a beta estimate,
/// cfg.guard_radius. Inactive when neither is available.
bool divergence_guard(const TcpProblem& p, const TracerConfig& cfg,
                      const HomotopyPoint& pt,
                      std::optional<double> beta_estimate = std::nullopt);

/// Trace the homotopy path from t=1 to t=0 with the Euler-Newton
/// predictor-corrector and adaptive step sizes.
TraceResult trace(const TcpProblem& p, const TracerConfig& cfg);

}  // namespace tcpsolve
