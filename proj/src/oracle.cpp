#include "tcpsolve/oracle.hpp"

#include "tcpsolve/diagnostics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcpsolve {

namespace {

Vector embed(const Vector& u, const std::vector<int>& support, int n) {
  Vector x = Vector::Zero(n);
  for (std::size_t k = 0; k < support.size(); ++k) x[support[k]] = u[k];
  return x;
}

// Damped Newton on the active equations f_S(x) = 0 with x supported on S.
// Returns the final iterate; caller judges feasibility.
Vector newton_on_support(const TcpProblem& p, const std::vector<int>& support,
                         Vector u) {
  const int n = p.dim();
  const int k = static_cast<int>(support.size());
  const double ftol = 1e-13 * (1.0 + p.q().lpNorm<Eigen::Infinity>());
  Vector fu(k);
  auto eval = [&](const Vector& w, Vector& out) {
    Vector f = p.map(embed(w, support, n));
    for (int i = 0; i < k; ++i) out[i] = f[support[i]];
    return out.norm();
  };
  double fnorm = eval(u, fu);
  for (int iter = 0; iter < 120 && fnorm > ftol; ++iter) {
    Matrix jfull = jacobian_of_map(p.tensor(), embed(u, support, n));
    Matrix j(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) j(r, c) = jfull(support[r], support[c]);
    Vector step = j.colPivHouseholderQr().solve(fu);
    if (!step.allFinite()) break;
    // step halving until the residual decreases
    double damp = 1.0;
    Vector best = u;
    double best_norm = fnorm;
    bool improved = false;
    Vector trial_f(k);
    for (int h = 0; h < 40; ++h) {
      Vector trial = u - damp * step;
      double tn = eval(trial, trial_f);
      if (std::isfinite(tn) && tn < best_norm) {
        best = trial;
        best_norm = tn;
        improved = true;
        break;
      }
      damp *= 0.5;
    }
    if (!improved) break;
    u = best;
    fnorm = eval(u, fu);
  }
  return u;
}

}  // namespace

std::vector<CandidatePair> solve_brute_force(const TcpProblem& p, double tol,
                                             int starts_per_support,
                                             std::optional<double> x_max_override) {
  const int n = p.dim();
  if (n > 3)
    throw std::invalid_argument("brute-force oracle supports dimension <= 3");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (starts_per_support < 1)
    throw std::invalid_argument("starts_per_support must be >= 1");

  double x_max;
  if (x_max_override) {
    x_max = *x_max_override;
  } else {
    // norm bound for the full deformation (t = 0), plus one
    double beta = estimate_beta(p.tensor()).first;
    double q_inf = p.q().lpNorm<Eigen::Infinity>();
    double bound = beta > 0 ? std::max(1.0, (1.0 + q_inf + 1.0) / beta) : 1e6;
    x_max = std::pow(bound, 1.0 / (p.order() - 1)) + 1.0;
  }

  std::vector<CandidatePair> found;
  auto consider = [&](const Vector& raw) {
    for (int i = 0; i < n; ++i)
      if (raw[i] < -tol) return;
    // collapse degenerate near-zero components onto the exact face so that a
    // flat residual direction does not masquerade as a family of solutions
    double snap = 1e-2 * (1.0 + raw.lpNorm<Eigen::Infinity>());
    CandidatePair cand = purify(p, raw, snap);
    if (!is_solution(p, cand.x, tol).ok) return;
    for (const auto& c : found)
      if ((c.x - cand.x).lpNorm<Eigen::Infinity>() < 1e-6) return;
    found.push_back(std::move(cand));
  };

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);
    const int k = static_cast<int>(support.size());
    if (k == 0) {
      consider(Vector::Zero(n));
      continue;
    }
    // multi-start grid over [0, x_max]^k
    std::vector<int> g(k, 0);
    bool more = true;
    while (more) {
      Vector u(k);
      for (int i = 0; i < k; ++i)
        u[i] = x_max * (g[i] + 0.5) / starts_per_support;
      consider(embed(newton_on_support(p, support, u), support, n));
      more = false;
      for (int pos = k - 1; pos >= 0; --pos) {
        if (++g[pos] < starts_per_support) {
          more = true;
          break;
        }
        g[pos] = 0;
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const CandidatePair& a, const CandidatePair& b) {
              return std::lexicographical_compare(
                  a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
            });
  return found;
}

}  // namespace tcpsolve
