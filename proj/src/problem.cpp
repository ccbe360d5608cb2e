#include "tcpsolve/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace tcpsolve {

TcpProblem::TcpProblem(DenseTensor tensor, Vector q)
    : tensor_(std::move(tensor)), q_(std::move(q)) {
  if (q_.size() != tensor_.dim())
    throw std::invalid_argument("q length != tensor dimension");
}

Vector TcpProblem::map(const Vector& x) const {
  return contract_to_vector(tensor_, x) + q_;
}

Vector reformulation_residual_vector(const TcpProblem& p, const CandidatePair& c) {
  const int n = p.dim();
  if (c.x.size() != n || c.y.size() != n)
    throw std::invalid_argument("candidate pair size != problem dimension");
  Vector f = p.map(c.x);
  Vector r(2 * n);
  for (int i = 0; i < n; ++i) {
    r[i] = c.x[i] * c.y[i];
    r[n + i] = c.y[i] - f[i];
  }
  return r;
}

double reformulation_residual(const TcpProblem& p, const CandidatePair& c) {
  return reformulation_residual_vector(p, c).norm();
}

CandidatePair purify(const TcpProblem& p, Vector x, double snap_threshold,
                     double residual_slack) {
  Vector y = p.map(x);
  double best = reformulation_residual(p, {x, y});
  for (int i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) > snap_threshold) continue;
    Vector trial = x;
    trial[i] = 0.0;
    Vector ty = p.map(trial);
    double r = reformulation_residual(p, {trial, ty});
    if (r <= std::max(best, residual_slack)) {
      x = std::move(trial);
      y = std::move(ty);
      best = r;
    }
  }
  return {std::move(x), std::move(y)};
}

SolutionReport is_solution(const TcpProblem& p, const Vector& x, double tol) {
  if (x.size() != p.dim())
    throw std::invalid_argument("candidate size != problem dimension");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  Vector y = p.map(x);
  SolutionReport rep;
  rep.min_x = x.size() ? x.minCoeff() : 0.0;
  rep.min_y = y.size() ? y.minCoeff() : 0.0;
  rep.complementarity = x.dot(y);
  rep.x_nonnegative = rep.min_x >= -tol;
  rep.y_nonnegative = rep.min_y >= -tol;
  double scale = (1.0 + x.lpNorm<Eigen::Infinity>()) *
                 (1.0 + p.q().lpNorm<Eigen::Infinity>());
  rep.complementary = std::abs(rep.complementarity) <= tol * scale;
  rep.ok = rep.x_nonnegative && rep.y_nonnegative && rep.complementary;
  return rep;
}

}  // namespace tcpsolve
