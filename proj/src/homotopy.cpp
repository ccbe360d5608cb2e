#include "tcpsolve/homotopy.hpp"

#include <stdexcept>

namespace tcpsolve {

void validate(const HomotopyParams& params) {
  if (params.a.size() != params.b.size())
    throw std::invalid_argument("homotopy parameter vectors differ in length");
  for (int i = 0; i < params.b.size(); ++i) {
    if (!(params.b[i] > 0.0))
      throw std::invalid_argument("homotopy parameter b must be strictly positive");
  }
  for (int i = 0; i < params.a.size(); ++i) {
    if (params.allow_zero_a ? !(params.a[i] >= 0.0) : !(params.a[i] > 0.0))
      throw std::invalid_argument(
          params.allow_zero_a ? "homotopy parameter a must be nonnegative"
                              : "homotopy parameter a must be strictly positive");
  }
}

HomotopyPoint start_point(const HomotopyParams& params) {
  validate(params);
  HomotopyPoint pt;
  pt.x = params.a.cwiseQuotient(params.b);
  pt.y = params.b;
  pt.t = 1.0;
  return pt;
}

Vector evaluate_h(const TcpProblem& p, const HomotopyParams& params,
                  const HomotopyPoint& pt) {
  const int n = p.dim();
  if (pt.x.size() != n || pt.y.size() != n || params.a.size() != n)
    throw std::invalid_argument("homotopy point size != problem dimension");
  const double t = pt.t;
  Vector f = p.map(pt.x);
  Vector h(2 * n);
  for (int i = 0; i < n; ++i) {
    h[i] = pt.x[i] * pt.y[i] - t * params.a[i];
    h[n + i] = pt.y[i] - (1.0 - t) * f[i] - t * params.b[i];
  }
  return h;
}

Matrix jacobian_z(const TcpProblem& p, const HomotopyPoint& pt) {
  const int n = p.dim();
  if (pt.x.size() != n || pt.y.size() != n)
    throw std::invalid_argument("homotopy point size != problem dimension");
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  j.topLeftCorner(n, n) = pt.y.asDiagonal();
  j.topRightCorner(n, n) = pt.x.asDiagonal();
  j.bottomLeftCorner(n, n) =
      -(1.0 - pt.t) * jacobian_of_map(p.tensor(), pt.x);
  j.bottomRightCorner(n, n) = Matrix::Identity(n, n);
  return j;
}

Vector jacobian_t(const TcpProblem& p, const HomotopyParams& params,
                  const HomotopyPoint& pt) {
  const int n = p.dim();
  if (pt.x.size() != n || params.a.size() != n)
    throw std::invalid_argument("homotopy point size != problem dimension");
  Vector d(2 * n);
  d.head(n) = -params.a;
  d.tail(n) = p.map(pt.x) - params.b;
  return d;
}

}  // namespace tcpsolve
