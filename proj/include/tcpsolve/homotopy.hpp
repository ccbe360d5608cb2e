#pragma once

#include "tcpsolve/problem.hpp"

namespace tcpsolve {

/// Deformation parameters a >= 0 (strictly positive unless allow_zero_a)
/// and b > 0.
struct HomotopyParams {
  Vector a;
  Vector b;
  bool allow_zero_a = false;  // experimental relaxed mode

  static HomotopyParams ones(int n) {
    return {Vector::Ones(n), Vector::Ones(n), false};
  }
};

/// Throws on invalid parameters (b must be > 0; a must be > 0, or >= 0 in
/// relaxed mode).
void validate(const HomotopyParams& params);

/// One point on the continuation path.
struct HomotopyPoint {
  Vector x;
  Vector y;
  double t = 1.0;

  Vector z() const {
    Vector v(x.size() + y.size());
    v << x, y;
    return v;
  }
};

inline HomotopyPoint split_z(const Vector& z, double t) {
  const int n = static_cast<int>(z.size()) / 2;
  return {z.head(n), z.tail(n), t};
}

/// (x0, y0, t) = (a./b, b, 1); H vanishes there by construction.
HomotopyPoint start_point(const HomotopyParams& params);

/// H(x,y,t) = [x.*y - t a ; y - (1-t)(A x^{m-1} + q) - t b].
/// At t == 0 this coincides bitwise with reformulation_residual_vector.
Vector evaluate_h(const TcpProblem& p, const HomotopyParams& params,
                  const HomotopyPoint& pt);

/// D_z H = [diag(y), diag(x); -(1-t)(m-1) Ahat x^{m-2}, I].
Matrix jacobian_z(const TcpProblem& p, const HomotopyPoint& pt);

/// D_t H = [-a ; A x^{m-1} + q - b].
Vector jacobian_t(const TcpProblem& p, const HomotopyParams& params,
                  const HomotopyPoint& pt);

}  // namespace tcpsolve
