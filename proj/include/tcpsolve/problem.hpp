#pragma once

#include "tcpsolve/tensor.hpp"

namespace tcpsolve {

/// The complementarity instance: find x >= 0 with y = A x^{m-1} + q >= 0
/// and <x, y> = 0.
class TcpProblem {
 public:
  TcpProblem(DenseTensor tensor, Vector q);

  const DenseTensor& tensor() const { return tensor_; }
  const Vector& q() const { return q_; }
  int dim() const { return tensor_.dim(); }
  int order() const { return tensor_.order(); }

  /// A x^{m-1} + q.
  Vector map(const Vector& x) const;

 private:
  DenseTensor tensor_;
  Vector q_;
};

struct CandidatePair {
  Vector x;
  Vector y;
};

/// The 2n residual vector [x.*y ; y - (A x^{m-1} + q)] of the equivalent
/// equation form. Uses the candidate's stored y.
Vector reformulation_residual_vector(const TcpProblem& p, const CandidatePair& c);

/// 2-norm of reformulation_residual_vector.
double reformulation_residual(const TcpProblem& p, const CandidatePair& c);

/// Snap small coordinates of x to exactly zero when doing so does not worsen
/// the reformulation residual (y is recomputed after every accepted snap).
/// Near a solution with a degenerate zero component (x_i = y_i = 0 with a
/// flat residual in the i-th direction) the residual only pins x_i down to
/// roughly residual^(1/(m-1)); snapping recovers the exact face. Genuinely
/// positive components are never snapped because zeroing them makes the
/// residual jump. `residual_slack` additionally accepts snaps whose residual
/// stays below that absolute level.
CandidatePair purify(const TcpProblem& p, Vector x, double snap_threshold,
                     double residual_slack = 0.0);

struct SolutionReport {
  bool ok = false;
  bool x_nonnegative = false;
  bool y_nonnegative = false;
  bool complementary = false;
  double min_x = 0.0;
  double min_y = 0.0;
  double complementarity = 0.0;  // <x, A x^{m-1} + q>
};

/// Judge x against the complementarity problem itself: y is recomputed from
/// x, nonnegativity is checked to -tol, and |<x,y>| to a tolerance scaled by
/// (1+|x|_inf)(1+|q|_inf).
SolutionReport is_solution(const TcpProblem& p, const Vector& x, double tol);

}  // namespace tcpsolve
