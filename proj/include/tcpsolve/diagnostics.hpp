#pragma once

#include "tcpsolve/problem.hpp"

#include <utility>

namespace tcpsolve {

enum class TensorProperty {
  strictly_semi_positive,
  p_function,
  p0_function,
  monotone,
};

std::string to_string(TensorProperty p);

/// Grid-plus-refinement estimate of
///   beta(A) = min over {x >= 0, |x|_inf = 1} of max_i x_i (A x^{m-1})_i.
/// The nonnegative inf-norm unit sphere is covered by fixing each coordinate
/// subset to 1 and gridding the rest in [0,1]; the best grid point is then
/// refined by coordinate descent. The returned value never lies below the
/// true minimum's certified side: it is an upper bound on beta(A).
/// Returns (estimate, argmin with |argmin|_inf == 1).
std::pair<double, Vector> estimate_beta(const DenseTensor& a,
                                        int grid_per_axis = 33,
                                        int refine_iters = 40);

/// Signed satisfaction margin of a property at (x, y); nonnegative means the
/// defining inequality holds at this pair (strictly positive for the strict
/// properties). Used both by the sampler and to replay reported witnesses.
/// strictly_semi_positive ignores y and q.
double property_margin(const DenseTensor& a, TensorProperty prop,
                       const Vector& x, const Vector& y);

struct PropertyCheck {
  bool pass = true;
  Vector witness_x;  // empty on pass
  Vector witness_y;  // empty on pass or for strictly_semi_positive
  double margin = 0.0;
  int samples_used = 0;
};

/// Randomized search for a counterexample: nonnegative vectors (and pairs)
/// drawn componentwise uniform on [0, R] with R cycling through
/// {0.1, 1, 10}; every other pair is a local perturbation to probe the
/// near-diagonal region. A pass is evidence only; a fail carries a
/// replayable witness.
PropertyCheck sampled_property_check(const DenseTensor& a, const Vector& q,
                                     TensorProperty prop, int samples,
                                     unsigned seed);

struct StructureReport {
  double beta_estimate = 0.0;
  Vector beta_argmin;
  PropertyCheck ssp;
  PropertyCheck p_function;
  PropertyCheck p0_function;
  PropertyCheck monotone;
  int samples_used = 0;
};

StructureReport analyze_structure(const DenseTensor& a, const Vector& q,
                                  int samples = 10000, unsigned seed = 0,
                                  int grid_per_axis = 33, int refine_iters = 40);

}  // namespace tcpsolve
