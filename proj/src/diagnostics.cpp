#include "tcpsolve/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace tcpsolve {

std::string to_string(TensorProperty p) {
  switch (p) {
    case TensorProperty::strictly_semi_positive: return "strictly_semi_positive";
    case TensorProperty::p_function: return "p_function";
    case TensorProperty::p0_function: return "p0_function";
    case TensorProperty::monotone: return "monotone";
  }
  return "unknown";
}

namespace {

double sphere_objective(const DenseTensor& a, const Vector& x) {
  Vector f = contract_to_vector(a, x);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i) best = std::max(best, x[i] * f[i]);
  return best;
}

// Recursive grid over the free coordinates of one face of the nonnegative
// inf-norm unit sphere.
void grid_face(const DenseTensor& a, Vector& x, const std::vector<int>& free,
               std::size_t pos, int grid_per_axis, double& best_val,
               Vector& best_x) {
  if (pos == free.size()) {
    double v = sphere_objective(a, x);
    if (v < best_val) {
      best_val = v;
      best_x = x;
    }
    return;
  }
  for (int j = 0; j < grid_per_axis; ++j) {
    x[free[pos]] = static_cast<double>(j) / (grid_per_axis - 1);
    grid_face(a, x, free, pos + 1, grid_per_axis, best_val, best_x);
  }
}

}  // namespace

std::pair<double, Vector> estimate_beta(const DenseTensor& a, int grid_per_axis,
                                        int refine_iters) {
  if (grid_per_axis < 2)
    throw std::invalid_argument("grid_per_axis must be >= 2");
  const int n = a.dim();
  double best_val = std::numeric_limits<double>::infinity();
  Vector best_x;
  std::vector<int> best_free;

  // Each nonempty coordinate subset fixed to 1 is one face of the sphere.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Vector x = Vector::Zero(n);
    std::vector<int> free;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i))
        x[i] = 1.0;
      else
        free.push_back(i);
    }
    double face_best = std::numeric_limits<double>::infinity();
    Vector face_x = x;
    grid_face(a, x, free, 0, grid_per_axis, face_best, face_x);
    if (face_best < best_val) {
      best_val = face_best;
      best_x = face_x;
      best_free = free;
    }
  }

  // Coordinate descent on the free coordinates of the winning face; only
  // improvements are accepted, so more refinement never raises the estimate.
  double width = 0.5;
  const int scan = 11;
  for (int it = 0; it < refine_iters; ++it) {
    for (int c : best_free) {
      double lo = std::max(0.0, best_x[c] - width);
      double hi = std::min(1.0, best_x[c] + width);
      double keep = best_x[c];
      double local_best = best_val;
      double local_arg = keep;
      for (int j = 0; j < scan; ++j) {
        double v = lo + (hi - lo) * static_cast<double>(j) / (scan - 1);
        best_x[c] = v;
        double obj = sphere_objective(a, best_x);
        if (obj < local_best) {
          local_best = obj;
          local_arg = v;
        }
      }
      best_x[c] = local_arg;
      best_val = local_best;
    }
    width *= 0.6;
  }
  return {best_val, best_x};
}

double property_margin(const DenseTensor& a, TensorProperty prop,
                       const Vector& x, const Vector& y) {
  if (prop == TensorProperty::strictly_semi_positive) {
    Vector f = contract_to_vector(a, x);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < x.size(); ++i)
      if (x[i] > 0.0) best = std::max(best, f[i]);
    return best;
  }
  Vector df = contract_to_vector(a, x) - contract_to_vector(a, y);
  switch (prop) {
    case TensorProperty::monotone:
      return (x - y).dot(df);
    case TensorProperty::p_function: {
      double best = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < x.size(); ++i)
        best = std::max(best, (x[i] - y[i]) * df[i]);
      return best;
    }
    case TensorProperty::p0_function: {
      double best = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) best = std::max(best, (x[i] - y[i]) * df[i]);
      return best;
    }
    default:
      break;
  }
  throw std::invalid_argument("unknown tensor property");
}

PropertyCheck sampled_property_check(const DenseTensor& a, const Vector& q,
                                     TensorProperty prop, int samples,
                                     unsigned seed) {
  (void)q;  // cancels in every defining inequality
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int n = a.dim();
  const bool strict = prop == TensorProperty::strictly_semi_positive ||
                      prop == TensorProperty::p_function;
  const double fail_below = strict ? 0.0 : -1e-10;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double scales[3] = {0.1, 1.0, 10.0};

  PropertyCheck res;
  for (int s = 0; s < samples; ++s) {
    ++res.samples_used;
    double r = scales[s % 3];
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = r * unit(rng);

    if (prop == TensorProperty::strictly_semi_positive) {
      if (x.maxCoeff() <= 0.0) continue;
      double m = property_margin(a, prop, x, x);
      if (m <= fail_below) {
        res.pass = false;
        res.witness_x = x;
        res.margin = m;
        return res;
      }
      continue;
    }

    Vector y(n);
    if (s % 2 == 1) {
      // local perturbation pair
      for (int i = 0; i < n; ++i)
        y[i] = std::max(0.0, x[i] + 0.1 * r * (2.0 * unit(rng) - 1.0));
    } else {
      for (int i = 0; i < n; ++i) y[i] = r * unit(rng);
    }
    if (x == y) continue;
    double m = property_margin(a, prop, x, y);
    if (m < fail_below || (strict && m <= fail_below)) {
      res.pass = false;
      res.witness_x = x;
      res.witness_y = y;
      res.margin = m;
      return res;
    }
  }
  return res;
}

StructureReport analyze_structure(const DenseTensor& a, const Vector& q,
                                  int samples, unsigned seed, int grid_per_axis,
                                  int refine_iters) {
  StructureReport rep;
  auto [beta, argmin] = estimate_beta(a, grid_per_axis, refine_iters);
  rep.beta_estimate = beta;
  rep.beta_argmin = argmin;
  rep.ssp = sampled_property_check(a, q, TensorProperty::strictly_semi_positive,
                                   samples, seed);
  rep.p_function =
      sampled_property_check(a, q, TensorProperty::p_function, samples, seed + 1);
  rep.p0_function = sampled_property_check(a, q, TensorProperty::p0_function,
                                           samples, seed + 2);
  rep.monotone =
      sampled_property_check(a, q, TensorProperty::monotone, samples, seed + 3);
  rep.samples_used = samples;
  return rep;
}

}  // namespace tcpsolve
