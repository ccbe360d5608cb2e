#pragma once

#include "tcpsolve/benchmarks.hpp"
#include "tcpsolve/tensor.hpp"

#include <random>

namespace tcptest {

using tcpsolve::DenseTensor;
using tcpsolve::Matrix;
using tcpsolve::Vector;

inline Vector vec(std::initializer_list<double> vals) {
  Vector v(static_cast<int>(vals.size()));
  int i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

inline DenseTensor random_tensor(int order, int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::size_t len = 1;
  for (int k = 0; k < order; ++k) len *= dim;
  std::vector<double> vals(len);
  for (double& v : vals) v = dist(rng);
  return DenseTensor(order, dim, std::move(vals));
}

inline Vector random_vector(int dim, std::mt19937_64& rng, double lo = -1.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = dist(rng);
  return v;
}

// Central finite differences of x -> A x^{m-1}.
inline Matrix fd_jacobian(const DenseTensor& a, const Vector& x) {
  const int n = a.dim();
  const double h = 1e-6 * std::max(1.0, x.lpNorm<Eigen::Infinity>());
  Matrix j(n, n);
  for (int c = 0; c < n; ++c) {
    Vector xp = x, xm = x;
    xp[c] += h;
    xm[c] -= h;
    j.col(c) =
        (contract_to_vector(a, xp) - contract_to_vector(a, xm)) / (2.0 * h);
  }
  return j;
}

}  // namespace tcptest
