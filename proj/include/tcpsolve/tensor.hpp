#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace tcpsolve {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

class SemiSymmetricTensor;

/// Dense order-m, n-dimensional real tensor, flat row-major storage over
/// (i1,...,im). Indices are 0-based here; file formats use 1-based and
/// convert on load. Immutable after construction.
class DenseTensor {
 public:
  DenseTensor(int order, int dim, std::vector<double> values);

  static DenseTensor zeros(int order, int dim);

  /// Build from a sparse entry list (0-based index tuples); unlisted
  /// entries are zero. Throws on out-of-range or duplicate tuples.
  static DenseTensor from_entries(
      int order, int dim,
      const std::vector<std::pair<std::vector<int>, double>>& entries);

  int order() const { return order_; }
  int dim() const { return dim_; }
  const std::vector<double>& values() const { return values_; }

  double operator()(std::span<const int> index) const {
    return values_[flat(index)];
  }

  /// Largest entry magnitude.
  double max_abs() const;

  /// Semi-symmetrized twin, computed once on first use and cached.
  /// Copies of this tensor share the cache.
  const SemiSymmetricTensor& semi_symmetric() const;

  std::size_t flat(std::span<const int> index) const;

 private:
  int order_;
  int dim_;
  std::vector<double> values_;

  struct SymCache;
  std::shared_ptr<SymCache> cache_;
};

/// A tensor whose entries are invariant under permutations of the trailing
/// m-1 indices. Produced by semi_symmetrize(); induces the same polynomial
/// map as the original tensor.
class SemiSymmetricTensor {
 public:
  explicit SemiSymmetricTensor(DenseTensor t) : t_(std::move(t)) {}

  int order() const { return t_.order(); }
  int dim() const { return t_.dim(); }
  const DenseTensor& tensor() const { return t_; }

 private:
  DenseTensor t_;
};

/// (A x^{m-1})_i = sum over (i2..im) of A_{i i2..im} x_{i2}...x_{im}.
/// Summation runs in lexicographic order of the trailing tuple.
Vector contract_to_vector(const DenseTensor& a, const Vector& x);

/// Average each entry over the distinct permutations of its trailing m-1
/// indices. Classes whose members are already bitwise equal are copied
/// through unchanged, so the operation is idempotent.
SemiSymmetricTensor semi_symmetrize(const DenseTensor& a);

/// (Ahat x^{m-2})_{ij} = sum over (i3..im) of Ahat_{i j i3..im} x_{i3}...x_{im}.
/// For m == 2 this is the matrix slice Ahat_{ij}, independent of x.
Matrix contract_to_matrix(const SemiSymmetricTensor& ahat, const Vector& x);

/// Jacobian of x -> A x^{m-1}: (m-1) * (Ahat x^{m-2}), using the cached
/// semi-symmetrized twin.
Matrix jacobian_of_map(const DenseTensor& a, const Vector& x);

}  // namespace tcpsolve
