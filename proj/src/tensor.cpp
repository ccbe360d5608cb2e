#include "tcpsolve/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tcpsolve {

namespace {

std::size_t pow_size(int base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= static_cast<std::size_t>(base);
  return r;
}

// Advance a 0-based index tuple in lexicographic order; returns false after
// the last tuple.
bool next_tuple(std::vector<int>& idx, int n) {
  for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
    if (++idx[pos] < n) return true;
    idx[pos] = 0;
  }
  return false;
}

}  // namespace

struct DenseTensor::SymCache {
  std::once_flag once;
  std::unique_ptr<SemiSymmetricTensor> sym;
};

DenseTensor::DenseTensor(int order, int dim, std::vector<double> values)
    : order_(order), dim_(dim), values_(std::move(values)),
      cache_(std::make_shared<SymCache>()) {
  if (order_ < 2) throw std::invalid_argument("tensor order must be >= 2");
  if (dim_ < 1) throw std::invalid_argument("tensor dimension must be >= 1");
  if (values_.size() != pow_size(dim_, order_)) {
    std::ostringstream os;
    os << "tensor value array has length " << values_.size() << ", expected "
       << pow_size(dim_, order_);
    throw std::invalid_argument(os.str());
  }
}

DenseTensor DenseTensor::zeros(int order, int dim) {
  return DenseTensor(order, dim, std::vector<double>(pow_size(dim, order), 0.0));
}

DenseTensor DenseTensor::from_entries(
    int order, int dim,
    const std::vector<std::pair<std::vector<int>, double>>& entries) {
  DenseTensor t = zeros(order, dim);
  std::vector<bool> seen(t.values_.size(), false);
  for (const auto& [idx, val] : entries) {
    if (static_cast<int>(idx.size()) != order)
      throw std::invalid_argument("entry index tuple length != tensor order");
    for (int i : idx)
      if (i < 0 || i >= dim)
        throw std::invalid_argument("entry index out of range");
    std::size_t f = t.flat(idx);
    if (seen[f]) throw std::invalid_argument("duplicate entry index tuple");
    seen[f] = true;
    t.values_[f] = val;
  }
  return t;
}

std::size_t DenseTensor::flat(std::span<const int> index) const {
  std::size_t f = 0;
  for (int i : index) f = f * static_cast<std::size_t>(dim_) + i;
  return f;
}

double DenseTensor::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

const SemiSymmetricTensor& DenseTensor::semi_symmetric() const {
  std::call_once(cache_->once, [this] {
    cache_->sym = std::make_unique<SemiSymmetricTensor>(semi_symmetrize(*this));
  });
  return *cache_->sym;
}

Vector contract_to_vector(const DenseTensor& a, const Vector& x) {
  const int n = a.dim();
  const int m = a.order();
  if (x.size() != n)
    throw std::invalid_argument("contract_to_vector: x length != tensor dim");
  const std::size_t block = a.values().size() / n;  // n^{m-1}
  const auto& v = a.values();
  Vector out = Vector::Zero(n);
  std::vector<int> tup(m - 1, 0);
  std::size_t t = 0;
  do {
    double prod = 1.0;
    for (int k : tup) prod *= x[k];
    for (int i = 0; i < n; ++i) out[i] += v[i * block + t] * prod;
    ++t;
  } while (next_tuple(tup, n));
  return out;
}

SemiSymmetricTensor semi_symmetrize(const DenseTensor& a) {
  const int n = a.dim();
  const int m = a.order();
  const std::size_t block = a.values().size() / n;  // n^{m-1}
  const auto& v = a.values();
  std::vector<double> out(v.size());

  struct Acc {
    double sum = 0.0;
    long count = 0;
    double first = 0.0;
    bool all_equal = true;
  };

  // First pass: accumulate per sorted-tuple class (lexicographic visit order).
  for (int i = 0; i < n; ++i) {
    std::map<std::vector<int>, Acc> classes;
    std::vector<int> tup(m - 1, 0);
    std::size_t t = 0;
    do {
      std::vector<int> key = tup;
      std::sort(key.begin(), key.end());
      double val = v[i * block + t];
      auto [it, inserted] = classes.try_emplace(key);
      Acc& acc = it->second;
      if (inserted) {
        acc.first = val;
      } else if (val != acc.first) {
        acc.all_equal = false;
      }
      acc.sum += val;
      ++acc.count;
      ++t;
    } while (next_tuple(tup, n));

    // Second pass: write the class mean to every member position.
    tup.assign(m - 1, 0);
    t = 0;
    do {
      std::vector<int> key = tup;
      std::sort(key.begin(), key.end());
      const Acc& acc = classes.at(key);
      out[i * block + t] =
          acc.all_equal ? acc.first : acc.sum / static_cast<double>(acc.count);
      ++t;
    } while (next_tuple(tup, n));
  }

  return SemiSymmetricTensor(DenseTensor(m, n, std::move(out)));
}

Matrix contract_to_matrix(const SemiSymmetricTensor& ahat, const Vector& x) {
  const int n = ahat.dim();
  const int m = ahat.order();
  if (x.size() != n)
    throw std::invalid_argument("contract_to_matrix: x length != tensor dim");
  const auto& v = ahat.tensor().values();
  Matrix out = Matrix::Zero(n, n);
  if (m == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) = v[static_cast<std::size_t>(i) * n + j];
    return out;
  }
  const std::size_t block = pow_size(n, m - 2);
  std::vector<int> tup(m - 2, 0);
  std::size_t t = 0;
  do {
    double prod = 1.0;
    for (int k : tup) prod *= x[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) += v[(static_cast<std::size_t>(i) * n + j) * block + t] * prod;
    ++t;
  } while (next_tuple(tup, n));
  return out;
}

Matrix jacobian_of_map(const DenseTensor& a, const Vector& x) {
  return (a.order() - 1) * contract_to_matrix(a.semi_symmetric(), x);
}

}  // namespace tcpsolve
