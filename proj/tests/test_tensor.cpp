#include "tcpsolve/tensor.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <array>
#include <random>

using namespace tcpsolve;
using tcptest::vec;

namespace {

double entry(const DenseTensor& t, std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return t(v);
}

}  // namespace

TEST_CASE("contract_to_vector on known tensors") {
  const DenseTensor& a4 = benchmarks::tensor(4);
  Vector r = contract_to_vector(a4, vec({1, 2}));
  CHECK(r[0] == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-14));

  const DenseTensor& a1 = benchmarks::tensor(1);
  Vector r1 = contract_to_vector(a1, vec({1, 1}));
  CHECK(r1[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r1[1] == doctest::Approx(1.0).epsilon(1e-14));

  // zero vector kills every monomial exactly
  Vector z = contract_to_vector(a1, vec({0, 0}));
  CHECK(z[0] == 0.0);
  CHECK(z[1] == 0.0);
}

TEST_CASE("contract_to_vector rejects dimension mismatch") {
  CHECK_THROWS_AS(contract_to_vector(benchmarks::tensor(1), vec({1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("semi_symmetrize averages trailing-index classes") {
  SemiSymmetricTensor ahat = semi_symmetrize(benchmarks::tensor(1));
  // class {(0,1),(1,0)} of row 0: (0 + 1)/2
  CHECK(entry(ahat.tensor(), {0, 0, 1}) == 0.5);
  CHECK(entry(ahat.tensor(), {0, 1, 0}) == 0.5);
  CHECK(entry(ahat.tensor(), {0, 0, 0}) == 1.0);
  CHECK(entry(ahat.tensor(), {0, 1, 1}) == -1.0);
}

TEST_CASE("semi_symmetrize leaves diagonal tensors unchanged") {
  const DenseTensor& a3 = benchmarks::tensor(3);
  SemiSymmetricTensor ahat = semi_symmetrize(a3);
  CHECK(ahat.tensor().values() == a3.values());
}

TEST_CASE("semi_symmetrize of a symmetric tensor is the identity") {
  std::mt19937_64 rng(7);
  DenseTensor a = tcptest::random_tensor(3, 3, rng);
  DenseTensor s = semi_symmetrize(a).tensor();
  DenseTensor s2 = semi_symmetrize(s).tensor();
  CHECK(s2.values() == s.values());  // bitwise idempotent
}

TEST_CASE("semi_symmetrize preserves the polynomial map") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 3 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 3);
    DenseTensor a = tcptest::random_tensor(m, n, rng);
    Vector x = tcptest::random_vector(n, rng);
    Vector va = contract_to_vector(a, x);
    Vector vs = contract_to_vector(semi_symmetrize(a).tensor(), x);
    double scale = 1.0 + a.max_abs() *
                             std::pow(x.lpNorm<Eigen::Infinity>(), m - 1);
    CHECK((va - vs).lpNorm<Eigen::Infinity>() <= 1e-12 * scale);
  }
}

TEST_CASE("contract_to_matrix on known tensors") {
  SemiSymmetricTensor a3hat = semi_symmetrize(benchmarks::tensor(3));
  Matrix m3 = contract_to_matrix(a3hat, vec({1, 1, 1}));
  Matrix expected = Matrix::Zero(3, 3);
  expected.diagonal() << 1, 2, 3;
  CHECK((m3 - expected).lpNorm<Eigen::Infinity>() <= 1e-14);

  SemiSymmetricTensor a1hat = semi_symmetrize(benchmarks::tensor(1));
  Matrix m1 = contract_to_matrix(a1hat, vec({1, 0}));
  CHECK(m1(0, 0) == doctest::Approx(1.0));
  CHECK(m1(0, 1) == doctest::Approx(0.5));
  CHECK(m1(1, 0) == doctest::Approx(-1.0));
  CHECK(m1(1, 1) == doctest::Approx(0.5));

  // m >= 3 at x = 0: every monomial has a zero factor
  Matrix z = contract_to_matrix(a1hat, vec({0, 0}));
  CHECK(z.lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("jacobian_of_map matches hand values and finite differences") {
  const DenseTensor& a3 = benchmarks::tensor(3);
  Matrix j = jacobian_of_map(a3, vec({1, 1, 1}));
  Matrix expected = Matrix::Zero(3, 3);
  expected.diagonal() << 4, 8, 12;
  CHECK((j - expected).lpNorm<Eigen::Infinity>() <= 1e-12);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 3 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 3);
    DenseTensor a = tcptest::random_tensor(m, n, rng);
    Vector x = tcptest::random_vector(n, rng, 0.2, 1.5);
    Matrix exact = jacobian_of_map(a, x);
    Matrix fd = tcptest::fd_jacobian(a, x);
    double denom = std::max(1.0, exact.lpNorm<Eigen::Infinity>());
    CHECK((exact - fd).lpNorm<Eigen::Infinity>() / denom <= 1e-6);
  }
}

TEST_CASE("directional derivative along x matches the row sums") {
  // d/ds A(s x)^{m-1} at s=1 equals (m-1) A x^{m-1}; with x = ones this is
  // the Jacobian row sums.
  const DenseTensor& a2 = benchmarks::tensor(2);
  Vector x = vec({1, 1});
  Matrix j = jacobian_of_map(a2, x);
  Vector row_sums = j * x;
  double h = 1e-6;
  Vector fd = (contract_to_vector(a2, (1.0 + h) * x) -
               contract_to_vector(a2, (1.0 - h) * x)) /
              (2.0 * h);
  CHECK((row_sums - fd).lpNorm<Eigen::Infinity>() <= 1e-6);
}

TEST_CASE("contraction is degree m-1 homogeneous") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 3 + static_cast<int>(rng() % 3);
    int n = 2 + static_cast<int>(rng() % 3);
    DenseTensor a = tcptest::random_tensor(m, n, rng);
    Vector x = tcptest::random_vector(n, rng);
    double s = tcptest::random_vector(1, rng, 0.25, 2.0)[0];
    Vector lhs = contract_to_vector(a, s * x);
    Vector rhs = std::pow(s, m - 1) * contract_to_vector(a, x);
    double scale = 1.0 + rhs.lpNorm<Eigen::Infinity>();
    CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() <= 1e-12 * scale);
  }
}

TEST_CASE("constructor validates shape") {
  CHECK_THROWS_AS(DenseTensor(3, 2, std::vector<double>(7, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(DenseTensor(1, 2, std::vector<double>(2, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      DenseTensor::from_entries(3, 2, {{{0, 0, 0}, 1.0}, {{0, 0, 0}, 2.0}}),
      std::invalid_argument);
  CHECK_THROWS_AS(DenseTensor::from_entries(3, 2, {{{0, 2, 0}, 1.0}}),
                  std::invalid_argument);
}
