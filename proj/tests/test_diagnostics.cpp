#include "tcpsolve/diagnostics.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tcpsolve;
using tcptest::vec;

TEST_CASE("beta estimate of the diagonal tensor concentrates on coordinate 1") {
  auto [beta, argmin] = estimate_beta(benchmarks::tensor(3), 17, 20);
  CHECK(beta == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(argmin.lpNorm<Eigen::Infinity>() == 1.0);
  CHECK(argmin[0] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("beta of the identity matrix is 1") {
  DenseTensor eye = DenseTensor::from_entries(2, 3, {{{0, 0}, 1.0},
                                                     {{1, 1}, 1.0},
                                                     {{2, 2}, 1.0}});
  auto [beta, argmin] = estimate_beta(eye, 9, 10);
  CHECK(beta == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(argmin.lpNorm<Eigen::Infinity>() == 1.0);
}

TEST_CASE("strictly semi-positive tensors have positive beta") {
  CHECK(estimate_beta(benchmarks::tensor(4), 17, 20).first > 0.0);
}

TEST_CASE("beta estimate is monotone under refinement") {
  const DenseTensor& a = benchmarks::tensor(1);
  // nested grids: 3-1 | 5-1 | 9-1
  double g3 = estimate_beta(a, 3, 0).first;
  double g5 = estimate_beta(a, 5, 0).first;
  double g9 = estimate_beta(a, 9, 0).first;
  CHECK(g5 <= g3);
  CHECK(g9 <= g5);
  double r0 = estimate_beta(a, 9, 0).first;
  double r5 = estimate_beta(a, 9, 5).first;
  double r20 = estimate_beta(a, 9, 20).first;
  CHECK(r5 <= r0);
  CHECK(r20 <= r5);
}

TEST_CASE("p0 check fails on tensor 4 with a replayable witness") {
  const DenseTensor& a = benchmarks::tensor(4);
  PropertyCheck check = sampled_property_check(
      a, vec({0, 0}), TensorProperty::p0_function, 10000, 42);
  REQUIRE_FALSE(check.pass);
  CHECK(check.samples_used <= 10000);
  double replay =
      property_margin(a, TensorProperty::p0_function, check.witness_x,
                      check.witness_y);
  CHECK(replay == check.margin);
  CHECK(replay < -1e-12);
}

TEST_CASE("monotone check also fails on tensor 4") {
  PropertyCheck check = sampled_property_check(
      benchmarks::tensor(4), vec({0, 0}), TensorProperty::monotone, 10000, 1);
  CHECK_FALSE(check.pass);
  CHECK(check.margin < -1e-12);
}

TEST_CASE("p check passes on tensor 2 over 1e4 pairs") {
  PropertyCheck check = sampled_property_check(
      benchmarks::tensor(2), vec({0, 0}), TensorProperty::p_function, 10000, 3);
  CHECK(check.pass);
  CHECK(check.samples_used == 10000);
}

TEST_CASE("ssp check fails on the zero tensor") {
  DenseTensor zero = DenseTensor::zeros(3, 2);
  PropertyCheck check = sampled_property_check(
      zero, vec({0, 0}), TensorProperty::strictly_semi_positive, 100, 5);
  REQUIRE_FALSE(check.pass);
  CHECK(check.witness_x.maxCoeff() > 0.0);
  CHECK(property_margin(zero, TensorProperty::strictly_semi_positive,
                        check.witness_x, check.witness_x) <= 0.0);
}

TEST_CASE("ssp passes on positive-diagonal tensors with even trailing degree") {
  // diagonal entries k+1, m-1 = 4: x_i (A x^4)_i = (k+1) x_i^5 > 0 on the
  // positive coordinates, so sampling can never find a violation
  PropertyCheck check = sampled_property_check(
      benchmarks::tensor(3), vec({0, 0, 0}),
      TensorProperty::strictly_semi_positive, 2000, 8);
  CHECK(check.pass);
}

TEST_CASE("structure report aggregates all checks") {
  StructureReport rep =
      analyze_structure(benchmarks::tensor(4), vec({0, 0}), 10000, 0, 17, 10);
  CHECK(rep.beta_estimate > 0.0);
  CHECK(rep.ssp.pass);
  CHECK_FALSE(rep.p0_function.pass);
  CHECK_FALSE(rep.monotone.pass);
  CHECK(rep.samples_used == 10000);
}
