#pragma once

#include "tcpsolve/tensor.hpp"

#include <vector>

namespace tcpsolve::benchmarks {

/// The four built-in benchmark tensors, id in 1..4:
///   1: order 3, dim 2, strong strictly semi-positive
///   2: order 4, dim 2, P tensor, strong strictly semi-positive
///   3: order 5, dim 3, diagonal (k on the diagonal)
///   4: order 3, dim 2, strictly semi-positive but not P0 / monotone
const DenseTensor& tensor(int id);

struct ReferenceRow {
  int tensor_id;
  Vector q;
  Vector expected_x;  // reference solution, 4 decimals
};

/// The 24 reference runs (6 shift vectors per tensor) with their known
/// solutions; the default tracer configuration must reproduce each to 1e-3.
const std::vector<ReferenceRow>& reference_rows();

}  // namespace tcpsolve::benchmarks
