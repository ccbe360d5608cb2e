#include "tcpsolve/benchmarks.hpp"

#include <stdexcept>

namespace tcpsolve::benchmarks {

namespace {

using Entries = std::vector<std::pair<std::vector<int>, double>>;

DenseTensor make_tensor(int id) {
  switch (id) {
    case 1:
      // 0-based index tuples
      return DenseTensor::from_entries(3, 2,
                                       Entries{{{0, 0, 0}, 1.0},
                                               {{0, 1, 0}, 1.0},
                                               {{0, 1, 1}, -1.0},
                                               {{1, 1, 1}, 1.0},
                                               {{1, 0, 0}, -1.0},
                                               {{1, 1, 0}, 1.0}});
    case 2:
      return DenseTensor::from_entries(4, 2,
                                       Entries{{{0, 0, 0, 0}, 1.0},
                                               {{0, 1, 1, 1}, -1.0},
                                               {{0, 0, 1, 1}, 1.0},
                                               {{1, 1, 1, 1}, 1.0},
                                               {{1, 0, 0, 0}, -1.0},
                                               {{1, 1, 0, 0}, 1.0}});
    case 3: {
      Entries e;
      for (int k = 0; k < 3; ++k)
        e.push_back({{k, k, k, k, k}, static_cast<double>(k + 1)});
      return DenseTensor::from_entries(5, 3, e);
    }
    case 4:
      return DenseTensor::from_entries(3, 2,
                                       Entries{{{0, 0, 0}, 1.0},
                                               {{0, 1, 0}, 2.0},
                                               {{0, 1, 1}, 1.0},
                                               {{1, 1, 1}, 1.0},
                                               {{1, 0, 0}, -1.0},
                                               {{1, 1, 0}, -1.0}});
    default:
      throw std::invalid_argument("benchmark tensor id must be in 1..4");
  }
}

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

}  // namespace

const DenseTensor& tensor(int id) {
  static const DenseTensor t1 = make_tensor(1);
  static const DenseTensor t2 = make_tensor(2);
  static const DenseTensor t3 = make_tensor(3);
  static const DenseTensor t4 = make_tensor(4);
  switch (id) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    default: throw std::invalid_argument("benchmark tensor id must be in 1..4");
  }
}

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {1, vec2(-5, -3), vec2(2.1286, 1.8792)},
      {1, vec2(-5, 3), vec2(2.0582, 0.4859)},
      {1, vec2(5, 3), vec2(0, 0)},
      {1, vec2(0, 3), vec2(0, 0)},
      {1, vec2(2, -3), vec2(0.3103, 1.6113)},
      {1, vec2(0, -5), vec2(1.2430, 2.0112)},

      {2, vec2(-5, -3), vec2(1.6678, 1.5096)},
      {2, vec2(-5, 3), vec2(1.6714, 0.5409)},
      {2, vec2(5, 3), vec2(0, 0)},
      {2, vec2(0, 3), vec2(0, 0)},
      {2, vec2(2, -3), vec2(0.3906, 1.4167)},
      {2, vec2(0, -5), vec2(1.1143, 1.6331)},

      {3, vec3(1, 2, 3), vec3(0, 0, 0)},
      {3, vec3(1, -2, 3), vec3(0, 1, 0)},
      {3, vec3(-3, -2, -3), vec3(1.3161, 1, 1)},
      {3, vec3(3, 3, 3), vec3(0, 0, 0)},
      {3, vec3(-3, -1, -2), vec3(1.3161, 0.8409, 0.9036)},
      {3, vec3(0, -1, -2), vec3(0, 0.8409, 0.9036)},

      {4, vec2(-5, -3), vec2(0.3127, 1.9233)},
      {4, vec2(-5, 3), vec2(1.5513, 0.6847)},
      {4, vec2(5, 3), vec2(0, 0)},
      {4, vec2(0, 3), vec2(0, 0)},
      {4, vec2(2, -3), vec2(0, 1.7321)},
      {4, vec2(0, -5), vec2(0, 2.2361)},
  };
  return rows;
}

}  // namespace tcpsolve::benchmarks
