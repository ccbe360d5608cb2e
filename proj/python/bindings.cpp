#include "tcpsolve/benchmarks.hpp"
#include "tcpsolve/diagnostics.hpp"
#include "tcpsolve/oracle.hpp"
#include "tcpsolve/tracer.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tcpsolve;

namespace {

TracerConfig config_from_kwargs(int n, double dt0, double eps1, double eps2,
                                int max_steps,
                                std::optional<Vector> a,
                                std::optional<Vector> b) {
  TracerConfig cfg = TracerConfig::defaults(n);
  cfg.dt0 = dt0;
  cfg.eps1 = eps1;
  cfg.eps2 = eps2;
  cfg.max_steps = max_steps;
  if (a) cfg.params.a = *a;
  if (b) cfg.params.b = *b;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(tcpsolve, m) {
  m.doc() = "Homotopy continuation solver for tensor complementarity problems";

  py::class_<DenseTensor>(m, "DenseTensor")
      .def(py::init<int, int, std::vector<double>>(), py::arg("order"),
           py::arg("dim"), py::arg("values"))
      .def_static("from_entries", &DenseTensor::from_entries, py::arg("order"),
                  py::arg("dim"), py::arg("entries"),
                  "Sparse construction from 0-based (index tuple, value) pairs")
      .def_property_readonly("order", &DenseTensor::order)
      .def_property_readonly("dim", &DenseTensor::dim)
      .def_property_readonly("values", &DenseTensor::values);

  py::class_<TcpProblem>(m, "TcpProblem")
      .def(py::init<DenseTensor, Vector>(), py::arg("tensor"), py::arg("q"))
      .def_property_readonly("tensor", &TcpProblem::tensor)
      .def_property_readonly("q", &TcpProblem::q)
      .def_property_readonly("dim", &TcpProblem::dim)
      .def_property_readonly("order", &TcpProblem::order)
      .def("map", &TcpProblem::map, py::arg("x"), "A x^{m-1} + q");

  m.def("contract", &contract_to_vector, py::arg("tensor"), py::arg("x"),
        "A x^{m-1}");
  m.def(
      "semi_symmetrize",
      [](const DenseTensor& a) { return semi_symmetrize(a).tensor(); },
      py::arg("tensor"));
  m.def("jacobian", &jacobian_of_map, py::arg("tensor"), py::arg("x"),
        "Jacobian of x -> A x^{m-1}");
  m.def(
      "residual",
      [](const TcpProblem& p, const Vector& x, const Vector& y) {
        return reformulation_residual(p, {x, y});
      },
      py::arg("problem"), py::arg("x"), py::arg("y"));
  m.def(
      "is_solution",
      [](const TcpProblem& p, const Vector& x, double tol) {
        return is_solution(p, x, tol).ok;
      },
      py::arg("problem"), py::arg("x"), py::arg("tol") = 1e-8);

  m.def(
      "solve",
      [](const TcpProblem& p, double dt0, double eps1, double eps2,
         int max_steps, std::optional<Vector> a, std::optional<Vector> b) {
        TraceResult res = trace(
            p, config_from_kwargs(p.dim(), dt0, eps1, eps2, max_steps, a, b));
        py::dict d;
        d["x"] = res.solution.x;
        d["y"] = res.solution.y;
        d["residue"] = res.residue;
        d["itr"] = res.itr;
        d["nwtitr"] = res.nwtitr;
        d["status"] = to_string(res.status);
        return d;
      },
      py::arg("problem"), py::arg("dt0") = 0.1, py::arg("eps1") = 1e-5,
      py::arg("eps2") = 1e-12, py::arg("max_steps") = 1000,
      py::arg("a") = std::nullopt, py::arg("b") = std::nullopt,
      "Trace the homotopy path from t=1 to t=0");

  m.def(
      "brute_force",
      [](const TcpProblem& p, double tol) {
        std::vector<Vector> xs;
        for (const auto& s : solve_brute_force(p, tol)) xs.push_back(s.x);
        return xs;
      },
      py::arg("problem"), py::arg("tol") = 1e-8,
      "All verified solutions of a small instance (n <= 3)");

  m.def(
      "estimate_beta",
      [](const DenseTensor& a, int grid, int refine) {
        return estimate_beta(a, grid, refine);
      },
      py::arg("tensor"), py::arg("grid_per_axis") = 33,
      py::arg("refine_iters") = 40);

  m.def("benchmark_tensor", &benchmarks::tensor, py::arg("id"),
        "Built-in benchmark tensor, id in 1..4");
}
