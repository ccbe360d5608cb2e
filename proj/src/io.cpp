#include "tcpsolve/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <vector>

namespace tcpsolve::io {

using nlohmann::json;

namespace {

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vector vector_from_json(const json& arr, const char* field) {
  if (!arr.is_array()) throw ParseError(std::string(field) + " must be an array");
  Vector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number())
      throw ParseError(std::string(field) + "[" + std::to_string(i) +
                       "] is not a number");
    v[i] = arr[i].get<double>();
  }
  return v;
}

}  // namespace

TcpProblem problem_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("problem file root must be an object");
  for (const char* key : {"m", "n", "entries", "q"})
    if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    throw ParseError("m and n must be integers");
  const int m = j["m"].get<int>();
  const int n = j["n"].get<int>();
  if (m < 2) throw ParseError("m must be >= 2");
  if (n < 1) throw ParseError("n must be >= 1");

  if (!j["entries"].is_array()) throw ParseError("entries must be an array");
  std::vector<std::pair<std::vector<int>, double>> entries;
  std::size_t pos = 0;
  for (const auto& e : j["entries"]) {
    std::string where = "entries[" + std::to_string(pos++) + "]";
    if (!e.is_object() || !e.contains("idx") || !e.contains("val"))
      throw ParseError(where + " must be an object with idx and val");
    if (!e["idx"].is_array() || e["idx"].size() != static_cast<std::size_t>(m))
      throw ParseError(where + ".idx must be an array of length m");
    std::vector<int> idx;
    for (const auto& component : e["idx"]) {
      if (!component.is_number_integer())
        throw ParseError(where + ".idx entries must be integers");
      int one_based = component.get<int>();
      if (one_based < 1 || one_based > n)
        throw ParseError(where + ".idx value " + std::to_string(one_based) +
                         " out of range [1, " + std::to_string(n) + "]");
      idx.push_back(one_based - 1);
    }
    if (!e["val"].is_number()) throw ParseError(where + ".val must be a number");
    entries.emplace_back(std::move(idx), e["val"].get<double>());
  }

  Vector q = vector_from_json(j["q"], "q");
  if (q.size() != n) throw ParseError("q length does not equal n");

  try {
    return TcpProblem(DenseTensor::from_entries(m, n, entries), std::move(q));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

TcpProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  return problem_from_json(j);
}

json problem_to_json(const TcpProblem& p) {
  const DenseTensor& t = p.tensor();
  const int m = t.order();
  const int n = t.dim();
  json entries = json::array();
  std::vector<int> idx(m, 0);
  bool more = true;
  while (more) {
    double v = t(idx);
    if (v != 0.0) {
      json one_based = json::array();
      for (int i : idx) one_based.push_back(i + 1);
      entries.push_back({{"idx", one_based}, {"val", v}});
    }
    more = false;
    for (int posn = m - 1; posn >= 0; --posn) {
      if (++idx[posn] < n) {
        more = true;
        break;
      }
      idx[posn] = 0;
    }
  }
  return json{{"m", m}, {"n", n}, {"entries", entries},
              {"q", vector_to_json(p.q())}};
}

void save_problem(const TcpProblem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << problem_to_json(p).dump(2) << "\n";
}

json report_to_json(const TraceResult& result, const TracerConfig& cfg,
                    double wall_seconds, bool include_trace) {
  json config = {
      {"a", vector_to_json(cfg.params.a)},
      {"b", vector_to_json(cfg.params.b)},
      {"dt0", cfg.dt0},
      {"eps1", cfg.eps1},
      {"eps2", cfg.eps2},
      {"dt_min", cfg.dt_min},
      {"dt_max", cfg.dt_max},
      {"max_newton_per_step", cfg.max_newton_per_step},
      {"final_newton_budget", cfg.final_newton_budget},
      {"max_steps", cfg.max_steps},
  };
  if (cfg.guard_radius) config["guard_radius"] = *cfg.guard_radius;
  if (cfg.beta_estimate) config["beta_estimate"] = *cfg.beta_estimate;

  json rep = {
      {"solution", vector_to_json(result.solution.x)},
      {"y", vector_to_json(result.solution.y)},
      {"residue", result.residue},
      {"itr", result.itr},
      {"nwtitr", result.nwtitr},
      {"status", to_string(result.status)},
      {"config", config},
      {"wall_seconds", wall_seconds},
  };
  if (include_trace) {
    json steps = json::array();
    for (const auto& s : result.steps)
      steps.push_back({{"t", s.t},
                       {"dt", s.dt},
                       {"newton_iters", s.newton_iters},
                       {"h_norm", s.h_norm},
                       {"x_inf", s.x_inf}});
    rep["trace"] = steps;
  }
  return rep;
}

}  // namespace tcpsolve::io
