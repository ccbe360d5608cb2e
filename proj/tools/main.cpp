#include "tcpsolve/benchmarks.hpp"
#include "tcpsolve/diagnostics.hpp"
#include "tcpsolve/io.hpp"
#include "tcpsolve/oracle.hpp"
#include "tcpsolve/tracer.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace tcpsolve;
using nlohmann::json;

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitStalled = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInput = 4;

// "0.5" broadcasts, "1,2,3" is taken elementwise
Vector parse_vector_flag(const std::string& text, int n, const char* flag) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw io::ParseError(std::string(flag) + ": cannot parse '" + item + "'");
    }
  }
  if (vals.size() == 1) return Vector::Constant(n, vals[0]);
  if (static_cast<int>(vals.size()) != n)
    throw io::ParseError(std::string(flag) + ": expected 1 or " +
                         std::to_string(n) + " values");
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = vals[i];
  return v;
}

struct SolveFlags {
  std::string a_text, b_text;
  double dt0 = 0.1, eps1 = 1e-5, eps2 = 1e-12;
  int max_steps = 1000;
  std::optional<double> guard_radius;
  bool with_trace = false;
  bool echo_config = false;
  std::string out;
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--a", f.a_text, "homotopy vector a (scalar broadcast or comma list)");
  cmd->add_option("--b", f.b_text, "homotopy vector b (scalar broadcast or comma list)");
  cmd->add_option("--dt0", f.dt0, "initial step size");
  cmd->add_option("--eps1", f.eps1, "interior corrector tolerance");
  cmd->add_option("--eps2", f.eps2, "final corrector tolerance");
  cmd->add_option("--max-steps", f.max_steps, "prediction step budget");
  cmd->add_option("--guard-radius", f.guard_radius, "divergence guard on |x|_inf");
  cmd->add_flag("--trace", f.with_trace, "include the per-step record stream");
  cmd->add_flag("--echo-config", f.echo_config, "print the effective configuration");
  cmd->add_option("--out", f.out, "write the JSON report here instead of stdout");
}

TracerConfig make_config(const SolveFlags& f, int n) {
  TracerConfig cfg = TracerConfig::defaults(n);
  if (!f.a_text.empty()) cfg.params.a = parse_vector_flag(f.a_text, n, "--a");
  if (!f.b_text.empty()) cfg.params.b = parse_vector_flag(f.b_text, n, "--b");
  cfg.dt0 = f.dt0;
  cfg.eps1 = f.eps1;
  cfg.eps2 = f.eps2;
  cfg.max_steps = f.max_steps;
  cfg.guard_radius = f.guard_radius;
  return cfg;
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw io::ParseError("cannot open output file: " + out_path);
    out << doc.dump(2) << "\n";
  }
}

std::string format_solution(const Vector& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", x[i]);
    os << buf;
  }
  os << "]";
  return os.str();
}

int status_exit_code(TraceStatus s) {
  switch (s) {
    case TraceStatus::converged: return kExitConverged;
    case TraceStatus::guard_tripped: return kExitGuard;
    default: return kExitStalled;
  }
}

int run_solve(const std::string& path, const SolveFlags& flags) {
  TcpProblem p = io::load_problem(path);
  TracerConfig cfg = make_config(flags, p.dim());
  validate(cfg);

  auto t0 = std::chrono::steady_clock::now();
  TraceResult res = trace(p, cfg);
  double wall = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0).count();

  json rep = io::report_to_json(res, cfg, wall, flags.with_trace);
  emit(rep, flags.out);

  std::fprintf(stderr, "status=%s solution=%s residue=%.5g itr=%d nwtitr=%d\n",
               to_string(res.status).c_str(),
               format_solution(res.solution.x).c_str(), res.residue, res.itr,
               res.nwtitr);
  if (flags.echo_config)
    std::cerr << "config: " << rep["config"].dump() << "\n";
  if (res.status == TraceStatus::stalled)
    std::fprintf(stderr,
                 "hint: the path may be degenerate for this b; retry with "
                 "--b perturbed per entry in [0.9, 1.1]\n");
  return status_exit_code(res.status);
}

int run_tables() {
  const auto& rows = benchmarks::reference_rows();
  bool all_ok = true;
  std::printf("%-4s %-16s %4s %7s  %-28s %s\n", "id", "q", "itr", "nwtitr",
              "solution", "residue");
  for (const auto& row : rows) {
    TcpProblem p(benchmarks::tensor(row.tensor_id), row.q);
    TracerConfig cfg = TracerConfig::defaults(p.dim());
    TraceResult res = trace(p, cfg);
    double dev = (res.solution.x - row.expected_x).lpNorm<Eigen::Infinity>();
    bool ok = res.status == TraceStatus::converged && dev <= 1e-3;
    all_ok = all_ok && ok;
    std::printf("%-4d %-16s %4d %7d  %-28s %.5g%s\n", row.tensor_id,
                format_solution(row.q).c_str(), res.itr, res.nwtitr,
                format_solution(res.solution.x).c_str(), res.residue,
                ok ? "" : "  << deviates");
  }
  return all_ok ? 0 : 1;
}

json check_to_json(const PropertyCheck& c) {
  json j = {{"pass", c.pass}, {"samples_used", c.samples_used}};
  if (!c.pass) {
    j["margin"] = c.margin;
    j["witness_x"] = std::vector<double>(c.witness_x.begin(), c.witness_x.end());
    if (c.witness_y.size())
      j["witness_y"] =
          std::vector<double>(c.witness_y.begin(), c.witness_y.end());
  }
  return j;
}

int run_check(const std::string& path, int samples, unsigned seed, int grid,
              int refine, const std::string& out) {
  TcpProblem p = io::load_problem(path);
  StructureReport rep =
      analyze_structure(p.tensor(), p.q(), samples, seed, grid, refine);
  json doc = {
      {"beta_estimate", rep.beta_estimate},
      {"beta_argmin",
       std::vector<double>(rep.beta_argmin.begin(), rep.beta_argmin.end())},
      {"sampled_ssp", check_to_json(rep.ssp)},
      {"sampled_p_function", check_to_json(rep.p_function)},
      {"sampled_p0_function", check_to_json(rep.p0_function)},
      {"sampled_monotone", check_to_json(rep.monotone)},
      {"samples_used", rep.samples_used},
  };
  emit(doc, out);
  return 0;
}

int run_verify(const std::string& path, const SolveFlags& flags) {
  TcpProblem p = io::load_problem(path);
  if (p.dim() > 3) throw io::ParseError("verify supports dimension <= 3 only");
  TracerConfig cfg = make_config(flags, p.dim());
  validate(cfg);
  TraceResult traced = trace(p, cfg);
  auto sols = solve_brute_force(p);

  bool agree = false;
  for (const auto& s : sols)
    if ((s.x - traced.solution.x).lpNorm<Eigen::Infinity>() <= 1e-4)
      agree = true;

  json doc = {
      {"tracer_status", to_string(traced.status)},
      {"tracer_solution", std::vector<double>(traced.solution.x.begin(),
                                              traced.solution.x.end())},
      {"oracle_solutions", json::array()},
      {"agree", agree},
      {"unique", sols.size() == 1},
  };
  for (const auto& s : sols)
    doc["oracle_solutions"].push_back(
        std::vector<double>(s.x.begin(), s.x.end()));
  emit(doc, flags.out);
  std::fprintf(stderr, "agree=%s oracle_solutions=%zu\n",
               agree ? "yes" : "no", sols.size());
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy continuation solver for tensor complementarity problems"};
  app.require_subcommand(1);

  std::string path;
  SolveFlags flags;
  int samples = 10000, grid = 33, refine = 40;
  unsigned seed = 0;

  CLI::App* solve = app.add_subcommand("solve", "trace the homotopy path to a solution");
  solve->add_option("problem", path, "problem JSON file")->required();
  add_solve_flags(solve, flags);

  CLI::App* tables = app.add_subcommand("tables", "run the built-in benchmark set");

  CLI::App* check = app.add_subcommand("check", "structured-tensor diagnostics");
  check->add_option("problem", path, "problem JSON file")->required();
  check->add_option("--samples", samples, "sampled-check budget");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--grid", grid, "beta grid points per axis");
  check->add_option("--refine", refine, "beta refinement passes");
  check->add_option("--out", flags.out, "write the JSON report here");

  CLI::App* verify = app.add_subcommand("verify", "cross-check tracer against the brute-force oracle");
  verify->add_option("problem", path, "problem JSON file")->required();
  add_solve_flags(verify, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(path, flags);
    if (tables->parsed()) return run_tables();
    if (check->parsed()) return run_check(path, samples, seed, grid, refine, flags.out);
    if (verify->parsed()) return run_verify(path, flags);
  } catch (const io::ParseError& err) {
    std::fprintf(stderr, "input error: %s\n", err.what());
    return kExitInput;
  } catch (const std::invalid_argument& err) {
    std::fprintf(stderr, "input error: %s\n", err.what());
    return kExitInput;
  }
  return 0;
}
