#pragma once

#include "tcpsolve/tracer.hpp"

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>

namespace tcpsolve::io {

/// Malformed problem file: message carries field-level diagnostics.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem file schema (1-based indices, unlisted entries zero):
///   {"m": int, "n": int,
///    "entries": [{"idx": [int, ...], "val": number}, ...],
///    "q": [number, ...]}
TcpProblem problem_from_json(const nlohmann::json& j);
TcpProblem load_problem(const std::string& path);

nlohmann::json problem_to_json(const TcpProblem& p);
void save_problem(const TcpProblem& p, const std::string& path);

nlohmann::json report_to_json(const TraceResult& result,
                              const TracerConfig& cfg, double wall_seconds,
                              bool include_trace);

}  // namespace tcpsolve::io
