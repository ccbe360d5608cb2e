#pragma once

#include "tcpsolve/problem.hpp"

#include <optional>
#include <vector>

namespace tcpsolve {

/// Independent brute-force solver for small instances (n <= 3): enumerate
/// all 2^n supports, solve the active equations by damped Newton from a
/// multi-start grid, filter by feasibility, deduplicate, and return every
/// verified solution sorted lexicographically by x. Intended as a
/// cross-check for the path tracer, so it shares nothing with it beyond the
/// tensor contraction kernels.
std::vector<CandidatePair> solve_brute_force(
    const TcpProblem& p, double tol = 1e-8, int starts_per_support = 6,
    std::optional<double> x_max_override = std::nullopt);

}  // namespace tcpsolve
