#pragma once

#include <tricut/generate.hpp>
#include <tricut/json_io.hpp>
#include <tricut/oracles.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tricut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInternal = 3;

/// Solvers reachable through `solve`.
const std::vector<std::string>& solver_names();

/// Runs a solver on an instance. `k` is only read by "arcs".
Json solve(const std::string& solver, const Instance& inst, int k);

/// Recomputes counts and oracle membership for a solver answer.
VerificationReport verify(const std::string& solver, const Instance& inst, const Json& answer,
                          const std::string& instance_id);

/// SVG of an instance, optionally with a solver answer drawn on top.
std::string render(const Instance& inst, const std::string& solver, const Json& answer);

/// Full command line, argv[0] included. Never throws.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tricut::cli
