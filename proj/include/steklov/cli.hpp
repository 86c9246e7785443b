#pragma once

// Command-line front end. The `steklov` executable is a thin wrapper over
// run_cli so the commands can be exercised in-process by the tests.
//
//   steklov spectrum --generate path:3 --boundary ends [--penalized]
//   steklov bounds   --in graph.json --format csv
//   steklov duality  --generate cycle:4 --boundary 0,2 --max-iters 5000 --tol 1e-6
//   steklov sweep    --family k2dvee --range 3..10
//
// Exit codes: 0 success, 1 input/validation error, 2 solver non-convergence.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "steklov/report.hpp"

namespace steklov {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;

struct RunConfig {
  std::string command;
  std::string input_path;
  std::string generate;
  std::string boundary = "default";
  std::string family;
  std::string range;
  OutputFormat format = OutputFormat::Table;
  std::uint64_t seed = 0;
  int max_iters = 5000;
  double tol = 1e-6;
  bool penalized = false;
  std::vector<double> penalties{10.0, 100.0, 1000.0};
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_duality(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace steklov
