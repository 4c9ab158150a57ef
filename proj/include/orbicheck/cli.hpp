#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "orbicheck/coxeter.hpp"
#include "orbicheck/presentation.hpp"

namespace orbicheck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

inline constexpr int kFormatVersion = 1;

struct RunConfig {
  std::string command;  ///< validate | manifold | homology | pi1 | orbifold | export-chain
  std::string complex_path;
  std::string coxeter_path;
  std::string out_dir;
  bool json = false;
  double tol = kGeometryTolerance;  ///< realization and signature tolerance
  double angle_tol = 1e-6;          ///< flatness tolerance
  int passes = kDefaultPassBudget;
};

/// Runs one subcommand. Returns 0 when every check passes, 1 when some check
/// fails and 2 for unreadable or malformed input.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbicheck::cli
