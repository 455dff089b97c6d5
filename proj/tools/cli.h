#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nhosc/json_io.h"
#include "nhosc/params.h"
#include "nhosc/report.h"

namespace nhosc::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUnsolvable = 2,
  kNonlinear = 3,
  kVerificationFailed = 4,
};

/// Parsed command-line state. Couplings arrive as exact "num/den" strings.
struct RunConfig {
  Rational lambda{2};
  Rational b{1, 2};
  Rational omega{1, 3};
  int nmax = 2;
  std::string out;    ///< empty: write to stdout
  std::string cells;  ///< input cells file for verify/gram
  bool numeric = true;
  int nmax_moment = 8;
  double tol = 1e-8;
};

/// Quartic params from the config; throws InvalidParams.
ModelParams config_params(const RunConfig& config);

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gram(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Moment table against quadrature for N, M ≤ nmax_moment; fills `table`
/// with one row per (N, M).
VerificationReport validate_moments(const ModelParams& params, int nmax_moment, double tol, Json& table);

/// Finite-difference checks of H on every chain function of the cells.
VerificationReport validate_operator_pointwise(const std::vector<JordanCell>& cells);

/// The full verification suite run by `verify`.
VerificationReport verify_cells(const std::vector<JordanCell>& cells, const RunConfig& config);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nhosc::cli
