#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "nhosc/errors.h"
#include "nhosc/numeric.h"

namespace nhosc::cli {

namespace {

constexpr double kFdStep = 1e-3;
constexpr double kFdResidualLimit = 1e-5;

Rational parse_rational_option(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw ParseError(std::string("--") + name + ": " + e.what());
  }
}

int write_output(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
  if (config.out.empty() || config.out == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << config.out << "' for writing\n";
    return kIoError;
  }
  file << text;
  if (!file) {
    err << "error: failed writing '" << config.out << "'\n";
    return kIoError;
  }
  return kOk;
}

std::vector<JordanCell> read_cells(const std::string& path) {
  if (path.empty()) throw ParseError("--cells is required");
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << file.rdbuf();
  return cells_file_from_json(parse_json(buf.str()));
}

std::string describe(const std::vector<PatternMismatch>& mismatches) {
  if (mismatches.empty()) return {};
  const auto& m = mismatches.front();
  return std::to_string(mismatches.size()) + " mismatches, first at (" + std::to_string(m.row.n) + "," +
         std::to_string(m.row.k) + ")x(" + std::to_string(m.col.n) + "," + std::to_string(m.col.k) +
         "): " + m.actual.str() + " vs " + m.expected.str() + " (×π)";
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

/// Ψ_{n,0} obtained by raising the ground state, against the engine's
/// constant and against the (−λ/2)ⁿ convention.
void check_ladder_constants(const ModelParams& params, int n_max, VerificationReport& r) {
  AnsatzFn psi = ground_state(params, 1).fn;
  std::string printed_detail;
  for (int n = 1; n <= n_max; ++n) {
    psi = apply_A_plus(psi);
    const ComplexRational raised = psi.poly().coeff(0, n);
    const bool single_term = psi.poly().size() == 1;
    r.add("states.ladder_constant[" + std::to_string(n) + "]",
          single_term && raised == ladder_constant(params, n, 1), "c = " + raised.str());
    const ComplexRational printed = ComplexRational(-params.lambda() / Rational(2)).pow(n);
    if (printed_detail.empty() && !(printed == raised)) {
      printed_detail = "(-lambda/2)^n gives " + printed.str() + " at n = " + std::to_string(n) +
                       "; raising the ground state with A+ gives " + raised.str() + " = (-lambda)^n";
    }
  }
  if (!printed_detail.empty()) r.warn("discrepancy.ladder_constant", printed_detail);
}

/// The printed integral table against the closed form, and the measure factor
/// of its basic integral.
void check_moment_table(const ModelParams& params, VerificationReport& r) {
  const ComplexRational bq = params.quadratic_b();
  if (!bq.is_real() || bq.is_zero()) return;
  const Rational lambda = params.lambda();
  const Rational b = bq.re();
  std::string detail;
  for (int n = 0; n <= 3 && detail.empty(); ++n) {
    for (int k = 1; k <= 3 && detail.empty(); ++k) {
      const ComplexRational closed = moment_coefficient(2 * (n + k), 2 * n, lambda, b);
      const Rational printed = printed_table_moment_even(n, k, lambda, b);
      if (!(closed == ComplexRational(printed))) {
        detail = "I_{" + std::to_string(2 * (n + k)) + "," + std::to_string(2 * n) + "}/pi: table gives " +
                 printed.str() + ", closed form gives " + closed.str();
      }
    }
  }
  const ComplexRational m11 = moment_coefficient(1, 1, lambda, b);
  const Rational basic = Rational(2) / (lambda * lambda);
  if (!(m11 == ComplexRational(basic))) {
    if (!detail.empty()) detail += "; ";
    detail += "moment(1,1)/pi over d2x is " + m11.str() + ", the dz dzbar basic integral gives " + basic.str();
  }
  if (!detail.empty()) r.warn("discrepancy.moment_table", detail);
}

void check_psi22_closed_form(const JordanCell& cell, VerificationReport& r) {
  const ModelParams& params = cell.params();
  if (cell.n != 2 || !params.is_quartic() || params.b().is_zero()) return;
  const LaurentBiPoly& psi22 = cell.chain.at(2).poly();
  const Rational q = psi22_zbar2_coefficient(params);
  const auto factor = proportionality_factor(psi22, psi22_closed_form(params, q));
  r.add("cell[2].closed_form", factor.has_value(),
        factor ? "factor " + factor->str() : "not proportional to the closed form");
  const Rational b = params.b();
  const Rational w = params.omega();
  const Rational printed = Rational(18) * w * (Rational(1) - w / b);
  if (printed != q) {
    r.warn("discrepancy.psi22_zbar2_coefficient",
           "18*omega*(1-omega/b) = " + printed.str() + " does not reproduce the chain; 18*omega*(1-omega/b^2) = " +
               q.str() + " does");
  }
}

void check_rebuild(const JordanCell& cell, VerificationReport& r) {
  const std::string tag = "cell[" + std::to_string(cell.n) + "].rebuild";
  if (!cell.params().is_quartic()) {
    r.warn(tag, "not a quartic model; skipped");
    return;
  }
  const JordanCell fresh = build_cell(cell.params(), cell.n);
  std::string detail;
  if (!(fresh.chain == cell.chain)) {
    for (std::size_t k = 0; k < fresh.chain.size() && k < cell.chain.size(); ++k) {
      if (!(fresh.chain[k] == cell.chain[k])) {
        detail = "chain[" + std::to_string(k) + "] differs";
        break;
      }
    }
    if (detail.empty()) detail = "chain length differs";
  } else if (!(fresh.constants == cell.constants)) {
    detail = "constants differ";
  } else if (fresh.energy != cell.energy || fresh.p != cell.p) {
    detail = "energy or dimension differ";
  }
  r.add(tag, detail.empty(), detail);
}

void check_no_extra_levels(const ModelParams& params, int n_max, VerificationReport& r) {
  for (int n = 0; n <= n_max; ++n) {
    const Rational e = energy_level(params, n).energy;
    const LevelWitness on = verify_no_extra_levels(params, e);
    const LevelWitness off = verify_no_extra_levels(params, e + params.lambda());
    r.add("spectrum.level[" + std::to_string(n) + "]", on.admissible && on.level == n && !off.admissible,
          off.admissible ? "off-ladder energy accepted" : on.reason);
  }
}

void check_pseudo_symmetry(const std::vector<JordanCell>& cells, VerificationReport& r) {
  std::vector<const AnsatzFn*> fns;
  for (const auto& c : cells) {
    for (const auto& f : c.chain) fns.push_back(&f);
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = i; j < fns.size(); ++j) {
      if (!pseudo_symmetry_check(*fns[i], *fns[j])) ++bad;
    }
  }
  r.add("pairing.pseudo_symmetry", bad == 0, bad ? std::to_string(bad) + " asymmetric pairs" : "");
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UnsolvableConstraints& e) {
    err << "error: unsolvable constraints: " << e.what() << "\n";
    return kUnsolvable;
  } catch (const NonlinearResidual& e) {
    err << "error: nonlinear residual: " << e.what() << "\n";
    return kNonlinear;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InvalidParams& e) {
    err << "error: invalid parameters: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace

ModelParams config_params(const RunConfig& config) {
  return ModelParams::quartic(config.lambda, config.b, config.omega);
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const ModelParams params = config_params(config);
    return write_output(config, dump(spectrum_to_json(params, spectrum(params, config.nmax))), out, err);
  });
}

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const ModelParams params = config_params(config);
    if (params.b().is_zero() && config.nmax > 0) {
      err << "error: b = 0 makes the chain equations singular (division by 4b); no associated functions exist\n";
      return static_cast<int>(kUnsolvable);
    }
    std::vector<JordanCell> cells;
    for (int n = 0; n <= config.nmax; ++n) cells.push_back(build_cell(params, n));
    return write_output(config, dump(cells_file_to_json(cells)), out, err);
  });
}

VerificationReport validate_moments(const ModelParams& params, int nmax_moment, double tol, Json& table) {
  VerificationReport r;
  table = Json::array();
  const double lambda = params.lambda().to_double();
  const ComplexRational bq = params.quadratic_b();
  if (!bq.is_real() || !(lambda > std::abs(bq.re().to_double()))) {
    r.warn("numeric.moments", "quadrature needs a real b with lambda > |b|; skipped");
    return r;
  }
  const double b = bq.re().to_double();
  for (int N = 0; N <= nmax_moment; ++N) {
    for (int M = 0; M <= nmax_moment; ++M) {
      const std::string name = "numeric.moment[" + std::to_string(N) + "," + std::to_string(M) + "]";
      const std::complex<double> exact = moment(N, M, params).to_complex();
      Json row{{"N", N}, {"M", M}, {"exact", pi_rational_to_json(moment(N, M, params))}};
      try {
        const std::complex<double> quad =
            quad_moment(N, M, params, QuadratureSpec::for_moment(N, M, lambda, b, tol));
        const double error = std::abs(quad - exact);
        const bool ok = error <= tol * (1.0 + std::abs(exact));
        row["quadrature"] = Json{{"re", quad.real()}, {"im", quad.imag()}};
        row["error"] = error;
        row["status"] = ok ? "PASS" : "FAIL";
        r.add(name, ok, "abs error " + fmt(error));
      } catch (const TailBoundViolated& e) {
        row["status"] = "FAIL";
        r.add(name, false, e.what());
      }
      table.push_back(row);
    }
  }
  return r;
}

VerificationReport validate_operator_pointwise(const std::vector<JordanCell>& cells) {
  VerificationReport r;
  const auto points = default_sample_points();
  for (const auto& cell : cells) {
    for (std::size_t k = 0; k < cell.chain.size(); ++k) {
      const double coarse = pointwise_operator_check(cell.chain[k], points, kFdStep);
      const double fine = pointwise_operator_check(cell.chain[k], points, kFdStep / 2);
      const double ratio = coarse / fine;
      // Below ~1e-9 the residual is rounding noise and carries no order information.
      const bool order_ok = fine < 1e-9 || (ratio > 3.0 && ratio < 5.0);
      r.add("numeric.pointwise[" + std::to_string(cell.n) + "," + std::to_string(k) + "]",
            coarse <= kFdResidualLimit && order_ok,
            "residual " + fmt(coarse) + " at h, ratio " + fmt(ratio) + " on halving");
    }
  }
  return r;
}

VerificationReport verify_cells(const std::vector<JordanCell>& cells, const RunConfig& config) {
  VerificationReport r;
  if (cells.empty()) {
    r.add("cells.nonempty", false, "no cells in file");
    return r;
  }
  const ModelParams& params = cells.front().params();
  int n_max = 0;
  for (const auto& c : cells) n_max = std::max(n_max, c.n);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    r.add("cells.order[" + std::to_string(i) + "]", cells[i].n == static_cast<int>(i),
          "n = " + std::to_string(cells[i].n));
  }

  check_no_extra_levels(params, n_max, r);
  check_ladder_constants(params, std::max(n_max, 1), r);
  for (const auto& cell : cells) {
    r.append(verify_cell(cell));
    check_rebuild(cell, r);
    check_psi22_closed_form(cell, r);
  }

  const auto gm = gram_mismatches(gram(cells), cells);
  r.add("gram.pattern", gm.empty(), describe(gm));
  const auto jm = jordan_mismatches(jordan_matrix(cells, n_max), cells);
  r.add("jordan.pattern", jm.empty(), describe(jm));
  check_pseudo_symmetry(cells, r);
  check_moment_table(params, r);

  if (config.numeric) {
    Json table;
    r.append(validate_moments(params, config.nmax_moment, config.tol, table));
    r.append(validate_operator_pointwise(cells));
  }
  return r;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const std::vector<JordanCell> cells = read_cells(config.cells);
    const VerificationReport report = verify_cells(cells, config);
    Json doc{{"params", params_to_json(cells.front().params())}};
    doc["report"] = report_to_json(report);
    const int written = write_output(config, dump(doc), out, err);
    if (written != kOk) return written;
    if (const CheckResult* failed = report.first_failure()) {
      err << "verification failed: " << failed->name;
      if (!failed->detail.empty()) err << " (" << failed->detail << ")";
      err << "\n";
      return static_cast<int>(kVerificationFailed);
    }
    for (const auto& c : report.checks()) {
      if (c.status == CheckStatus::Warn) err << "WARN " << c.name << ": " << c.detail << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_gram(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const std::vector<JordanCell> cells = read_cells(config.cells);
    int n_max = 0;
    for (const auto& c : cells) n_max = std::max(n_max, c.n);
    const GramMatrix g = gram(cells);
    const GramMatrix j = jordan_matrix(cells, n_max);
    const auto gm = gram_mismatches(g, cells);
    const auto jm = jordan_mismatches(j, cells);
    VerificationReport report;
    report.add("gram.pattern", gm.empty(), describe(gm));
    report.add("jordan.pattern", jm.empty(), describe(jm));

    Json scales = Json::array();
    for (const auto& c : cells) scales.push_back(Json{{"n", c.n}, {"value", rational_to_json(c.gram_scale())}});
    Json doc{{"params", params_to_json(cells.front().params())}, {"unit", kPiUnit}, {"gramScale", scales}};
    doc["gram"] = gram_matrix_to_json(g);
    doc["jordan"] = gram_matrix_to_json(j);
    doc["report"] = report_to_json(report);
    const int written = write_output(config, dump(doc), out, err);
    if (written != kOk) return written;
    if (const CheckResult* failed = report.first_failure()) {
      err << "verification failed: " << failed->name << " (" << failed->detail << ")\n";
      return static_cast<int>(kVerificationFailed);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const ModelParams params = config_params(config);
    Json table;
    const VerificationReport report = validate_moments(params, config.nmax_moment, config.tol, table);
    Json doc{{"params", params_to_json(params)}, {"tolerance", config.tol}, {"moments", table}};
    doc["report"] = report_to_json(report);
    const int written = write_output(config, dump(doc), out, err);
    if (written != kOk) return written;
    if (const CheckResult* failed = report.first_failure()) {
      err << "validation failed: " << failed->name << " (" << failed->detail << ")\n";
      return static_cast<int>(kVerificationFailed);
    }
    return static_cast<int>(kOk);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jordan-cell engine for the non-Hermitian 2D anharmonic oscillator", "nhosc"};
  app.require_subcommand(1);

  RunConfig config;
  std::string lambda = "2", b = "1/2", omega = "1/3";
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--lambda", lambda, "lambda > 0 as num/den")->capture_default_str();
    sub->add_option("--b", b, "b as num/den")->capture_default_str();
    sub->add_option("--omega", omega, "omega >= 0 as num/den")->capture_default_str();
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Energy table E_n = 2 lambda (n+1) as JSON");
  add_params(spectrum_cmd);
  spectrum_cmd->add_option("--nmax", config.nmax, "Highest level")->check(CLI::NonNegativeNumber);
  spectrum_cmd->add_option("--out", config.out, "Output file (default stdout)");

  auto* build_cmd = app.add_subcommand("build", "Build Jordan cells n = 0..nmax and write them as JSON");
  add_params(build_cmd);
  build_cmd->add_option("--nmax", config.nmax, "Highest cell")->check(CLI::NonNegativeNumber);
  build_cmd->add_option("--out", config.out, "Output cells file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite on a cells file");
  verify_cmd->add_option("--cells", config.cells, "Cells file")->required();
  verify_cmd->add_option("--out", config.out, "Report file (default stdout)");
  verify_cmd->add_option("--nmax-moment", config.nmax_moment, "Moment table size")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tol", config.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  bool no_numeric = false;
  verify_cmd->add_flag("--no-numeric", no_numeric, "Skip floating-point checks");

  auto* gram_cmd = app.add_subcommand("gram", "Gram and Jordan matrices of a cells file");
  gram_cmd->add_option("--cells", config.cells, "Cells file")->required();
  gram_cmd->add_option("--out", config.out, "Report file (default stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "Compare exact moments with numerical quadrature");
  add_params(validate_cmd);
  validate_cmd->add_option("--nmax-moment", config.nmax_moment, "Moment table size")->check(CLI::NonNegativeNumber);
  validate_cmd->add_option("--tol", config.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  validate_cmd->add_option("--out", config.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoError;
  }

  try {
    config.lambda = parse_rational_option(lambda, "lambda");
    config.b = parse_rational_option(b, "b");
    config.omega = parse_rational_option(omega, "omega");
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  config.numeric = !no_numeric;

  if (spectrum_cmd->parsed()) return cmd_spectrum(config, out, err);
  if (build_cmd->parsed()) return cmd_build(config, out, err);
  if (verify_cmd->parsed()) return cmd_verify(config, out, err);
  if (gram_cmd->parsed()) return cmd_gram(config, out, err);
  return cmd_validate(config, out, err);
}

}  // namespace nhosc::cli
