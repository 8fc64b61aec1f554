// Command-line front end: loads models and POVMs from JSON, evaluates the
// noise susceptibility and saturation checks, and runs the interferometer
// and super-resolution parameter sweeps as CSV/JSON tables.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "menos/json_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUndefined = 3;
constexpr int kExitPartialFailure = 4;

double tolerance_scale() {
  const char* env = std::getenv("MENOS_TOL_OVERRIDE");
  if (env == nullptr || *env == '\0') return 1.0;
  char* end = nullptr;
  const double scale = std::strtod(env, &end);
  if (end == env || !(scale > 0.0) || !std::isfinite(scale)) {
    std::cerr << "warning: ignoring invalid MENOS_TOL_OVERRIDE value\n";
    return 1.0;
  }
  return scale;
}

std::string fmt12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (int i = 0; i < steps; ++i) {
    grid.push_back(lo + (hi - lo) * i / (steps - 1));
  }
  return grid;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw menos::InvalidInput("cannot open file: " + path);
  return json::parse(in);
}

// Sweep rows are buffered and written in input order so output files are
// deterministic.
class SweepTable {
 public:
  explicit SweepTable(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(std::vector<double> values) { rows_.push_back(std::move(values)); }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      json array = json::array();
      for (const auto& row : rows_) {
        json obj;
        for (std::size_t c = 0; c < columns_.size(); ++c) {
          obj[columns_[c]] = menos::encode_real(row[c]);
        }
        array.push_back(std::move(obj));
      }
      out << array.dump(2) << '\n';
      return;
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      out << (c ? "," : "") << columns_[c];
    }
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << fmt12(row[c]);
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

void write_output(const SweepTable& table, const std::string& out_path,
                  const std::string& format) {
  if (out_path.empty()) {
    table.write(std::cout, format);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw menos::InvalidInput("cannot open output file: " + out_path);
  table.write(out, format);
}

void emit_report(const json& report, const std::string& out_path, bool to_stdout) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw menos::InvalidInput("cannot open output file: " + out_path);
    out << report.dump(2) << '\n';
  }
  if (to_stdout) std::cout << report.dump(2) << '\n';
}

struct ChiArgs {
  std::string model_path, povm_path, out_path;
  int bruteforce_trials = 0;
  std::uint64_t seed = 0;
};

int run_chi(const ChiArgs& args, double tol_scale) {
  const menos::ModelAtPoint model = menos::model_from_json(load_json_file(args.model_path));
  const menos::Povm povm = menos::povm_from_json(load_json_file(args.povm_path));
  const auto validation = menos::validate(povm, menos::tol::psd * tol_scale,
                                          menos::tol::completeness * tol_scale);
  if (!validation.passed) {
    throw menos::InvalidInput("povm fails validation (completeness residual " +
                              fmt12(validation.completeness_residual) + ")");
  }
  const menos::OutcomeStats stats = menos::outcome_stats(model, povm);
  const menos::MenosReport report = menos::chi_menos(model, stats);
  json out = menos::menos_report_to_json(report);
  if (args.bruteforce_trials > 0) {
    out["chi_bruteforce"] = menos::encode_real(menos::chi_bruteforce(
        model, stats, povm, args.bruteforce_trials, args.seed));
  }
  std::cout << fmt12(report.chi) << '\n';
  emit_report(out, args.out_path, false);
  return kExitOk;
}

struct CheckArgs {
  std::string model_path, povm_path, out_path;
};

int run_check(const CheckArgs& args, double tol_scale) {
  const menos::ModelAtPoint model = menos::model_from_json(load_json_file(args.model_path));
  const menos::Povm povm = menos::povm_from_json(load_json_file(args.povm_path));
  const auto validation = menos::validate(povm, menos::tol::psd * tol_scale,
                                          menos::tol::completeness * tol_scale);
  if (!validation.passed) {
    throw menos::InvalidInput("povm fails validation");
  }
  const menos::SaturationReport report =
      menos::check_saturation(model, povm, menos::tol::saturation * tol_scale);
  emit_report(menos::saturation_report_to_json(report), args.out_path, true);
  return report.saturates ? kExitOk : kExitCheckFailed;
}

struct InterferometerArgs {
  double phi_min = 0.0;
  double phi_max = std::numbers::pi;
  int steps = 181;
  double visibility = 0.98;
  std::string out_path, format = "csv";
};

int run_interferometer(const InterferometerArgs& args) {
  if (!(args.phi_min <= args.phi_max)) {
    throw menos::InvalidArgument("interferometer: phi range is not ordered");
  }
  const menos::ModelAtPoint model = menos::interferometer_model(0.0, 0.0);
  SweepTable table({"phi", "cfi_v1", "cfi_v", "chi"});
  for (const double phi : linspace(args.phi_min, args.phi_max, args.steps)) {
    const double cfi_v1 =
        menos::stats_from_analytic(menos::interferometer_stats(0.0, phi, 1.0)).cfi;
    const double cfi_v =
        menos::stats_from_analytic(menos::interferometer_stats(0.0, phi, args.visibility)).cfi;
    double chi = std::numeric_limits<double>::infinity();
    try {
      const menos::OutcomeStats stats =
          menos::outcome_stats(model, menos::equator_projective_povm(phi));
      chi = menos::chi_menos(model, stats).chi;
    } catch (const menos::UndefinedSusceptibility&) {
      // degenerate working point (phi = 0 or pi): χ diverges
    }
    table.add_row({phi, cfi_v1, cfi_v, chi});
  }
  write_output(table, args.out_path, args.format);
  return kExitOk;
}

struct SuperresHgArgs {
  double theta_min = 0.1;
  double theta_max = 6.0;
  int steps = 60;
  double sigma = 1.0;
  int modes = 4;
  std::string out_path, format = "csv";
};

int run_superres_hg(const SuperresHgArgs& args) {
  if (!(args.theta_min <= args.theta_max) || !(args.theta_min > 0.0)) {
    throw menos::InvalidArgument("superres-hg: theta range must be positive and ordered");
  }
  SweepTable table({"theta", "cfi", "chi", "qfi"});
  for (const double theta : linspace(args.theta_min, args.theta_max, args.steps)) {
    const menos::ModelAtPoint model = menos::superres_model(theta, args.sigma);
    const menos::OutcomeStats stats = menos::stats_from_analytic(
        menos::hg_mode_stats(theta, args.sigma, args.modes));
    double chi = std::numeric_limits<double>::infinity();
    try {
      chi = menos::chi_menos(model, stats).chi;
    } catch (const menos::UndefinedSusceptibility&) {
    }
    table.add_row({theta, stats.cfi, chi, *model.qfi_known});
  }
  write_output(table, args.out_path, args.format);
  return kExitOk;
}

struct SuperresChiqArgs {
  double theta_min = 0.5;
  double theta_max = 8.0;
  int steps = 16;
  double sigma = 1.0;
  int grid_n = 48;
  int refine_iters = 3;
  std::string out_path, format = "csv";
};

int run_superres_chiq(const SuperresChiqArgs& args) {
  if (!(args.theta_min <= args.theta_max) || !(args.theta_min > 0.0)) {
    throw menos::InvalidArgument("superres-chiq: theta range must be positive and ordered");
  }
  SweepTable table({"theta", "chi_q", "phi_s", "phi_a", "cfi"});
  bool any_failed = false;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const double theta : linspace(args.theta_min, args.theta_max, args.steps)) {
    try {
      const menos::ChiQResult result = menos::minimize_chi_q_superres(
          theta, args.sigma, args.grid_n, args.refine_iters);
      table.add_row({theta, result.chi_q, result.phi_s, result.phi_a,
                     result.cfi_at_optimum});
    } catch (const menos::NoFeasiblePoint&) {
      table.add_row({theta, nan, nan, nan, nan});
      any_failed = true;
    }
  }
  write_output(table, args.out_path, args.format);
  return any_failed ? kExitPartialFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fisher-information toolkit: CFI/QFI, measurement-noise "
               "susceptibility, QCRB-saturation checks and the interferometer "
               "and super-resolution sweeps"};
  app.require_subcommand(1);
  const double tol_scale = tolerance_scale();

  ChiArgs chi_args;
  CLI::App* chi = app.add_subcommand(
      "chi", "Worst-case noise susceptibility of a measurement");
  chi->add_option("--model", chi_args.model_path, "Model JSON path")->required();
  chi->add_option("--povm", chi_args.povm_path, "POVM JSON path")->required();
  chi->add_option("--out", chi_args.out_path, "Report JSON output path");
  chi->add_option("--bruteforce-trials", chi_args.bruteforce_trials,
                  "Also run the brute-force oracle with this many random noise POVMs");
  chi->add_option("--seed", chi_args.seed, "Seed for the brute-force oracle");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "QCRB-saturation certificate");
  check->add_option("--model", check_args.model_path, "Model JSON path")->required();
  check->add_option("--povm", check_args.povm_path, "POVM JSON path")->required();
  check->add_option("--out", check_args.out_path, "Report JSON output path");

  InterferometerArgs intf_args;
  CLI::App* intf = app.add_subcommand(
      "interferometer", "Phase-offset sweep of the single-photon interferometer");
  intf->add_option("--phi-min", intf_args.phi_min, "Sweep start");
  intf->add_option("--phi-max", intf_args.phi_max, "Sweep end");
  intf->add_option("--steps", intf_args.steps, "Number of grid points")
      ->check(CLI::PositiveNumber);
  intf->add_option("--visibility", intf_args.visibility, "Fringe visibility in [0, 1]");
  intf->add_option("--out", intf_args.out_path, "Output path (stdout if omitted)");
  intf->add_option("--format", intf_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SuperresHgArgs hg_args;
  CLI::App* hg = app.add_subcommand(
      "superres-hg", "Separation sweep of the Hermite-Gaussian demultiplexer");
  hg->add_option("--theta-min", hg_args.theta_min, "Sweep start (> 0)");
  hg->add_option("--theta-max", hg_args.theta_max, "Sweep end");
  hg->add_option("--steps", hg_args.steps, "Number of grid points")
      ->check(CLI::PositiveNumber);
  hg->add_option("--sigma", hg_args.sigma, "PSF width");
  hg->add_option("--modes", hg_args.modes, "Outcome count K (modes 1..K-1 plus bucket)")
      ->check(CLI::Range(2, 1000));
  hg->add_option("--out", hg_args.out_path, "Output path (stdout if omitted)");
  hg->add_option("--format", hg_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SuperresChiqArgs chiq_args;
  CLI::App* chiq = app.add_subcommand(
      "superres-chiq", "Minimal susceptibility over QCRB-saturating measurements");
  chiq->add_option("--theta-min", chiq_args.theta_min, "Sweep start (> 0)");
  chiq->add_option("--theta-max", chiq_args.theta_max, "Sweep end");
  chiq->add_option("--steps", chiq_args.steps, "Number of grid points")
      ->check(CLI::PositiveNumber);
  chiq->add_option("--sigma", chiq_args.sigma, "PSF width");
  chiq->add_option("--grid-n", chiq_args.grid_n, "Angle grid size per axis (>= 16)");
  chiq->add_option("--refine-iters", chiq_args.refine_iters, "Grid refinement rounds");
  chiq->add_option("--out", chiq_args.out_path, "Output path (stdout if omitted)");
  chiq->add_option("--format", chiq_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (chi->parsed()) return run_chi(chi_args, tol_scale);
    if (check->parsed()) return run_check(check_args, tol_scale);
    if (intf->parsed()) return run_interferometer(intf_args);
    if (hg->parsed()) return run_superres_hg(hg_args);
    if (chiq->parsed()) return run_superres_chiq(chiq_args);
  } catch (const menos::UndefinedSusceptibility& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUndefined;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitInputError;
  } catch (const menos::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
