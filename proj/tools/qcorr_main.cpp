#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/degeneracy.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"
#include "qcorr/frameworks.hpp"
#include "qcorr/report.hpp"
#include "qcorr/state_io.hpp"
#include "qcorr/verify.hpp"
#include "qcorr/version.hpp"

namespace {

using namespace qcorr;

constexpr int kExitSuccess = 0;
constexpr int kExitInputError = 2;
constexpr int kExitUnphysical = 3;
constexpr int kExitVerificationFailure = 4;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw InputError(out_path + ": cannot open for writing");
  }
  out << text;
  if (!out) {
    throw InputError(out_path + ": write failed");
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  std::vector<double> values;
  values.reserve(steps);
  if (steps == 1) {
    values.push_back(lo);
    return values;
  }
  for (std::size_t i = 0; i < steps; ++i) {
    values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(steps - 1));
  }
  return values;
}

struct SweepRange {
  double lo{};
  double hi{};
  std::size_t steps{};
};

SweepRange parse_range(const std::string& text) {
  SweepRange range;
  std::istringstream in(text);
  char sep1 = 0;
  char sep2 = 0;
  if (!(in >> range.lo >> sep1 >> range.hi >> sep2 >> range.steps) || sep1 != ':' ||
      sep2 != ':' || !in.eof()) {
    throw InputError("--c expects lo:hi:steps, got \"" + text + "\"");
  }
  if (!(range.lo >= 0.0 && range.lo <= range.hi && range.hi <= 1.0)) {
    throw InputError("--c range must satisfy 0 <= lo <= hi <= 1");
  }
  if (range.steps < 1) {
    throw InputError("--c needs at least 1 step");
  }
  return range;
}

int cmd_analyze(const std::string& file, const OptimizerSettings& settings,
                double tol, bool json, const std::string& out_path) {
  const AnalysisReport report = analyze_state(load_state_file(file), settings, tol);
  write_output(json ? render_json(report) : render_text(report), out_path);
  return kExitSuccess;
}

int cmd_scan(const std::string& file, const OptimizerSettings& settings, double tol,
             bool json, const std::string& out_path) {
  const TwoQubitState state = to_state(load_state_file(file));
  const DegeneracyReport report = scan_degenerate_directions(state, settings, tol);
  write_output(json ? render_degeneracy_json(report) : render_degeneracy_text(report),
               out_path);
  return kExitSuccess;
}

int cmd_sweep(const std::string& family, const SweepRange& range,
              std::size_t n_z_steps, const std::string& axis_name,
              const std::string& out_path) {
  if (n_z_steps < 2) {
    throw InputError("--nz needs at least 2 steps");
  }
  const bool rho_star = family == "rho-star";
  if (!rho_star && family != "custom-axis") {
    throw InputError("--family must be rho-star or custom-axis");
  }
  Axis axis = Axis::x;
  if (!rho_star) {
    if (axis_name == "x") {
      axis = Axis::x;
    } else if (axis_name == "y") {
      axis = Axis::y;
    } else {
      // the sweep meridian contains the z axis, so a z-axis family has no
      // transverse profile to report
      throw InputError("--axis must be x or y for the custom-axis family");
    }
  }

  std::ostringstream csv;
  csv << "c,n_z,Q_numeric,C_numeric,C_analytic,C_prime_analytic\n";
  for (const double c : linspace(range.lo, range.hi, range.steps)) {
    // the (c, c, 0) family leaves the physical set above c = 1/2; its
    // correlation formulas are algebraic in c, so the sweep follows them
    // across the whole requested range
    const TwoQubitState state =
        rho_star ? TwoQubitState::unchecked(bell_diagonal_matrix(BellVector{c, c, 0.0}))
                 : build_bell_diagonal(axis == Axis::x ? BellVector{c, 0.0, 0.0}
                                                       : BellVector{0.0, c, 0.0});
    for (const double n_z : linspace(-1.0, 1.0, n_z_steps)) {
      const double r = std::sqrt(std::max(0.0, 1.0 - n_z * n_z));
      const Direction n = rho_star || axis == Axis::x
                              ? Direction::normalized(r, 0.0, n_z)
                              : Direction::normalized(0.0, r, n_z);
      const double q_numeric = q_at(state, n);
      const double c_numeric = c_at(state, n);
      const double c_analytic = c * r;
      const double c_prime_analytic = 2.0 * (std::sqrt(1.0 + c_analytic) - 1.0);
      if (std::abs(c_numeric - c_analytic) > 1e-9) {
        std::cerr << "sweep self-check failed at c = " << format_full(c)
                  << ", n_z = " << format_full(n_z) << ": numeric "
                  << format_full(c_numeric) << " vs analytic "
                  << format_full(c_analytic) << "\n";
        return kExitVerificationFailure;
      }
      csv << format_full(c) << "," << format_full(n_z) << ","
          << format_full(q_numeric) << "," << format_full(c_numeric) << ","
          << format_full(c_analytic) << "," << format_full(c_prime_analytic) << "\n";
    }
  }
  write_output(csv.str(), out_path);
  return kExitSuccess;
}

int cmd_verify(std::size_t n_states, std::uint64_t seed,
               const OptimizerSettings& settings) {
  const VerificationResult result = run_verification(n_states, seed, settings);
  std::cout << render_verification(result);
  return result.passed() ? kExitSuccess : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit quantum/classical/total correlations under the trace norm"};
  app.set_version_flag("--version", kVersionTag);
  app.require_subcommand(1);

  OptimizerSettings settings;
  double tol = kDegeneracyBandTol;
  bool json = false;
  std::string file;
  std::string out_path;

  CLI::App* analyze = app.add_subcommand("analyze", "full correlation report for one state");
  analyze->add_option("file", file, "state file (JSON)")->required();
  analyze->add_option("--grid", settings.grid_points, "optimizer lattice nodes");
  analyze->add_option("--seed", settings.seed, "optimizer seed");
  analyze->add_option("--tol", tol, "degeneracy band width");
  analyze->add_flag("--json", json, "emit JSON instead of text");
  analyze->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* scan = app.add_subcommand("scan", "degenerate-direction scan for one state");
  scan->add_option("file", file, "state file (JSON)")->required();
  scan->add_option("--grid", settings.grid_points, "optimizer lattice nodes");
  scan->add_option("--seed", settings.seed, "optimizer seed");
  scan->add_option("--tol", tol, "degeneracy band width");
  scan->add_flag("--json", json, "emit JSON instead of text");
  scan->add_option("--out", out_path, "write the report here instead of stdout");

  std::string family = "rho-star";
  std::string c_range = "0:0.5:6";
  std::string axis = "x";
  std::size_t n_z_steps = 21;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV profile of the correlations along a meridian, over a c range");
  sweep->add_option("--family", family, "state family: rho-star or custom-axis");
  sweep->add_option("--c", c_range, "c range as lo:hi:steps");
  sweep->add_option("--nz", n_z_steps, "number of n_z samples over [-1, 1]");
  sweep->add_option("--axis", axis, "correlation axis for custom-axis: x or y");
  sweep->add_option("--out", out_path, "write the CSV here instead of stdout");

  std::size_t n_states = 100;
  std::uint64_t verify_seed = 7;
  CLI::App* verify = app.add_subcommand(
      "verify", "closed-form vs numeric self-check over random physical states");
  verify->add_option("--n", n_states, "number of sampled states");
  verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--grid", settings.grid_points, "optimizer lattice nodes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (analyze->parsed()) {
      return cmd_analyze(file, settings, tol, json, out_path);
    }
    if (scan->parsed()) {
      return cmd_scan(file, settings, tol, json, out_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(family, parse_range(c_range), n_z_steps, axis, out_path);
    }
    return cmd_verify(n_states, verify_seed, settings);
  } catch (const NotHermitianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnphysical;
  } catch (const UnphysicalStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnphysical;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
