#include "latclock/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latclock/atoms.hpp"
#include "latclock/clock_model.hpp"
#include "latclock/constants.hpp"
#include "latclock/estimation.hpp"
#include "latclock/measurement.hpp"
#include "latclock/report.hpp"

namespace latclock {

namespace {

// Frozen default for reproducible runs; change only with the tests that
// pin the resulting summary numbers.
constexpr std::uint64_t kDefaultSeed = 5ULL;

struct KeyValueLine {
  std::ostream& out;

  void print(const char* key, double v) {
    out << key << '=' << format_number(v) << '\n';
  }
};

int do_atoms_table(std::ostream& out, const PhysicalConstants& pc) {
  out << "atom,clock_nm,magic_nm,tau_min_s,paper_tau_min_s,rel_dev\n";
  for (const AtomSpec& a : atom_catalog()) {
    const double tmin = tau_min_for_atom(a, 100, pc.g_default(), pc);
    const double rel = tmin / a.reference_tau_min_s - 1.0;
    out << a.name << ',' << format_number(a.clock_wavelength_nm) << ','
        << format_number(a.magic_wavelength_nm) << ',' << format_number(tmin)
        << ',' << format_number(a.reference_tau_min_s) << ','
        << format_number(rel) << '\n';
  }
  return 0;
}

int do_tau_min(std::ostream& out, const PhysicalConstants& pc,
               const std::string& atom_name, int layers, double g_eff) {
  const AtomSpec& a = find_atom(atom_name);
  const double tmin = tau_min_for_atom(a, layers, g_eff, pc);
  KeyValueLine{out}.print("tau_min_s", tmin);
  return 0;
}

int do_qfi_curve(std::ostream& err, int layers, double alpha, int points,
                 double xmax, const std::string& out_path,
                 const std::string& svg_path) {
  const std::vector<CurvePoint> pts =
      layers == 1 ? emit_fig2(xmax, points)
                  : emit_fig4(layers, alpha, xmax, points);
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    err << "cannot open output file '" << out_path << "'\n";
    return 1;
  }
  write_curve_csv(f, pts);
  if (!f.flush()) {
    err << "write failed for '" << out_path << "'\n";
    return 1;
  }
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) {
      err << "cannot open output file '" << svg_path << "'\n";
      return 1;
    }
    write_curve_svg(svg, pts,
                    "variance bound, layers=" + std::to_string(layers));
    if (!svg.flush()) {
      err << "write failed for '" << svg_path << "'\n";
      return 1;
    }
  }
  return 0;
}

void write_sim_csv(std::ostream& os, const EstimationRun& run) {
  os << "trial,n_samples,psi_true,psi_hat,sq_err\n";
  for (std::size_t t = 0; t < run.estimates.size(); ++t) {
    const double dev = wrap_angle_signed(run.estimates[t] - run.psi_true);
    os << t << ',' << run.n_samples << ',' << format_number(run.psi_true)
       << ',' << format_number(run.estimates[t]) << ','
       << format_number(dev * dev) << '\n';
  }
}

int do_simulate(std::ostream& out, std::ostream& err,
                const PhysicalConstants& pc, double psi, double visibility,
                std::uint64_t samples, std::uint64_t trials,
                std::uint64_t seed, const std::string& out_path,
                double delta_e, double tau) {
  const OutcomeModel model(psi, visibility);
  const EstimationRun run =
      run_estimation(model, static_cast<std::size_t>(samples),
                     static_cast<std::size_t>(trials), seed);

  // CSV to the file when requested (summary then goes to stdout); without
  // a file the CSV occupies stdout and the summary moves to stderr.
  std::ostream* summary_os = &out;
  if (out_path.empty()) {
    write_sim_csv(out, run);
    summary_os = &err;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot open output file '" << out_path << "'\n";
      return 1;
    }
    write_sim_csv(f, run);
    if (!f.flush()) {
      err << "write failed for '" << out_path << "'\n";
      return 1;
    }
  }

  KeyValueLine line{*summary_os};
  line.print("mse", run.summary.mean_sq_error);
  line.print("circular_mean", run.summary.circular_mean);
  line.print("circular_variance", run.summary.circular_variance);
  const double i_psi =
      1.0 - std::sqrt(std::fmax(0.0, 1.0 - visibility * visibility));
  line.print("crb_psi", 1.0 / (static_cast<double>(samples) * i_psi));
  if (delta_e > 0.0 && tau > 0.0) {
    // Local potential resolution: delta_v0 = (hbar c^2 / (delta_e tau)) *
    // rms phase error. Only meaningful as a fringe-local statement.
    const double rms = std::sqrt(run.summary.mean_sq_error);
    line.print("delta_v0_local",
               pc.hbar() * pc.c2() / (delta_e * tau) * rms);
  }
  return 0;
}

int do_povm_fisher(std::ostream& out, double visibility) {
  const OutcomeModel model(0.0, visibility);
  const double closed =
      1.0 - std::sqrt(std::fmax(0.0, 1.0 - visibility * visibility));
  const double quad = classical_fisher_quadrature(model);
  const double s_psi = visibility * visibility;
  KeyValueLine line{out};
  line.print("i_psi_closed", closed);
  line.print("i_psi_quadrature", quad);
  line.print("s_psi", s_psi);
  if (s_psi > 0.0) line.print("i_over_s", closed / s_psi);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"lattice clock variance bounds and phase-estimation runs"};
  app.name("latclock");
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "key = value file overriding constants hbar, c, g, planck_h");

  CLI::App* cmd_atoms = app.add_subcommand(
      "atoms-table", "catalog with computed optimal interrogation times");

  std::string atom_name;
  int tm_layers = 100;
  double tm_g = -1.0;
  CLI::App* cmd_tau = app.add_subcommand(
      "tau-min", "optimal interrogation time for one catalog atom");
  cmd_tau->add_option("--atom", atom_name, "catalog name, e.g. Cd")
      ->required();
  cmd_tau->add_option("--layers", tm_layers, "layer count")->required();
  cmd_tau->add_option("--g", tm_g, "gravitational acceleration m/s^2");

  int qc_layers = 1;
  double qc_alpha = 1.0;
  int qc_points = 0;
  double qc_xmax = 20.0;
  std::string qc_out;
  std::string qc_svg;
  CLI::App* cmd_curve = app.add_subcommand(
      "qfi-curve", "variance bound curve data over the accumulated phase");
  cmd_curve->add_option("--layers", qc_layers, "1 or an odd stack size")
      ->required();
  cmd_curve->add_option("--alpha", qc_alpha,
                        "per-layer tick-rate step (dimensionless)");
  cmd_curve->add_option("--points", qc_points, "grid point count")
      ->required();
  cmd_curve->add_option("--xmax", qc_xmax, "grid upper end");
  cmd_curve->add_option("--out", qc_out, "CSV output path")->required();
  cmd_curve->add_option("--svg", qc_svg, "also render a line plot here");

  double sim_psi = 1.0;
  double sim_vis = 1.0;
  std::uint64_t sim_samples = 0;
  std::uint64_t sim_trials = 0;
  std::uint64_t sim_seed = kDefaultSeed;
  std::string sim_out;
  double sim_delta_e = 0.0;
  double sim_tau = 0.0;
  CLI::App* cmd_sim = app.add_subcommand(
      "simulate", "repeated maximum-likelihood phase estimation");
  cmd_sim->add_option("--psi", sim_psi, "true reduced phase, radians");
  cmd_sim->add_option("--visibility", sim_vis, "coherence factor D in [0,1]")
      ->required();
  cmd_sim->add_option("--samples", sim_samples, "draws per trial")
      ->required();
  cmd_sim->add_option("--trials", sim_trials, "independent trials")
      ->required();
  cmd_sim->add_option("--seed", sim_seed, "base RNG seed");
  cmd_sim->add_option("--out", sim_out,
                      "CSV path (default: CSV to stdout, summary to stderr)");
  cmd_sim->add_option("--delta-e", sim_delta_e,
                      "clock splitting in J, for the local dV0 conversion");
  cmd_sim->add_option("--tau", sim_tau,
                      "interrogation time in s, for the local dV0 conversion");

  double pf_vis = 1.0;
  CLI::App* cmd_povm = app.add_subcommand(
      "povm-fisher", "phase measurement information vs the quantum bound");
  cmd_povm->add_option("--visibility", pf_vis, "coherence factor D in [0,1]")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  PhysicalConstants pc;
  if (!config_path.empty()) {
    try {
      const auto kv = read_kv_file(config_path);
      for (const auto& [key, value] : kv) {
        (void)value;
        if (key != "hbar" && key != "c" && key != "g" && key != "planck_h") {
          err << "config: unknown key '" << key << "'\n";
          return 2;
        }
      }
      pc = constants_from_kv(kv);
    } catch (const std::exception& e) {
      err << "config: " << e.what() << '\n';
      return 2;
    }
  }

  try {
    if (*cmd_atoms) {
      return do_atoms_table(out, pc);
    }
    if (*cmd_tau) {
      if (tm_layers < 1) {
        err << "tau-min: --layers must be >= 1\n";
        return 2;
      }
      const double g_eff = tm_g > 0.0 ? tm_g : pc.g_default();
      return do_tau_min(out, pc, atom_name, tm_layers, g_eff);
    }
    if (*cmd_curve) {
      return do_qfi_curve(err, qc_layers, qc_alpha, qc_points, qc_xmax,
                          qc_out, qc_svg);
    }
    if (*cmd_sim) {
      if (sim_samples < 1 || sim_trials < 1) {
        err << "simulate: --samples and --trials must be >= 1\n";
        return 2;
      }
      if ((sim_delta_e > 0.0) != (sim_tau > 0.0)) {
        err << "simulate: --delta-e and --tau go together\n";
        return 2;
      }
      return do_simulate(out, err, pc, sim_psi, sim_vis, sim_samples,
                         sim_trials, sim_seed, sim_out, sim_delta_e, sim_tau);
    }
    if (*cmd_povm) {
      return do_povm_fisher(out, pf_vis);
    }
    err << "no subcommand selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace latclock
