// Command-line driver: runs one experiment and writes CSV outputs.
//
// Exit codes: 0 success, 1 scheme error, 2 configuration error,
// 3 acceptance-diagnostic failure.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "sh1d/experiment.hpp"

namespace {

int evaluate_diagnostics(const sh1d::RunReport& report) {
  using namespace sh1d;
  int bad = 0;
  if (report.config.scheme == SchemeKind::NocFrontTracking &&
      report.config.experiment != ExperimentKind::Custom) {
    if (report.diag.clip_count > 0) {
      std::fprintf(stderr, "diagnostic: %ld clipped margin extrapolations\n",
                   report.diag.clip_count);
      bad = 1;
    }
  }
  if (report.config.experiment == ExperimentKind::RunOut) {
    const RunoutFlags flags = runout_diagnostics(report);
    if (!flags.shock_formed_at) {
      std::fprintf(stderr, "diagnostic: no shock detected\n");
      bad = 1;
    } else {
      std::printf("shock formed at t=%g\n", *flags.shock_formed_at);
    }
    if (!flags.upslope_motion) {
      std::fprintf(stderr, "diagnostic: shock does not move upslope\n");
      bad = 1;
    }
    if (!flags.final_front_at_rest) {
      std::fprintf(stderr, "diagnostic: front not at rest at the final time\n");
      bad = 1;
    }
  }
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional granular avalanche solver"};

  std::string config_path, experiment, scheme, recon, out_dir, checkpoints;
  int n = -1, margin_order = -1;
  double cfl = -1.0, dt = -1.0, t_end = -1.0, mu = -1.0;
  unsigned long seed = 0;
  bool seed_set = false, swap_angles = false;

  app.add_option("config", config_path, "key = value configuration file");
  app.add_option("--experiment", experiment,
                 "travelling-shock | similarity | runout | custom");
  app.add_option("--scheme", scheme, "lagrangian | noc | noc-front-tracking");
  app.add_option("--recon", recon,
                 "minmod | superbee | central | weno-linear | weno-quadratic");
  app.add_option("--n", n, "number of cells");
  app.add_option("--cfl", cfl, "Courant number, in (0, 1/2)");
  app.add_option("--dt", dt, "fixed time step (default for Lagrangian runs: 1e-3)");
  app.add_option("--t-end", t_end, "final time");
  app.add_option("--out", out_dir, "output directory for CSV files");
  app.add_option("--seed", seed, "seed recorded with the run")
      ->each([&](const std::string&) { seed_set = true; });
  app.add_option("--margin-order", margin_order, "margin velocity order (1 or 2)");
  app.add_option("--mu", mu, "artificial viscosity coefficient, in [0, 0.1]");
  app.add_option("--checkpoints", checkpoints, "comma-separated checkpoint times");
  app.add_flag("--swap-angles", swap_angles,
               "swap the internal and basal friction angles (runout)");

  CLI11_PARSE(app, argc, argv);

  sh1d::RunReport report;
  try {
    sh1d::ExperimentConfig config =
        config_path.empty()
            ? sh1d::default_config(sh1d::ExperimentKind::Similarity,
                                   sh1d::SchemeKind::NocFrontTracking)
            : sh1d::parse_config_file(config_path);
    if (!experiment.empty()) sh1d::set_config_key(config, "experiment", experiment);
    if (!scheme.empty()) sh1d::set_config_key(config, "scheme", scheme);
    if (!recon.empty()) sh1d::set_config_key(config, "recon", recon);
    if (n >= 0) config.n_cells = n;
    if (cfl >= 0.0) config.cfl = cfl;
    if (dt >= 0.0) config.fixed_dt = dt;
    if (t_end >= 0.0) {
      config.t_end = t_end;
      while (!config.checkpoints.empty() && config.checkpoints.back() > t_end)
        config.checkpoints.pop_back();
      if (config.checkpoints.empty() || config.checkpoints.back() < t_end)
        config.checkpoints.push_back(t_end);
    }
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (seed_set) config.seed = seed;
    if (margin_order >= 0) config.margin_order = margin_order;
    if (mu >= 0.0) config.mu = mu;
    if (!checkpoints.empty()) sh1d::set_config_key(config, "checkpoints", checkpoints);
    if (swap_angles) config.swap_friction_angles = true;
    config.validate();

    report = sh1d::run(config);
    if (!config.out_dir.empty()) sh1d::write_csv_outputs(report, config.out_dir);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  if (report.failed) {
    std::fprintf(stderr, "scheme error at t=%g (step %ld): %s\n",
                 report.failure_time, report.failure_step, report.failure.c_str());
    return 1;
  }
  for (const auto& cp : report.checkpoints) {
    if (cp.has_error)
      std::printf("t=%-6g E=%.6e\n", cp.t, cp.error);
    else
      std::printf("t=%-6g\n", cp.t);
  }
  return evaluate_diagnostics(report) ? 3 : 0;
}
