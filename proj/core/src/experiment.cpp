#include "sh1d/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sh1d/model.hpp"

namespace sh1d {

namespace {

constexpr double deg = M_PI / 180.0;
constexpr double time_eps = 1e-12;

}  // namespace

void ExperimentConfig::validate() const {
  if (n_cells < 0) throw std::invalid_argument("config: n must be nonnegative");
  if (scheme != SchemeKind::Lagrangian && (cfl <= 0.0 || cfl >= 0.5))
    throw std::invalid_argument("config: cfl must lie in (0, 1/2)");
  if (fixed_dt < 0.0) throw std::invalid_argument("config: dt must be positive");
  if (margin_order != 1 && margin_order != 2)
    throw std::invalid_argument("config: margin order must be 1 or 2");
  if (mu < 0.0 || mu > 0.1)
    throw std::invalid_argument("config: mu must lie in [0, 0.1]");
  if (checkpoints.empty())
    throw std::invalid_argument("config: at least one checkpoint required");
  double last = -1.0;
  for (double c : checkpoints) {
    if (c < 0.0 || c < last)
      throw std::invalid_argument("config: checkpoints must be ascending and nonnegative");
    last = c;
  }
  const double end = t_end < 0.0 ? checkpoints.back() : t_end;
  if (checkpoints.back() > end + time_eps)
    throw std::invalid_argument("config: checkpoints must not exceed t_end");
}

const CheckpointData* RunReport::at(double t) const {
  for (const auto& c : checkpoints)
    if (std::abs(c.t - t) < 1e-9) return &c;
  return nullptr;
}

ExperimentSetup make_setup(const ExperimentConfig& config) {
  ExperimentSetup s;
  switch (config.experiment) {
    case ExperimentKind::TravellingShock: {
      s.params = {40.0 * deg, 40.0 * deg, 1.0, config.mu};
      s.track = Track::inclined_plane(40.0 * deg);
      const double beta =
          pressure_factor(s.params, 40.0 * deg, PressureBranch::Active);
      ShockSetup shock{0.3, 0.9, 0.1, beta, ShockFamily::First, 24.0};
      const ShockState st = shock_speed(shock);
      s.profile = std::make_unique<StepProfile>(24.0, 0.3, st.u_plus, 0.9, 0.1);
      s.x_left = 0.0;
      s.x_right = 36.0;
      s.lag_left = 0.0;
      s.lag_right = 36.0;
      s.bc = EulerianBc::InflowOutflow;
      s.inflow = {0.3, 0.3 * st.u_plus};
      s.oracle = std::make_shared<TravellingShockOracle>(shock);
      break;
    }
    case ExperimentKind::Similarity: {
      s.params = {30.0 * deg, 30.0 * deg, 1.0, config.mu};
      s.track = Track::inclined_plane(40.0 * deg);
      const double beta =
          pressure_factor(s.params, 40.0 * deg, PressureBranch::Active);
      auto cap = std::make_unique<ParabolicCapProfile>(4.0, 3.2, 1.0, 1.2);
      SimilaritySetup sim{3.2,        0.0,  1.2, 40.0 * deg, 30.0 * deg,
                          beta, cap->total_mass(), 4.0};
      s.margins0 = {cap->left_margin(), cap->right_margin()};
      s.profile = std::move(cap);
      s.x_left = 0.0;
      s.x_right = 36.0;
      s.lag_left = 0.8;
      s.lag_right = 7.2;
      s.bc = EulerianBc::Transparent;
      s.oracle = std::make_shared<SimilarityOracle>(sim);
      break;
    }
    case ExperimentKind::RunOut: {
      // Angle labels follow the model convention (phi internal, delta basal);
      // the swap flag exchanges them.
      double phi = 38.0 * deg, delta = 35.0 * deg;
      if (config.swap_friction_angles) std::swap(phi, delta);
      s.params = {phi, delta, 1.0, config.mu};
      s.track = Track::runout_chute(40.0 * deg, 21.5, 25.5);
      auto cap = std::make_unique<ParabolicCapProfile>(4.0, 3.2, 1.0, 1.2);
      s.margins0 = {cap->left_margin(), cap->right_margin()};
      s.profile = std::move(cap);
      s.x_left = 0.0;
      s.x_right = 36.0;
      s.lag_left = 0.8;
      s.lag_right = 7.2;
      s.bc = EulerianBc::Transparent;
      break;
    }
    case ExperimentKind::Custom: {
      const CustomSpec& c = config.custom;
      s.params = {c.phi_deg * deg, c.delta_deg * deg, c.epsilon, config.mu};
      s.track = c.runout_track
                    ? Track::runout_chute(c.zeta_deg * deg, c.trans_begin, c.trans_end)
                    : Track::inclined_plane(c.zeta_deg * deg);
      s.x_left = c.domain_left;
      s.x_right = c.domain_right;
      if (c.profile == "step") {
        s.profile = std::make_unique<StepProfile>(c.step_x0, c.step_h_left,
                                                  c.step_u_left, c.step_h_right,
                                                  c.step_u_right);
        s.bc = EulerianBc::InflowOutflow;
        s.inflow = {c.step_h_left, c.step_h_left * c.step_u_left};
        s.lag_left = c.domain_left;
        s.lag_right = c.domain_right;
      } else if (c.profile == "parabola") {
        auto cap = std::make_unique<ParabolicCapProfile>(c.cap_center,
                                                         c.cap_half_width,
                                                         c.cap_peak, c.cap_u);
        s.margins0 = {cap->left_margin(), cap->right_margin()};
        s.lag_left = cap->left_margin();
        s.lag_right = cap->right_margin();
        s.profile = std::move(cap);
        s.bc = EulerianBc::Transparent;
      } else {
        throw std::invalid_argument("config: unknown custom profile " + c.profile);
      }
      break;
    }
  }
  s.params.validate();
  return s;
}

namespace {

int default_cells(const ExperimentConfig& config) {
  if (config.n_cells > 0) return config.n_cells;
  if (config.scheme == SchemeKind::Lagrangian)
    return config.experiment == ExperimentKind::TravellingShock ? 60 : 16;
  switch (config.experiment) {
    case ExperimentKind::TravellingShock: return 360;
    case ExperimentKind::RunOut: return 180;
    default: return 90;
  }
}

double end_time(const ExperimentConfig& config) {
  return config.t_end < 0.0 ? config.checkpoints.back() : config.t_end;
}

void record_error(CheckpointData& cp, const ExactSolution* oracle,
                  std::span<const double> edges) {
  if (!oracle) return;
  std::vector<double> exact(cp.h.size());
  for (std::size_t j = 0; j < cp.h.size(); ++j)
    exact[j] = oracle->mean_depth(edges[j], edges[j + 1], cp.t);
  cp.error = error_metric(cp.h, exact);
  cp.has_error = true;
}

void run_lagrangian(const ExperimentConfig& config, const ExperimentSetup& setup,
                    RunReport& report) {
  const int n = default_cells(config);
  LagrangianMesh mesh =
      lagrangian_init(*setup.profile, setup.lag_left, setup.lag_right, n);
  LagrangianOptions options{
      setup.margins0 ? LagrangianBc::MarginVacuum : LagrangianBc::InflowOutflow,
      config.pressure_gradient_term};
  MaterialParams params = setup.params;
  params.mu_artificial = config.mu;

  const double dt0 = config.fixed_dt > 0.0 ? config.fixed_dt : 1e-3;
  report.diag.tv_u_initial = velocity_total_variation(mesh);
  report.diag.tv_u_max = report.diag.tv_u_initial;

  auto checkpoint = [&](double t) {
    CheckpointData cp;
    cp.t = t;
    std::vector<double> edges = mesh.b;
    for (int j = 0; j < n; ++j) {
      cp.x.push_back(mesh.center(j));
      cp.h.push_back(mesh.h[j]);
      cp.u.push_back(0.5 * (mesh.u_half[j] + mesh.u_half[j + 1]));
      cp.m.push_back(cp.h.back() * cp.u.back());
    }
    record_error(cp, setup.oracle.get(), edges);
    report.checkpoints.push_back(std::move(cp));
  };

  for (double tc : config.checkpoints) {
    while (mesh.t < tc - time_eps) {
      const double dt = std::min(dt0, tc - mesh.t);
      lagrangian_step(mesh, dt, params, setup.track, options);
      report.mass_trace.push_back({mesh.t, total_volume(mesh)});
      report.margin_trace.push_back({mesh.t, mesh.b.front(), mesh.b.back()});
      report.diag.tv_u_max =
          std::max(report.diag.tv_u_max, velocity_total_variation(mesh));
    }
    checkpoint(tc);
  }
  (void)end_time;
}

void eulerian_checkpoint(const EulerianField& field, double t,
                         const ExactSolution* oracle, RunReport& report) {
  CheckpointData cp;
  cp.t = t;
  const std::vector<Conserved> w = destagger(field);
  std::vector<double> edges(w.size() + 1);
  for (std::size_t j = 0; j <= w.size(); ++j) edges[j] = field.x_ref + j * field.dx;
  for (std::size_t j = 0; j < w.size(); ++j) {
    cp.x.push_back(field.x_ref + (j + 0.5) * field.dx);
    cp.h.push_back(w[j].h);
    cp.u.push_back(w[j].u());
    cp.m.push_back(w[j].m);
  }
  record_error(cp, oracle, edges);
  report.checkpoints.push_back(std::move(cp));
}

void track_du_dx(const EulerianField& field, RunDiagnostics& diag) {
  for (int j = 0; j + 1 < field.cells(); ++j) {
    if (field.w[j].h < 1e-6 || field.w[j + 1].h < 1e-6) continue;
    diag.min_du_dx = std::min(
        diag.min_du_dx, (field.w[j + 1].u() - field.w[j].u()) / field.dx);
  }
}

void run_eulerian(const ExperimentConfig& config, const ExperimentSetup& setup,
                  RunReport& report) {
  const int n = default_cells(config);
  const double dx = (setup.x_right - setup.x_left) / n;
  const bool tracking = config.scheme == SchemeKind::NocFrontTracking;
  MaterialParams params = setup.params;
  NocOptions options{config.recon, config.derivative};

  FrontTrackedField ft;
  EulerianField plain;
  if (tracking) {
    if (!setup.margins0)
      throw std::invalid_argument("front tracking requires an initial margin pair");
    ft = ft_init(*setup.profile, setup.x_left, dx, n, setup.margins0->first,
                 setup.margins0->second, params, setup.track);
  } else {
    plain = initial_cell_averages(*setup.profile, setup.x_left, dx, n);
    plain.bc = setup.bc;
    plain.inflow_left = setup.inflow;
    update_beta(plain, params, setup.track);
    apply_eulerian_bc(plain);
    update_beta(plain, params, setup.track);
  }
  EulerianField& field = tracking ? ft.field : plain;

  for (double tc : config.checkpoints) {
    while (field.t < tc - time_eps) {
      double dt = cfl_dt(field, config.cfl, tc);
      if (config.fixed_dt > 0.0) dt = std::min(config.fixed_dt, tc - field.t);
      if (tracking)
        ft_advance(ft, dt, params, setup.track, options, config.margin_order);
      else
        noc_advance(field, dt, params, setup.track, options);
      report.mass_trace.push_back({field.t, total_mass(field)});
      if (tracking)
        report.margin_trace.push_back({field.t, ft.tail.x_pos, ft.front.x_pos});
      track_du_dx(field, report.diag);
    }
    eulerian_checkpoint(field, tc, setup.oracle.get(), report);
  }
  if (tracking) {
    report.diag.clip_count = ft.diag.clip_count;
    report.diag.negative_clamps = ft.diag.negative_clamps;
    report.diag.case_histogram = ft.diag.case_histogram;
  }
}

}  // namespace

RunReport run(const ExperimentConfig& config) {
  config.validate();
  RunReport report;
  report.config = config;
  report.diag.min_du_dx = 0.0;
  const ExperimentSetup setup = make_setup(config);
  try {
    if (config.scheme == SchemeKind::Lagrangian)
      run_lagrangian(config, setup, report);
    else
      run_eulerian(config, setup, report);
  } catch (const SolverError& e) {
    report.failed = true;
    report.failure = e.what();
    report.failure_time = e.time;
    report.failure_step = e.step;
  }
  return report;
}

double error_metric(std::span<const double> h, std::span<const double> h_exact) {
  if (h_exact.empty() || h.size() != h_exact.size())
    throw std::invalid_argument("error_metric: empty or mismatched oracle");
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    num += std::abs(h[j] - h_exact[j]);
    den += h_exact[j];
  }
  if (den <= 0.0) throw std::invalid_argument("error_metric: empty oracle");
  return num / den;
}

double locate_shock(std::span<const double> x, std::span<const double> h) {
  constexpr double wet = 1e-6;
  std::vector<double> mags;
  double best = 0.0, best_pos = 0.0;
  for (std::size_t j = 0; j + 1 < h.size(); ++j) {
    if (h[j] < wet || h[j + 1] < wet) continue;
    const double d = std::abs(h[j + 1] - h[j]);
    mags.push_back(d);
    if (d > best) {
      best = d;
      best_pos = 0.5 * (x[j] + x[j + 1]);
    }
  }
  if (mags.size() < 3 || best < 1e-8)
    throw SolverError("locate_shock: no jump present");
  std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
  const double median = mags[mags.size() / 2];
  if (best < 10.0 * median)
    throw SolverError("locate_shock: no jump stands out");
  return best_pos;
}

RunoutFlags runout_diagnostics(const RunReport& report) {
  RunoutFlags flags;
  std::vector<double> shock_pos;
  for (const auto& cp : report.checkpoints) {
    try {
      const double xs = locate_shock(cp.x, cp.h);
      if (!flags.shock_formed_at) flags.shock_formed_at = cp.t;
      shock_pos.push_back(xs);
    } catch (const SolverError&) {
      if (flags.shock_formed_at) shock_pos.push_back(shock_pos.back());
    }
  }
  for (std::size_t i = 0; i + 2 < shock_pos.size(); ++i) {
    if (shock_pos[i + 1] < shock_pos[i] && shock_pos[i + 2] < shock_pos[i + 1]) {
      flags.upslope_motion = true;
      break;
    }
  }
  if (report.checkpoints.size() >= 2 && !report.margin_trace.empty()) {
    const double t_last = report.checkpoints.back().t;
    const double t_prev = report.checkpoints[report.checkpoints.size() - 2].t;
    double front_last = 0.0, front_prev = 0.0;
    for (const auto& rec : report.margin_trace) {
      if (rec[0] <= t_prev + time_eps) front_prev = rec[2];
      if (rec[0] <= t_last + time_eps) front_last = rec[2];
    }
    const double dx = report.checkpoints.back().x.size() > 1
                          ? report.checkpoints.back().x[1] - report.checkpoints.back().x[0]
                          : 0.0;
    flags.final_front_at_rest = std::abs(front_last - front_prev) < dx;
  }
  return flags;
}

namespace {

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << header << "\n";
  char buf[32];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out << buf << (i + 1 < row.size() ? "," : "");
    }
    out << "\n";
  }
}

}  // namespace

void write_csv_outputs(const RunReport& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (const auto& cp : report.checkpoints) {
    char name[48];
    std::snprintf(name, sizeof name, "profile_t%04d.csv",
                  static_cast<int>(std::lround(cp.t * 100.0)));
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < cp.x.size(); ++j)
      rows.push_back({cp.x[j], cp.h[j], cp.u[j], cp.m[j]});
    write_csv((fs::path(out_dir) / name).string(), "x,h,u,m", rows);
  }
  {
    std::vector<std::vector<double>> rows;
    for (const auto& r : report.margin_trace) rows.push_back({r[0], r[1], r[2]});
    write_csv((fs::path(out_dir) / "margins.csv").string(), "t,x_tail,x_front", rows);
  }
  {
    std::vector<std::vector<double>> rows;
    for (const auto& r : report.mass_trace) rows.push_back({r[0], r[1]});
    write_csv((fs::path(out_dir) / "mass.csv").string(), "t,total_mass", rows);
  }
  {
    std::vector<std::vector<double>> rows;
    for (const auto& cp : report.checkpoints)
      if (cp.has_error) rows.push_back({cp.t, cp.error});
    write_csv((fs::path(out_dir) / "report.csv").string(), "t,E", rows);
  }
}

}  // namespace sh1d
