#ifndef SH1D_EXPERIMENT_HPP
#define SH1D_EXPERIMENT_HPP

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sh1d/exact.hpp"
#include "sh1d/front_tracking.hpp"
#include "sh1d/initial_profile.hpp"
#include "sh1d/lagrangian.hpp"
#include "sh1d/noc.hpp"

namespace sh1d {

enum class ExperimentKind { TravellingShock, Similarity, RunOut, Custom };
enum class SchemeKind { Lagrangian, Noc, NocFrontTracking };

/// Initial data and track description for the Custom experiment.
struct CustomSpec {
  std::string profile = "parabola";  // "parabola" | "step"
  double step_x0 = 18.0;
  double step_h_left = 1.0, step_u_left = 0.0;
  double step_h_right = 0.5, step_u_right = 0.0;
  double cap_center = 4.0, cap_half_width = 3.2, cap_peak = 1.0, cap_u = 1.2;
  double phi_deg = 30.0, delta_deg = 30.0, zeta_deg = 40.0, epsilon = 1.0;
  double domain_left = 0.0, domain_right = 36.0;
  bool runout_track = false;
  double trans_begin = 21.5, trans_end = 25.5;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Similarity;
  SchemeKind scheme = SchemeKind::NocFrontTracking;
  ReconMethod recon = ReconMethod::Superbee;
  DerivativeForm derivative = DerivativeForm::Jacobian;
  int n_cells = 0;        ///< 0 picks the per-experiment default
  double cfl = 0.4;
  double fixed_dt = 0.0;  ///< > 0 forces fixed-step time integration
  double t_end = -1.0;    ///< < 0 means "last checkpoint"
  std::vector<double> checkpoints;
  int margin_order = 2;
  double mu = 0.0;
  bool pressure_gradient_term = true;
  bool swap_friction_angles = false;
  std::string out_dir;
  unsigned long seed = 0;
  CustomSpec custom;

  void validate() const;  ///< throws std::invalid_argument on bad settings
};

struct CheckpointData {
  double t = 0.0;
  std::vector<double> x, h, u, m;
  bool has_error = false;
  double error = 0.0;  ///< E vs the exact solution, when one exists
};

struct RunDiagnostics {
  long clip_count = 0;
  long negative_clamps = 0;
  std::array<long, 4> case_histogram{};
  double tv_u_initial = 0.0;
  double tv_u_max = 0.0;
  double min_du_dx = 0.0;  ///< most negative wet-interior velocity gradient
};

struct RunReport {
  ExperimentConfig config;
  std::vector<CheckpointData> checkpoints;
  std::vector<std::array<double, 3>> margin_trace;  ///< t, x_tail, x_front
  std::vector<std::array<double, 2>> mass_trace;    ///< t, total mass
  RunDiagnostics diag;
  bool failed = false;
  std::string failure;
  double failure_time = 0.0;
  long failure_step = -1;

  const CheckpointData* at(double t) const;
};

/// Everything a driver needs to run one experiment.
struct ExperimentSetup {
  MaterialParams params;
  Track track;
  std::unique_ptr<InitialProfile> profile;
  double x_left = 0.0, x_right = 36.0;  ///< Eulerian domain
  double lag_left = 0.0, lag_right = 36.0;
  EulerianBc bc = EulerianBc::Transparent;
  Conserved inflow{};
  std::shared_ptr<ExactSolution> oracle;
  std::optional<std::pair<double, double>> margins0;  ///< (tail, front)
};

ExperimentSetup make_setup(const ExperimentConfig& config);

/// Run the configured experiment. Scheme failures are captured in the report
/// instead of propagating.
RunReport run(const ExperimentConfig& config);

/// E = sum |h_j - h_j^exact| / sum h_j^exact.
double error_metric(std::span<const double> h, std::span<const double> h_exact);

/// Position of the steepest depth jump between adjacent wet cells. Throws
/// SolverError when no interface stands out (max |dh| below 10x the median).
double locate_shock(std::span<const double> x, std::span<const double> h);

struct RunoutFlags {
  std::optional<double> shock_formed_at;
  bool upslope_motion = false;
  bool final_front_at_rest = false;
};

RunoutFlags runout_diagnostics(const RunReport& report);

/// profile_tXXXX.csv, margins.csv, mass.csv, report.csv under out_dir.
void write_csv_outputs(const RunReport& report, const std::string& out_dir);

// Configuration ingestion (key = value files with CLI-style keys).
ExperimentConfig default_config(ExperimentKind kind, SchemeKind scheme);
ExperimentConfig parse_config_file(const std::string& path);
void set_config_key(ExperimentConfig& config, const std::string& key,
                    const std::string& value);

ExperimentKind parse_experiment(const std::string& name);
SchemeKind parse_scheme(const std::string& name);
ReconMethod parse_recon(const std::string& name);
std::string to_string(ExperimentKind kind);
std::string to_string(SchemeKind scheme);
std::string to_string(ReconMethod method);

}  // namespace sh1d

#endif
