#ifndef SH1D_NOC_HPP
#define SH1D_NOC_HPP

#include <vector>

#include "sh1d/initial_profile.hpp"
#include "sh1d/reconstruction.hpp"
#include "sh1d/types.hpp"

namespace sh1d {

enum class EulerianBc {
  InflowOutflow,  ///< pinned left state, second-order extrapolated right end
  Wall,           ///< reflective (momentum mirrored)
  Transparent,    ///< zero-gradient copy
};

enum class DerivativeForm {
  Jacobian,      ///< dw/dt = -A w'/dx + s
  JacobianFree,  ///< dw/dt = -f'/dx + s with f' reconstructed like w
};

/// Uniform staggered grid of cell averages. The reference grid has cell k on
/// [x_ref + k dx, x_ref + (k+1) dx]; at phase 1 every cell is shifted by
/// dx/2. The phase toggles on every accepted step.
struct EulerianField {
  double x_ref = 0.0;
  double dx = 1.0;
  int phase = 0;
  double t = 0.0;
  std::vector<Conserved> w;
  std::vector<double> beta;
  EulerianBc bc = EulerianBc::Transparent;
  Conserved inflow_left{};

  int cells() const { return static_cast<int>(w.size()); }
  double left_edge() const { return x_ref + 0.5 * dx * phase; }
  double edge(int j) const { return left_edge() + j * dx; }
  double center(int j) const { return left_edge() + (j + 0.5) * dx; }
};

struct NocOptions {
  ReconMethod method = ReconMethod::Superbee;
  DerivativeForm derivative = DerivativeForm::Jacobian;
};

/// Exact cell averages of the initial profile on the reference grid.
EulerianField initial_cell_averages(const InitialProfile& profile,
                                    double x_left, double dx, int n_cells);

/// Refresh the per-cell pressure factor from the centred velocity
/// differences (one-sided at the ends and beside dry cells).
void update_beta(EulerianField& field, const MaterialParams& params,
                 const Track& track);

/// Largest admissible time step: cfl * dx / a_max, capped by the remaining
/// time to t_checkpoint; the cap alone when the field is all dry. Requires
/// 0 < cfl < 1/2 strictly.
double cfl_dt(const EulerianField& field, double cfl_number,
              double t_checkpoint);

/// Boundary assignments on the stored cells: InflowOutflow pins cell 0 and
/// extrapolates the last cell as (4 w_{N-2} - w_{N-3})/3; the other modes
/// need no post-assignment.
void apply_eulerian_bc(EulerianField& field);

/// Reconstruction of the field (one-sided at the physical ends).
Reconstruction reconstruct(const EulerianField& field, ReconMethod method);

/// Temporal derivative estimate of cell j used by the half-time Taylor
/// extrapolations; zero on dry cells.
std::array<double, 2> time_derivative(const EulerianField& field,
                                      const Reconstruction& recon, int j,
                                      const MaterialParams& params,
                                      const Track& track,
                                      DerivativeForm form = DerivativeForm::Jacobian);

/// One staggered step: new averages live on the old cell-centre intervals,
/// the output phase is flipped. The provided reconstruction must belong to
/// the field. Throws SolverError on CFL violation or negative depth.
EulerianField noc_step(const EulerianField& field, const Reconstruction& recon,
                       double dt, const MaterialParams& params,
                       const Track& track,
                       DerivativeForm form = DerivativeForm::Jacobian);

/// reconstruct + noc_step + boundary assignments + beta refresh.
void noc_advance(EulerianField& field, double dt, const MaterialParams& params,
                 const Track& track, const NocOptions& options);

/// Map the field to reference-grid averages (two-cell mean at phase 1; the
/// first reference cell copies its staggered neighbour). Solver state is
/// never de-staggered; this is for output and error measurement only.
std::vector<Conserved> destagger(const EulerianField& field);

double total_mass(const EulerianField& field);
double total_momentum(const EulerianField& field);

}  // namespace sh1d

#endif
