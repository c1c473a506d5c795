#ifndef SH1D_LAGRANGIAN_HPP
#define SH1D_LAGRANGIAN_HPP

#include <vector>

#include "sh1d/initial_profile.hpp"
#include "sh1d/types.hpp"

namespace sh1d {

enum class LagrangianBc {
  MarginVacuum,   ///< depth vanishes at the end boundaries (free margins)
  InflowOutflow,  ///< zero depth gradient at both ends
};

/// Material cells with conserved volumes. Cell j occupies [b[j], b[j+1]];
/// boundary velocities live at the staggered half time level.
struct LagrangianMesh {
  std::vector<double> b;       ///< boundary positions, size N+1, increasing
  std::vector<double> u_half;  ///< boundary velocities at t^{n-1/2}, size N+1
  std::vector<double> volume;  ///< per-cell volumes, size N, fixed after init
  std::vector<double> h;       ///< derived mean depths, size N
  double t = 0.0;
  long step_count = 0;

  int cells() const { return static_cast<int>(volume.size()); }
  double center(int j) const { return 0.5 * (b[j] + b[j + 1]); }
  double width(int j) const { return b[j + 1] - b[j]; }
};

/// Exterior closure derived from the boundary condition: depth gradients and
/// boundary depths used at the two end boundaries.
struct BoundaryClosure {
  double grad_h_left;
  double grad_h_right;
  double h_left;
  double h_right;
};

struct LagrangianOptions {
  LagrangianBc bc = LagrangianBc::MarginVacuum;
  /// Keep the earth-pressure-gradient part of the velocity update. The
  /// original moving-grid scheme dropped it; it vanishes anyway whenever
  /// phi == delta on a plane chute.
  bool pressure_gradient_term = true;
};

/// Cell averages of the initial profile on uniform boundaries over
/// [x_left, x_right]; boundary velocities are the volume-weighted velocities
/// of the two half-cells meeting at each boundary.
LagrangianMesh lagrangian_init(const InitialProfile& profile, double x_left,
                               double x_right, int n_cells);

/// End-boundary closure for the requested condition. MarginVacuum pins the
/// exterior depth to zero; InflowOutflow zeroes the end depth gradients.
BoundaryClosure apply_boundary(const LagrangianMesh& mesh, LagrangianBc bc);

/// One staggered step: boundary velocities advance to t^{n+1/2} by the
/// non-conservative momentum balance, boundaries move with the new
/// velocities, depths follow from the conserved volumes. Throws SolverError
/// on cell inversion.
void lagrangian_step(LagrangianMesh& mesh, double dt,
                     const MaterialParams& params, const Track& track,
                     const LagrangianOptions& options);

double total_volume(const LagrangianMesh& mesh);

/// Total variation of the boundary velocities (oscillation diagnostic).
double velocity_total_variation(const LagrangianMesh& mesh);

}  // namespace sh1d

#endif
