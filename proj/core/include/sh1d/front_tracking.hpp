#ifndef SH1D_FRONT_TRACKING_HPP
#define SH1D_FRONT_TRACKING_HPP

#include <array>

#include "sh1d/noc.hpp"
#include "sh1d/types.hpp"

namespace sh1d {

enum class MarginKind { Front, Tail };

/// A vacuum margin: the front bounds material on its left, the tail on its
/// right. The margin point lies inside its margin cell.
struct Margin {
  MarginKind kind;
  double x_pos;
  int cell_index;
  double u_margin;
};

/// Slopes of the linear depth/momentum reconstructions that vanish at the
/// margin point and preserve the margin-cell averages; sigma_m = u * sigma_h.
struct MarginReconstruction {
  double sigma_h;
  double sigma_m;
};

enum class CaseId { I = 0, II = 1, III = 2, IV = 3 };

/// Geometry of one margin step relative to the crossable grid point (the
/// margin cell centre). Times are offsets from the step start.
struct CaseGeometry {
  CaseId id;
  double t_star;      ///< crossing time (cases III/IV; NaN otherwise)
  double t_bar;       ///< flux quadrature node time
  double dt_bar;      ///< effective flux interval
  double alpha_f;     ///< mass fraction beyond the grid point
  double omega_prev;  ///< source weight anchored at the inner centre
  double omega_cell;  ///< source weight anchored at the crossable centre
};

/// Margin-cell reconstruction vanishing at x_margin:
/// sigma_h = -/+ 2 h dx / (wet width)^2 for front/tail.
/// Throws SolverError when the wet width degenerates (< 1e-12 dx).
MarginReconstruction margin_reconstruct(const Conserved& w_cell, double x_margin,
                                        double cell_left, double cell_right,
                                        MarginKind kind);

/// Margin velocity: order 1 is the constant cell value m/h; order 2 adds the
/// half-step correction (dt/2)(s - beta sigma_h), using that the depth
/// vanishes at the margin. Throws SolverError on a dry margin cell.
double margin_velocity(const Conserved& w_cell, const MarginReconstruction& recon,
                       double beta, double x_margin, const MaterialParams& params,
                       const Track& track, double dt, int order);

/// Classify a front-oriented margin move against the grid point x_center_pt
/// and derive all quadrature weights. Mirror the coordinates to use it for
/// the tail. Ties (x_new exactly on the point) resolve to the non-crossing
/// case; the crossing-time formulas are continuous across the tie.
/// Throws SolverError if the move reaches dx/2 (grid point skipped).
CaseGeometry classify_case(double x_old, double x_new, double x_center_pt,
                           double dx, double dt);

/// Quadrature weight omega = (tau/3)(a^2 + ab + b^2)/(a + b), exact for
/// linear integrands vanishing on the slanted edge of the space-time
/// trapezoid with parallel sides a and b.
double source_weight(double a, double b, double tau);

struct ExtrapolatedState {
  Conserved w;
  bool clipped;  ///< negative depth clipped to vacuum
};

/// Space-time Taylor value at the grid point at time offset tau:
/// h = sigma_h ((x_pt - x_margin) - u_margin tau), m = u_margin h.
ExtrapolatedState extrapolate_margin_state(const MarginReconstruction& recon,
                                           double x_pt, double x_margin,
                                           double u_margin, double tau);

struct FtDiagnostics {
  long clip_count = 0;            ///< negative extrapolated point values
  long negative_clamps = 0;       ///< tiny negative averages clamped to zero
  std::array<long, 4> case_histogram{};
};

/// NOC field plus tracked margins.
struct FrontTrackedField {
  EulerianField field;
  Margin front;
  Margin tail;
  FtDiagnostics diag;
};

/// Margin-region part of one staggered step: the two staggered averages
/// around the margin cell and the propagated margin.
struct MarginUpdate {
  Conserved inner;       ///< staggered cell toward the material
  Conserved outer;       ///< staggered cell toward the vacuum
  int inner_scell;       ///< staggered index (between centres i and i+1)
  int outer_scell;
  double x_new;
  double u_used;
  CaseGeometry geo;
};

/// Cell index containing x; an exact cell-edge position resolves toward the
/// material side of the margin.
int margin_cell_index(const EulerianField& field, double x, MarginKind kind);

/// Field with exact vacuum outside [x_tail, x_front] and initialised margins.
FrontTrackedField ft_init(const InitialProfile& profile, double x_left,
                          double dx, int n_cells, double x_tail, double x_front,
                          const MaterialParams& params, const Track& track);

/// The margin-cell update of one margin for one step of length dt, given the
/// field reconstruction already adjusted near the margins.
MarginUpdate margin_cell_update(const EulerianField& field, const Margin& margin,
                                const Reconstruction& recon, double dt,
                                const MaterialParams& params, const Track& track,
                                int margin_order, FtDiagnostics* diag);

/// One full staggered step with tracked margins: interior cells follow the
/// plain scheme, the two staggered cells around each margin follow the
/// margin-cell update, cells fully beyond the margins become exact vacuum.
void ft_advance(FrontTrackedField& ft, double dt, const MaterialParams& params,
                const Track& track, const NocOptions& options,
                int margin_order = 2);

}  // namespace sh1d

#endif
