#ifndef SH1D_RECONSTRUCTION_HPP
#define SH1D_RECONSTRUCTION_HPP

#include <span>
#include <vector>

#include "sh1d/types.hpp"

namespace sh1d {

enum class ReconMethod {
  MinMod,
  Superbee,
  UnlimitedCentral,
  WenoLinear,
  WenoQuadratic,
};

/// Per-cell polynomial in the scaled coordinate xi = (x - x_j)/dx, xi in
/// [-1/2, 1/2]: value = a0 + a1 xi + a2 xi^2. a2 = 0 for all linear methods.
/// Every method preserves the cell average: a0 + a2/12 == w_j.
struct CellPoly {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0;

  double value(double xi) const { return a0 + xi * (a1 + xi * a2); }
  /// Exact mean over the right half-cell [x_j, x_{j+1/2}].
  double right_half_avg() const { return a0 + 0.25 * a1 + a2 / 12.0; }
  /// Exact mean over the left half-cell [x_{j-1/2}, x_j].
  double left_half_avg() const { return a0 - 0.25 * a1 + a2 / 12.0; }
  /// Cell-mean derivative in units of the cell difference (dw/dx * dx).
  double slope() const { return a1; }
};

struct Reconstruction {
  ReconMethod method = ReconMethod::MinMod;
  std::vector<CellPoly> h;
  std::vector<CellPoly> m;
};

double minmod(double a, double b);
double superbee(double a, double b);

/// Polynomial for one cell from the differences d_left = w_j - w_{j-1} and
/// d_right = w_{j+1} - w_j.
CellPoly cell_poly(double w, double d_left, double d_right, ReconMethod method);

/// Reconstruct a whole array of cell averages. Dry cells get zero slopes;
/// end cells fall back to the one-sided difference (limited against itself).
Reconstruction reconstruct_states(std::span<const Conserved> w, ReconMethod method);

}  // namespace sh1d

#endif
