#ifndef SH1D_STAGGERED_DETAIL_HPP
#define SH1D_STAGGERED_DETAIL_HPP

// Shared internals of the staggered update, used by the plain scheme and by
// the front-tracking extension. Not installed.

#include <array>
#include <vector>

#include "sh1d/front_tracking.hpp"
#include "sh1d/noc.hpp"
#include "sh1d/reconstruction.hpp"
#include "sh1d/types.hpp"

namespace sh1d::detail {

struct PaddedCell {
  Conserved w{};
  double beta = 0.0;
  CellPoly ph{}, pm{};
  double center = 0.0;
  std::array<double, 2> dwdt{};
  std::array<double, 2> flux_half{};          // f(w + dt/2 dw/dt) at the centre
  std::array<double, 2> src_half{};           // source at (x_j, t + dt/2)
  std::array<double, 2> src_quarter_right{};  // source at (x_j + dx/4, t + dt/2)
  std::array<double, 2> src_quarter_left{};   // source at (x_j - dx/4, t + dt/2)
};

struct PaddedField {
  static constexpr int ghosts = 2;
  int n = 0;
  double dx = 0.0;
  std::vector<PaddedCell> cells;  // indices -ghosts .. n+ghosts-1

  const PaddedCell& at(int j) const { return cells[j + ghosts]; }
  PaddedCell& at(int j) { return cells[j + ghosts]; }
};

PaddedField build_padded(const EulerianField& field, const Reconstruction& recon,
                         const MaterialParams& params, const Track& track,
                         DerivativeForm form, double dt);

/// Average over [x_i, x_{i+1}] (the staggered cell between the centres of
/// padded cells i and i+1) after one step of length dt.
Conserved staggered_value(const PaddedField& p, int i, double dt);

/// Margin-cell update reusing an already-built padded field.
MarginUpdate margin_update_from_padded(const EulerianField& field,
                                       const PaddedField& padded,
                                       const Margin& margin, double dt,
                                       const MaterialParams& params,
                                       const Track& track, int margin_order,
                                       FtDiagnostics* diag);

}  // namespace sh1d::detail

#endif
