#include "sh1d/noc.hpp"

#include <algorithm>
#include <cmath>

#include "sh1d/model.hpp"
#include "src/staggered_detail.hpp"

namespace sh1d {

EulerianField initial_cell_averages(const InitialProfile& profile,
                                    double x_left, double dx, int n_cells) {
  if (n_cells < 3) throw std::invalid_argument("initial_cell_averages: need n >= 3");
  if (dx <= 0.0) throw std::invalid_argument("initial_cell_averages: dx must be positive");
  EulerianField f;
  f.x_ref = x_left;
  f.dx = dx;
  f.w.resize(n_cells);
  f.beta.assign(n_cells, 0.0);
  for (int j = 0; j < n_cells; ++j) {
    Conserved avg = profile.cell_average(f.edge(j), f.edge(j + 1));
    if (avg.h < dry_tolerance) avg = {0.0, 0.0};
    f.w[j] = avg;
  }
  return f;
}

void update_beta(EulerianField& field, const MaterialParams& params,
                 const Track& track) {
  const int n = field.cells();
  field.beta.resize(n);
  for (int j = 0; j < n; ++j) {
    const bool left_ok = j > 0 && !field.w[j - 1].dry();
    const bool right_ok = j < n - 1 && !field.w[j + 1].dry();
    double du = 0.0;
    if (!field.w[j].dry()) {
      if (left_ok && right_ok)
        du = field.w[j + 1].u() - field.w[j - 1].u();
      else if (right_ok)
        du = field.w[j + 1].u() - field.w[j].u();
      else if (left_ok)
        du = field.w[j].u() - field.w[j - 1].u();
    }
    field.beta[j] = pressure_factor(params, track.zeta(field.center(j)),
                                    select_branch(du));
  }
}

double cfl_dt(const EulerianField& field, double cfl_number,
              double t_checkpoint) {
  if (cfl_number <= 0.0 || cfl_number >= 0.5)
    throw std::invalid_argument("cfl_dt: Courant number must lie in (0, 1/2)");
  const double remaining = t_checkpoint - field.t;
  if (remaining <= 0.0) return 0.0;
  const double a = max_wave_speed(field.w, field.beta);
  if (a <= 0.0) return remaining;
  return std::min(cfl_number * field.dx / a, remaining);
}

void apply_eulerian_bc(EulerianField& field) {
  if (field.bc != EulerianBc::InflowOutflow) return;
  const int n = field.cells();
  if (n < 3) throw std::invalid_argument("apply_eulerian_bc: need n >= 3");
  field.w[0] = field.inflow_left;
  // Zero-gradient at the right edge via second-order one-sided extrapolation.
  field.w[n - 1].h = (4.0 * field.w[n - 2].h - field.w[n - 3].h) / 3.0;
  field.w[n - 1].m = (4.0 * field.w[n - 2].m - field.w[n - 3].m) / 3.0;
  if (field.w[n - 1].h < dry_tolerance) field.w[n - 1] = {0.0, 0.0};
}

Reconstruction reconstruct(const EulerianField& field, ReconMethod method) {
  return reconstruct_states(field.w, method);
}

namespace detail {

PaddedField build_padded(const EulerianField& field, const Reconstruction& recon,
                         const MaterialParams& params, const Track& track,
                         DerivativeForm form, double dt) {
  const int n = field.cells();
  PaddedField p;
  p.n = n;
  p.dx = field.dx;
  p.cells.resize(n + 2 * PaddedField::ghosts);

  auto& cells = p.cells;
  const int G = PaddedField::ghosts;

  // Interior copies with the caller's reconstruction.
  for (int j = 0; j < n; ++j) {
    PaddedCell& c = cells[j + G];
    c.w = field.w[j];
    c.beta = field.beta[j];
    c.ph = recon.h[j];
    c.pm = recon.m[j];
  }

  // Ghost values by boundary condition.
  for (int k = 1; k <= G; ++k) {
    PaddedCell& lg = cells[G - k];
    PaddedCell& rg = cells[G + n - 1 + k];
    switch (field.bc) {
      case EulerianBc::InflowOutflow:
        lg.w = field.inflow_left;
        rg.w = {(4.0 * cells[G + n - 2 + k].w.h - cells[G + n - 3 + k].w.h) / 3.0,
                (4.0 * cells[G + n - 2 + k].w.m - cells[G + n - 3 + k].w.m) / 3.0};
        if (rg.w.h < dry_tolerance) rg.w = {0.0, 0.0};
        break;
      case EulerianBc::Wall:
        lg.w = {field.w[k - 1].h, -field.w[k - 1].m};
        rg.w = {field.w[n - k].h, -field.w[n - k].m};
        break;
      case EulerianBc::Transparent:
        lg.w = field.w[0];
        rg.w = field.w[n - 1];
        break;
    }
    lg.beta = field.beta[0];
    rg.beta = field.beta[n - 1];
  }

  // Ghost reconstructions use the padded stencil (outermost ghosts keep
  // zero slopes; their staggered cells are never retained).
  for (int k : {G - 1, G + n}) {
    const PaddedCell& lo = cells[k - 1];
    const PaddedCell& hi = cells[k + 1];
    PaddedCell& c = cells[k];
    if (c.w.dry()) {
      c.ph = {0.0, 0.0, 0.0};
      c.pm = {0.0, 0.0, 0.0};
    } else {
      c.ph = cell_poly(c.w.h, c.w.h - lo.w.h, hi.w.h - c.w.h, recon.method);
      c.pm = cell_poly(c.w.m, c.w.m - lo.w.m, hi.w.m - c.w.m, recon.method);
    }
  }
  cells[0].ph = {cells[0].w.h, 0.0, 0.0};
  cells[0].pm = {cells[0].w.m, 0.0, 0.0};
  cells.back().ph = {cells.back().w.h, 0.0, 0.0};
  cells.back().pm = {cells.back().w.m, 0.0, 0.0};

  // Per-cell half-time extrapolations, fluxes and quarter-point sources.
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    PaddedCell& c = cells[i];
    const int j = i - G;
    c.center = field.center(j);
    double dwdt_h = 0.0, dwdt_m = 0.0;
    if (!c.w.dry()) {
      double dfdx_h, dfdx_m;
      if (form == DerivativeForm::Jacobian) {
        const double u = c.w.u();
        dfdx_h = c.pm.slope() / p.dx;
        dfdx_m = ((c.beta * c.w.h - u * u) * c.ph.slope() + 2.0 * u * c.pm.slope()) / p.dx;
      } else {
        // Flux derivative reconstructed from neighbouring flux values.
        auto fl = (i > 0) ? flux(cells[i - 1].w, cells[i - 1].beta)
                          : flux(c.w, c.beta);
        auto fc = flux(c.w, c.beta);
        auto fr = (i + 1 < static_cast<int>(cells.size()))
                      ? flux(cells[i + 1].w, cells[i + 1].beta)
                      : fc;
        dfdx_h = cell_poly(fc[0], fc[0] - fl[0], fr[0] - fc[0], recon.method).slope() / p.dx;
        dfdx_m = cell_poly(fc[1], fc[1] - fl[1], fr[1] - fc[1], recon.method).slope() / p.dx;
      }
      const auto s = source(c.w, c.center, params, track);
      dwdt_h = -dfdx_h + s[0];
      dwdt_m = -dfdx_m + s[1];
    }
    c.dwdt = {dwdt_h, dwdt_m};

    const Conserved w_half{c.w.h + 0.5 * dt * dwdt_h, c.w.m + 0.5 * dt * dwdt_m};
    c.flux_half = flux(w_half, c.beta);
    c.src_half = source(w_half, c.center, params, track);

    const Conserved q_right{c.w.h + 0.5 * dt * dwdt_h + (c.ph.right_half_avg() - c.w.h),
                            c.w.m + 0.5 * dt * dwdt_m + (c.pm.right_half_avg() - c.w.m)};
    const Conserved q_left{c.w.h + 0.5 * dt * dwdt_h + (c.ph.left_half_avg() - c.w.h),
                           c.w.m + 0.5 * dt * dwdt_m + (c.pm.left_half_avg() - c.w.m)};
    c.src_quarter_right = source(q_right, c.center + 0.25 * p.dx, params, track);
    c.src_quarter_left = source(q_left, c.center - 0.25 * p.dx, params, track);
  }
  return p;
}

Conserved staggered_value(const PaddedField& p, int i, double dt) {
  const PaddedCell& a = p.at(i);
  const PaddedCell& b = p.at(i + 1);
  const double lam = dt / p.dx;
  const double h = 0.5 * (a.ph.right_half_avg() + b.ph.left_half_avg()) -
                   lam * (b.flux_half[0] - a.flux_half[0]) +
                   0.5 * dt * (a.src_quarter_right[0] + b.src_quarter_left[0]);
  const double m = 0.5 * (a.pm.right_half_avg() + b.pm.left_half_avg()) -
                   lam * (b.flux_half[1] - a.flux_half[1]) +
                   0.5 * dt * (a.src_quarter_right[1] + b.src_quarter_left[1]);
  return {h, m};
}

}  // namespace detail

std::array<double, 2> time_derivative(const EulerianField& field,
                                      const Reconstruction& recon, int j,
                                      const MaterialParams& params,
                                      const Track& track, DerivativeForm form) {
  const Conserved& w = field.w[j];
  if (w.dry()) return {0.0, 0.0};
  const int n = field.cells();
  double dfdx_h, dfdx_m;
  if (form == DerivativeForm::Jacobian) {
    const double u = w.u();
    dfdx_h = recon.m[j].slope() / field.dx;
    dfdx_m = ((field.beta[j] * w.h - u * u) * recon.h[j].slope() +
              2.0 * u * recon.m[j].slope()) / field.dx;
  } else {
    const auto fc = flux(w, field.beta[j]);
    const auto fl = (j > 0) ? flux(field.w[j - 1], field.beta[j - 1]) : fc;
    const auto fr = (j < n - 1) ? flux(field.w[j + 1], field.beta[j + 1]) : fc;
    const double dl0 = (j > 0) ? fc[0] - fl[0] : fr[0] - fc[0];
    const double dr0 = (j < n - 1) ? fr[0] - fc[0] : dl0;
    const double dl1 = (j > 0) ? fc[1] - fl[1] : fr[1] - fc[1];
    const double dr1 = (j < n - 1) ? fr[1] - fc[1] : dl1;
    dfdx_h = cell_poly(fc[0], dl0, dr0, recon.method).slope() / field.dx;
    dfdx_m = cell_poly(fc[1], dl1, dr1, recon.method).slope() / field.dx;
  }
  const auto s = source(w, field.center(j), params, track);
  return {-dfdx_h + s[0], -dfdx_m + s[1]};
}

EulerianField noc_step(const EulerianField& field, const Reconstruction& recon,
                       double dt, const MaterialParams& params,
                       const Track& track, DerivativeForm form) {
  const int n = field.cells();
  if (dt <= 0.0) throw std::invalid_argument("noc_step: dt must be positive");
  const double a = max_wave_speed(field.w, field.beta);
  if (dt * a / field.dx >= 0.5)
    throw SolverError("noc_step: CFL condition violated", -1, field.t);

  const detail::PaddedField p =
      detail::build_padded(field, recon, params, track, form, dt);

  // The staggered averages live between the old cell centres, so the cell
  // count alternates between N (aligned) and N-1 (offset by dx/2).
  EulerianField out = field;
  out.phase = 1 - field.phase;
  out.t = field.t + dt;
  const int n_out = (field.phase == 0) ? n - 1 : n + 1;
  out.w.resize(n_out);
  for (int k = 0; k < n_out; ++k) {
    Conserved s = detail::staggered_value(p, k - field.phase, dt);
    if (s.h < 0.0) {
      if (s.h < -1e-12)
        throw SolverError("noc_step: negative depth", -1, out.t, k);
      s = {0.0, 0.0};
    }
    if (s.h < dry_tolerance) s.m = 0.0;
    out.w[k] = s;
  }
  update_beta(out, params, track);
  return out;
}

void noc_advance(EulerianField& field, double dt, const MaterialParams& params,
                 const Track& track, const NocOptions& options) {
  const Reconstruction recon = reconstruct(field, options.method);
  field = noc_step(field, recon, dt, params, track, options.derivative);
  apply_eulerian_bc(field);
  update_beta(field, params, track);
}

std::vector<Conserved> destagger(const EulerianField& field) {
  if (field.phase == 0) return field.w;
  // n offset cells map back to the n+1 reference cells; the two reference
  // end cells see only one staggered neighbour.
  const int n = field.cells();
  std::vector<Conserved> out(n + 1);
  out[0] = field.w[0];
  out[n] = field.w[n - 1];
  for (int k = 1; k < n; ++k)
    out[k] = {0.5 * (field.w[k - 1].h + field.w[k].h),
              0.5 * (field.w[k - 1].m + field.w[k].m)};
  return out;
}

double total_mass(const EulerianField& field) {
  double s = 0.0;
  for (const auto& w : field.w) s += w.h;
  return s * field.dx;
}

double total_momentum(const EulerianField& field) {
  double s = 0.0;
  for (const auto& w : field.w) s += w.m;
  return s * field.dx;
}

}  // namespace sh1d
