#include "sh1d/front_tracking.hpp"

#include <algorithm>
#include <cmath>

#include "sh1d/model.hpp"
#include "src/staggered_detail.hpp"

namespace sh1d {

MarginReconstruction margin_reconstruct(const Conserved& w_cell, double x_margin,
                                        double cell_left, double cell_right,
                                        MarginKind kind) {
  if (w_cell.h < dry_tolerance) return {0.0, 0.0};
  const double dx = cell_right - cell_left;
  const double wet = (kind == MarginKind::Front) ? x_margin - cell_left
                                                 : cell_right - x_margin;
  if (wet < 1e-12 * dx)
    throw SolverError("margin_reconstruct: degenerate wet width");
  const double sign = (kind == MarginKind::Front) ? -1.0 : 1.0;
  const double sigma_h = sign * 2.0 * w_cell.h * dx / (wet * wet);
  return {sigma_h, w_cell.u() * sigma_h};
}

double margin_velocity(const Conserved& w_cell, const MarginReconstruction& recon,
                       double beta, double x_margin, const MaterialParams& params,
                       const Track& track, double dt, int order) {
  if (w_cell.h <= dry_tolerance)
    throw SolverError("margin_velocity: dry margin cell");
  const double u = w_cell.u();
  if (order == 1) return u;
  const double s = driving_acceleration(u, x_margin, params, track);
  return u + 0.5 * dt * (s - beta * recon.sigma_h);
}

CaseGeometry classify_case(double x_old, double x_new, double x_center_pt,
                           double dx, double dt) {
  const double s_old = x_old - x_center_pt;
  const double s_new = x_new - x_center_pt;
  if (std::abs(x_new - x_old) >= 0.5 * dx)
    throw SolverError("classify_case: margin would skip a grid point");

  CaseGeometry g{};
  g.t_star = std::nan("");
  // Inner anchor sits one cell inward of the crossable point; both distances
  // are positive under the step-size restriction.
  g.omega_prev = source_weight(s_old + dx, s_new + dx, dt);

  if (s_old <= 0.0) {
    if (s_new <= 0.0) {  // case I: stays on the inner side
      g.id = CaseId::I;
      g.t_bar = 0.0;
      g.dt_bar = 0.0;
      g.alpha_f = 0.0;
      g.omega_cell = 0.0;
    } else {  // case III: crosses outward
      g.id = CaseId::III;
      g.t_star = dt * (-s_old) / (s_new - s_old);
      g.dt_bar = dt - g.t_star;
      g.t_bar = 0.5 * (dt + g.t_star);
      g.alpha_f = 0.0;
      g.omega_cell = g.dt_bar / 3.0 * s_new;
    }
  } else {
    const double a = s_old / (s_old + 0.5 * dx);
    if (s_new >= 0.0) {  // case II: stays on the outer side (tie included)
      g.id = CaseId::II;
      g.t_bar = 0.5 * dt;
      g.dt_bar = dt;
      g.alpha_f = a * a;
      g.omega_cell = source_weight(s_old, s_new, dt);
    } else {  // case IV: crosses inward
      g.id = CaseId::IV;
      g.t_star = dt * s_old / (s_old - s_new);
      g.dt_bar = g.t_star;
      g.t_bar = 0.5 * g.t_star;
      g.alpha_f = a * a;
      g.omega_cell = g.dt_bar / 3.0 * s_old;
    }
  }
  return g;
}

double source_weight(double a, double b, double tau) {
  if (a < 0.0 || b < 0.0 || tau < 0.0)
    throw std::domain_error("source_weight: arguments must be nonnegative");
  if (a + b <= 0.0)
    throw std::domain_error("source_weight: a + b must be positive");
  return tau / 3.0 * (a * a + a * b + b * b) / (a + b);
}

ExtrapolatedState extrapolate_margin_state(const MarginReconstruction& recon,
                                           double x_pt, double x_margin,
                                           double u_margin, double tau) {
  const double h = recon.sigma_h * ((x_pt - x_margin) - u_margin * tau);
  if (h < 0.0) return {{0.0, 0.0}, true};
  return {{h, u_margin * h}, false};
}

int margin_cell_index(const EulerianField& field, double x, MarginKind kind) {
  const double r = (x - field.left_edge()) / field.dx;
  int k;
  if (kind == MarginKind::Front)
    k = static_cast<int>(std::ceil(r - 1e-12)) - 1;  // edge ties go left (wet)
  else
    k = static_cast<int>(std::floor(r + 1e-12));  // edge ties go right (wet)
  return std::clamp(k, 0, field.cells() - 1);
}

FrontTrackedField ft_init(const InitialProfile& profile, double x_left,
                          double dx, int n_cells, double x_tail, double x_front,
                          const MaterialParams& params, const Track& track) {
  if (x_front <= x_tail) throw std::invalid_argument("ft_init: empty body");
  FrontTrackedField ft;
  ft.field = initial_cell_averages(profile, x_left, dx, n_cells);
  ft.field.bc = EulerianBc::Transparent;
  for (int j = 0; j < n_cells; ++j) {
    if (ft.field.edge(j) >= x_front || ft.field.edge(j + 1) <= x_tail)
      ft.field.w[j] = {0.0, 0.0};
  }
  update_beta(ft.field, params, track);

  const int fc = margin_cell_index(ft.field, x_front, MarginKind::Front);
  const int tc = margin_cell_index(ft.field, x_tail, MarginKind::Tail);
  ft.front = {MarginKind::Front, x_front, fc, ft.field.w[fc].u()};
  ft.tail = {MarginKind::Tail, x_tail, tc, ft.field.w[tc].u()};
  return ft;
}

MarginUpdate margin_cell_update(const EulerianField& field, const Margin& margin,
                                const Reconstruction& recon, double dt,
                                const MaterialParams& params, const Track& track,
                                int margin_order, FtDiagnostics* diag) {
  const detail::PaddedField padded = detail::build_padded(
      field, recon, params, track, DerivativeForm::Jacobian, dt);
  return detail::margin_update_from_padded(field, padded, margin, dt, params,
                                           track, margin_order, diag);
}

namespace detail {

MarginUpdate margin_update_from_padded(const EulerianField& field,
                                       const PaddedField& padded,
                                       const Margin& margin, double dt,
                                       const MaterialParams& params,
                                       const Track& track, int margin_order,
                                       FtDiagnostics* diag) {
  const int k = margin.cell_index;
  const int dir = (margin.kind == MarginKind::Front) ? 1 : -1;
  const double dx = field.dx;
  const double xc = field.center(k);
  const Conserved wk = field.w[k];
  const double beta_k = field.beta[k];

  const MarginReconstruction recon_m = margin_reconstruct(
      wk, margin.x_pos, field.edge(k), field.edge(k + 1), margin.kind);

  // A hairline sliver of material carries no usable cell velocity; keep the
  // margin moving with its previous speed for this step.
  double u_m;
  if (wk.h <= dry_tolerance)
    u_m = margin.u_margin;
  else
    u_m = margin_velocity(wk, recon_m, beta_k, margin.x_pos, params, track, dt,
                          margin_order);

  const double x_new = margin.x_pos + dt * u_m;
  const CaseGeometry geo = classify_case(dir * margin.x_pos, dir * x_new,
                                         dir * xc, dx, dt);

  // The grid-point state only enters through dt_bar and omega_cell; in case I
  // both vanish and the extrapolation is not evaluated.
  ExtrapolatedState ex{{0.0, 0.0}, false};
  if (geo.dt_bar > 0.0 || geo.omega_cell > 0.0) {
    ex = extrapolate_margin_state(recon_m, xc, margin.x_pos, u_m, geo.t_bar);
    if (ex.clipped && diag) ++diag->clip_count;
  }
  const auto f_bar = flux(ex.w, beta_k);
  const auto s_bar = source(ex.w, xc, params, track);

  const PaddedCell& inner_cell = padded.at(k - dir);
  const double q_inner_h = (dir > 0) ? inner_cell.ph.right_half_avg()
                                     : inner_cell.ph.left_half_avg();
  const double q_inner_m = (dir > 0) ? inner_cell.pm.right_half_avg()
                                     : inner_cell.pm.left_half_avg();

  MarginUpdate up;
  up.geo = geo;
  up.x_new = x_new;
  up.u_used = u_m;
  up.inner_scell = (dir > 0) ? k - 1 : k;
  up.outer_scell = (dir > 0) ? k : k - 1;

  const double lam = dt / dx;
  up.inner.h = 0.5 * q_inner_h + (1.0 - geo.alpha_f) * wk.h +
               dir * (lam * inner_cell.flux_half[0] - geo.dt_bar / dx * f_bar[0]) +
               geo.omega_prev / dx * inner_cell.src_half[0] -
               geo.omega_cell / dx * s_bar[0];
  up.inner.m = 0.5 * q_inner_m + (1.0 - geo.alpha_f) * wk.m +
               dir * (lam * inner_cell.flux_half[1] - geo.dt_bar / dx * f_bar[1]) +
               geo.omega_prev / dx * inner_cell.src_half[1] -
               geo.omega_cell / dx * s_bar[1];
  up.outer.h = geo.alpha_f * wk.h + dir * geo.dt_bar / dx * f_bar[0] +
               geo.omega_cell / dx * s_bar[0];
  up.outer.m = geo.alpha_f * wk.m + dir * geo.dt_bar / dx * f_bar[1] +
               geo.omega_cell / dx * s_bar[1];
  return up;
}

}  // namespace detail

namespace {

const char* case_name(CaseId id) {
  switch (id) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
    case CaseId::IV: return "IV";
  }
  return "?";
}

Conserved clamp_margin_value(Conserved s, CaseId id, double t, int cell,
                             FtDiagnostics& diag) {
  if (s.h < 0.0) {
    if (s.h < -1e-12)
      throw SolverError(std::string("front tracking: negative margin average (case ") +
                            case_name(id) + ")",
                        -1, t, cell);
    s = {0.0, 0.0};
    ++diag.negative_clamps;
  }
  if (s.h < dry_tolerance) s.m = 0.0;
  return s;
}

}  // namespace

void ft_advance(FrontTrackedField& ft, double dt, const MaterialParams& params,
                const Track& track, const NocOptions& options, int margin_order) {
  EulerianField& field = ft.field;
  const int n = field.cells();
  if (dt <= 0.0) throw std::invalid_argument("ft_advance: dt must be positive");

  const double a = max_wave_speed(field.w, field.beta);
  if (dt * a / field.dx >= 0.5)
    throw SolverError("ft_advance: CFL condition violated", -1, field.t);

  const int fc = margin_cell_index(field, ft.front.x_pos, MarginKind::Front);
  const int tc = margin_cell_index(field, ft.tail.x_pos, MarginKind::Tail);
  ft.front.cell_index = fc;
  ft.tail.cell_index = tc;
  if (fc - tc < 4)
    throw SolverError("ft_advance: avalanche body thinner than the margin stencil",
                      -1, field.t);
  // The four margin staggered cells must land inside the output window.
  if (tc - 1 + field.phase < 0 || fc + field.phase > n - 2 + 2 * field.phase)
    throw SolverError("ft_advance: margin too close to the domain boundary", -1,
                      field.t);

  // Reconstruction with margin adjustments: the margin cells are handled by
  // the margin-cell update (zero their slopes here), and the cells adjacent
  // to them always use the piecewise linear blend, whatever the interior
  // method. The smooth blend matters: a compressive limiter next to the
  // margin oversteepens the depth and starves the tail.
  Reconstruction recon = reconstruct_states(field.w, options.method);
  for (int k : {fc, tc}) {
    recon.h[k] = {field.w[k].h, 0.0, 0.0};
    recon.m[k] = {field.w[k].m, 0.0, 0.0};
  }
  for (int k : {fc - 1, fc - 2, tc + 1, tc + 2}) {
    const Conserved& w = field.w[k];
    if (w.dry()) continue;
    recon.h[k] = cell_poly(w.h, w.h - field.w[k - 1].h, field.w[k + 1].h - w.h,
                           ReconMethod::WenoLinear);
    recon.m[k] = cell_poly(w.m, w.m - field.w[k - 1].m, field.w[k + 1].m - w.m,
                           ReconMethod::WenoLinear);
  }

  const detail::PaddedField padded =
      detail::build_padded(field, recon, params, track, options.derivative, dt);

  const MarginUpdate fup = detail::margin_update_from_padded(
      field, padded, ft.front, dt, params, track, margin_order, &ft.diag);
  const MarginUpdate tup = detail::margin_update_from_padded(
      field, padded, ft.tail, dt, params, track, margin_order, &ft.diag);

  EulerianField out = field;
  out.phase = 1 - field.phase;
  out.t = field.t + dt;
  const int n_out = (field.phase == 0) ? n - 1 : n + 1;
  out.w.resize(n_out);

  // Plain staggered update everywhere; the margin regions are replaced below.
  for (int k = 0; k < n_out; ++k)
    out.w[k] = detail::staggered_value(padded, k - field.phase, dt);

  auto assign = [&](int scell, Conserved value, CaseId id) {
    const int idx = scell + field.phase;
    out.w[idx] = clamp_margin_value(value, id, out.t, idx, ft.diag);
  };
  assign(fup.inner_scell, fup.inner, fup.geo.id);
  assign(fup.outer_scell, fup.outer, fup.geo.id);
  assign(tup.inner_scell, tup.inner, tup.geo.id);
  assign(tup.outer_scell, tup.outer, tup.geo.id);

  // Exact vacuum beyond the propagated margins.
  for (int k = 0; k < n_out; ++k) {
    if (out.edge(k) >= fup.x_new || out.edge(k + 1) <= tup.x_new)
      out.w[k] = {0.0, 0.0};
    else if (out.w[k].h < 0.0)
      out.w[k] = clamp_margin_value(out.w[k], CaseId::I, out.t, k, ft.diag);
    else if (out.w[k].h < dry_tolerance)
      out.w[k].m = 0.0;
  }

  update_beta(out, params, track);
  field = std::move(out);

  ft.diag.case_histogram[static_cast<int>(fup.geo.id)]++;
  ft.diag.case_histogram[static_cast<int>(tup.geo.id)]++;
  ft.front.x_pos = fup.x_new;
  ft.front.u_margin = fup.u_used;
  ft.front.cell_index = margin_cell_index(field, fup.x_new, MarginKind::Front);
  ft.tail.x_pos = tup.x_new;
  ft.tail.u_margin = tup.u_used;
  ft.tail.cell_index = margin_cell_index(field, tup.x_new, MarginKind::Tail);
}

}  // namespace sh1d
