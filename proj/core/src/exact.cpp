#include "sh1d/exact.hpp"

#include <algorithm>
#include <cmath>

namespace sh1d {

// ---------------------------------------------------------------------------
// Shock relations
// ---------------------------------------------------------------------------

void ShockSetup::validate() const {
  if (h_plus <= 0.0 || h_minus <= 0.0)
    throw std::domain_error("ShockSetup: thicknesses must be positive");
  if (beta_x <= 0.0) throw std::domain_error("ShockSetup: beta_x must be positive");
  const double H = depth_ratio();
  if (family == ShockFamily::First && H <= 1.0)
    throw std::domain_error("ShockSetup: first family requires H > 1");
  if (family == ShockFamily::Second && H >= 1.0)
    throw std::domain_error("ShockSetup: second family requires H < 1");
}

double velocity_jump(double h_minus, double depth_ratio, double beta_x) {
  if (h_minus <= 0.0 || depth_ratio <= 0.0 || beta_x <= 0.0)
    throw std::domain_error("velocity_jump: inputs must be positive");
  const double q = std::sqrt(beta_x * h_minus * (depth_ratio + 1.0) / 2.0);
  return q * std::abs(depth_ratio - 1.0) / depth_ratio;
}

ShockState shock_speed(const ShockSetup& setup) {
  setup.validate();
  const double H = setup.depth_ratio();
  const double q = std::sqrt(setup.beta_x * setup.h_minus * (H + 1.0) / 2.0);
  // + root pairs with the first family, - with the second; the Lax
  // inequalities then hold on the admissible side of H = 1.
  const double sign = (setup.family == ShockFamily::First) ? 1.0 : -1.0;
  const double u_plus = setup.u_minus + sign * (H - 1.0) / H * q;
  const double v_n = setup.u_minus - sign * q / H;
  return {v_n, u_plus, H};
}

Conserved travelling_shock_solution(double x, double t,
                                    const ShockSetup& setup) {
  const ShockState s = shock_speed(setup);
  const double xs = setup.x0 + s.v_n * t;
  if (x < xs) return {setup.h_plus, setup.h_plus * s.u_plus};
  return {setup.h_minus, setup.h_minus * setup.u_minus};
}

// ---------------------------------------------------------------------------
// Similarity solution
// ---------------------------------------------------------------------------

void SimilaritySetup::validate() const {
  if (g0 <= 0.0) throw std::domain_error("SimilaritySetup: g0 must be positive");
  if (p0 < 0.0)
    throw std::domain_error("SimilaritySetup: contracting start (p0 < 0) unsupported");
  if (total_mass <= 0.0)
    throw std::domain_error("SimilaritySetup: total mass must be positive");
  if (beta_x <= 0.0)
    throw std::domain_error("SimilaritySetup: beta_x must be positive");
}

namespace {

// Antiderivative in the implicit half-width relation:
// Phi(G) = sqrt(G (G - 2K)) + 2K ln(sqrt(G) + sqrt(G - 2K)).
double phi_of(double G, double K2) {
  const double r = std::sqrt(std::max(G - K2, 0.0));
  const double sg = std::sqrt(G);
  return sg * r + K2 * std::log(sg + r);
}

}  // namespace

GrowthState solve_g(double t, const SimilaritySetup& setup) {
  setup.validate();
  if (t < 0.0) throw std::domain_error("solve_g: t must be nonnegative");
  if (t == 0.0) return {setup.g0, setup.p0};

  const double K = setup.spreading_constant();
  const double K2 = 2.0 * K;
  const double ab = K2 / setup.g0 + setup.p0 * setup.p0;  // alpha_g + beta_g
  const double phi0 = phi_of(ab * setup.g0, K2);
  const double rhs = std::pow(ab, 1.5) * t;
  auto residual = [&](double g) { return phi_of(ab * g, K2) - phi0 - rhs; };

  // g' is bounded by sqrt(2K/g0 + p0^2), so this brackets the root.
  double lo = setup.g0;
  double hi = setup.g0 + std::sqrt(ab) * t + 1.0;
  if (residual(hi) < 0.0)
    throw SolverError("solve_g: root bracket failed");

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-15 * hi) break;
  }
  double g = 0.5 * (lo + hi);

  // Newton polish; dPhi/dg = ab sqrt(G)/sqrt(G - 2K), guarded near g0.
  for (int it = 0; it < 4; ++it) {
    const double G = ab * g;
    const double r = std::sqrt(std::max(G - K2, 1e-300));
    const double deriv = ab * std::sqrt(G) / r;
    const double step = residual(g) / deriv;
    const double next = g - step;
    if (next > lo && next < hi) g = next;
  }

  const double scale = std::max(1.0, std::abs(phi0) + rhs);
  if (std::abs(residual(g)) > 1e-13 * scale)
    throw SolverError("solve_g: residual tolerance not met");

  const double gp =
      std::sqrt(K2 * (1.0 / setup.g0 - 1.0 / g) + setup.p0 * setup.p0);
  return {g, gp};
}

double bulk_velocity_u0(double t, const SimilaritySetup& setup) {
  return setup.u00 + t * setup.drive();
}

double center_position(double t, const SimilaritySetup& setup) {
  return setup.x_center0 + setup.u00 * t + 0.5 * setup.drive() * t * t;
}

SimilarityFrame similarity_frame(double t, const SimilaritySetup& setup) {
  const GrowthState gs = solve_g(t, setup);
  const double u0 = bulk_velocity_u0(t, setup);
  if (gs.gp >= u0)
    throw SolverError("similarity solution invalid: g'(t) >= u0(t)", -1, t);
  return {t, gs.g, gs.gp, u0, center_position(t, setup),
          0.75 * setup.total_mass / gs.g};
}

PointState similarity_state(double x, const SimilarityFrame& frame) {
  const double eta = (x - frame.xc) / frame.g;
  if (std::abs(eta) > 1.0) return {0.0, 0.0, 0.0};
  const double h = frame.peak * (1.0 - eta * eta);
  const double u = frame.u0 + eta * frame.gp;
  return {h, u, h * u};
}

PointState similarity_profile(double x, double t, const SimilaritySetup& setup) {
  return similarity_state(x, similarity_frame(t, setup));
}

double similarity_mean_depth(double a, double b, const SimilarityFrame& frame) {
  const double lo = std::max(a, frame.xc - frame.g);
  const double hi = std::min(b, frame.xc + frame.g);
  if (hi <= lo) return 0.0;
  auto anti = [&](double x) {
    const double s = x - frame.xc;
    return frame.peak * (s - s * s * s / (3.0 * frame.g * frame.g));
  };
  return (anti(hi) - anti(lo)) / (b - a);
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

TravellingShockOracle::TravellingShockOracle(const ShockSetup& setup)
    : setup_(setup), state_(shock_speed(setup)) {}

PointState TravellingShockOracle::state(double x, double t) const {
  const Conserved w = (x < shock_position(t))
                          ? Conserved{setup_.h_plus, setup_.h_plus * state_.u_plus}
                          : Conserved{setup_.h_minus, setup_.h_minus * setup_.u_minus};
  return {w.h, w.u(), w.m};
}

double TravellingShockOracle::mean_depth(double a, double b, double t) const {
  const double xs = shock_position(t);
  const double left = std::clamp(xs, a, b) - a;
  const double right = b - std::clamp(xs, a, b);
  return (left * setup_.h_plus + right * setup_.h_minus) / (b - a);
}

SimilarityFrame SimilarityOracle::frame(double t) const {
  if (cached_.t != t) cached_ = similarity_frame(t, setup_);
  return cached_;
}

PointState SimilarityOracle::state(double x, double t) const {
  return similarity_state(x, frame(t));
}

double SimilarityOracle::mean_depth(double a, double b, double t) const {
  return similarity_mean_depth(a, b, frame(t));
}

std::optional<std::pair<double, double>> SimilarityOracle::margins(
    double t) const {
  const SimilarityFrame f = frame(t);
  return std::make_pair(f.xc - f.g, f.xc + f.g);
}

}  // namespace sh1d
