#include "sh1d/model.hpp"

#include <algorithm>
#include <cmath>

namespace sh1d {

double earth_pressure_coefficient(const MaterialParams& params,
                                  PressureBranch branch) {
  const double cp = std::cos(params.phi);
  const double cd = std::cos(params.delta);
  const double arg = 1.0 - (cp * cp) / (cd * cd);
  if (arg < -1e-14)
    throw std::domain_error(
        "earth_pressure_coefficient: cos^2(phi) > cos^2(delta)");
  const double root = std::sqrt(std::max(arg, 0.0));
  const double sign = (branch == PressureBranch::Active) ? -1.0 : 1.0;
  return 2.0 * (1.0 + sign * root) / (cp * cp) - 1.0;
}

PressureBranch select_branch(double du_dx) {
  return du_dx >= 0.0 ? PressureBranch::Active : PressureBranch::Passive;
}

double pressure_factor(const MaterialParams& params, double zeta,
                       PressureBranch branch) {
  return params.epsilon * std::cos(zeta) *
         earth_pressure_coefficient(params, branch);
}

double driving_acceleration(double u, double x, const MaterialParams& params,
                            const Track& track) {
  const double zeta = track.zeta(x);
  const double sgn_u = (u > 0.0) - (u < 0.0);
  return std::sin(zeta) -
         sgn_u * std::tan(params.delta) *
             (std::cos(zeta) + track.lambda_kappa(x) * u * u) -
         params.epsilon * std::cos(zeta) * track.dzb_dx(x);
}

std::array<double, 2> flux(const Conserved& w, double beta) {
  if (w.dry()) return {0.0, 0.0};
  return {w.m, w.m * w.m / w.h + 0.5 * beta * w.h * w.h};
}

std::array<double, 2> source(const Conserved& w, double x,
                             const MaterialParams& params, const Track& track) {
  if (w.dry()) return {0.0, 0.0};
  return {0.0, w.h * driving_acceleration(w.u(), x, params, track)};
}

std::array<std::array<double, 2>, 2> jacobian(const Conserved& w, double beta) {
  if (w.dry()) throw SolverError("jacobian: dry state");
  const double u = w.m / w.h;
  return {{{0.0, 1.0}, {beta * w.h - u * u, 2.0 * u}}};
}

double max_wave_speed(std::span<const Conserved> w,
                      std::span<const double> beta) {
  double a = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j].dry()) continue;
    a = std::max(a, std::abs(w[j].u()) + std::sqrt(beta[j] * w[j].h));
  }
  return a;
}

}  // namespace sh1d
