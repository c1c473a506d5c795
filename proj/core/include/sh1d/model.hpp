#ifndef SH1D_MODEL_HPP
#define SH1D_MODEL_HPP

#include <array>
#include <span>

#include "sh1d/types.hpp"

namespace sh1d {

/// Earth pressure coefficient K_x = 2(1 -/+ sqrt(1 - cos^2(phi)/cos^2(delta))) sec^2(phi) - 1,
/// minus sign on the active branch. Throws std::domain_error when the square
/// root argument is negative.
double earth_pressure_coefficient(const MaterialParams& params,
                                  PressureBranch branch);

/// Branch selection from the local velocity gradient: expanding flow
/// (du/dx > 0) is active, contracting flow passive. The tie du/dx = 0
/// resolves to active, matching the discrete ">=" rule.
PressureBranch select_branch(double du_dx);

/// Longitudinal pressure factor beta_x = epsilon * cos(zeta) * K_x.
double pressure_factor(const MaterialParams& params, double zeta,
                       PressureBranch branch);

/// Net driving acceleration
///   s_x = sin(zeta) - sgn(u) tan(delta) (cos(zeta) + lambda*kappa u^2)
///         - epsilon cos(zeta) dzb/dx,
/// with sgn(0) = 0 so resting material feels no Coulomb drive.
double driving_acceleration(double u, double x, const MaterialParams& params,
                            const Track& track);

/// Flux (m, m^2/h + beta h^2/2); identically zero below the dry tolerance.
std::array<double, 2> flux(const Conserved& w, double beta);

/// Source (0, h s_x); identically zero below the dry tolerance.
std::array<double, 2> source(const Conserved& w, double x,
                             const MaterialParams& params, const Track& track);

/// Flux Jacobian rows ((0,1), (beta h - u^2, 2u)); eigenvalues u -/+ sqrt(beta h).
/// Throws SolverError on a dry state.
std::array<std::array<double, 2>, 2> jacobian(const Conserved& w, double beta);

/// Largest wave speed max_j |u_j| + sqrt(beta_j h_j) over wet cells;
/// zero for an all-dry field.
double max_wave_speed(std::span<const Conserved> w, std::span<const double> beta);

}  // namespace sh1d

#endif
