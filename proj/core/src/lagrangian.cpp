#include "sh1d/lagrangian.hpp"

#include <cmath>

#include "sh1d/model.hpp"

namespace sh1d {

LagrangianMesh lagrangian_init(const InitialProfile& profile, double x_left,
                               double x_right, int n_cells) {
  if (n_cells < 2)
    throw std::invalid_argument("lagrangian_init: need at least 2 cells");
  if (x_right <= x_left)
    throw std::invalid_argument("lagrangian_init: empty domain");

  LagrangianMesh mesh;
  mesh.b.resize(n_cells + 1);
  mesh.u_half.resize(n_cells + 1);
  mesh.volume.resize(n_cells);
  mesh.h.resize(n_cells);

  const double w = (x_right - x_left) / n_cells;
  for (int j = 0; j <= n_cells; ++j) mesh.b[j] = x_left + j * w;

  for (int j = 0; j < n_cells; ++j) {
    mesh.volume[j] = profile.integral_depth(mesh.b[j], mesh.b[j + 1]);
    const double width = mesh.b[j + 1] - mesh.b[j];
    if (width <= 0.0) throw SolverError("lagrangian_init: degenerate cell", 0, 0.0, j);
    mesh.h[j] = mesh.volume[j] / width;
  }

  // Volume-weighted velocity of the two half-cells adjacent to each
  // boundary; one-sided at the ends. The first step treats these values as
  // u^{-1/2}, so the startup is first order.
  for (int j = 0; j <= n_cells; ++j) {
    const double lo = (j == 0) ? mesh.b[0] : mesh.center(j - 1);
    const double hi = (j == n_cells) ? mesh.b[n_cells] : mesh.center(j);
    const double mass = profile.integral_depth(lo, hi);
    mesh.u_half[j] = (mass > 1e-300)
                         ? profile.integral_momentum(lo, hi) / mass
                         : profile.velocity(0.5 * (lo + hi));
  }
  return mesh;
}

BoundaryClosure apply_boundary(const LagrangianMesh& mesh, LagrangianBc bc) {
  const int n = mesh.cells();
  if (bc == LagrangianBc::MarginVacuum) {
    // Depth is zero at the margin points themselves; the gradient spans
    // margin point to first cell centre.
    return {2.0 * mesh.h[0] / mesh.width(0),
            -2.0 * mesh.h[n - 1] / mesh.width(n - 1), 0.0, 0.0};
  }
  return {0.0, 0.0, mesh.h[0], mesh.h[n - 1]};
}

void lagrangian_step(LagrangianMesh& mesh, double dt,
                     const MaterialParams& params, const Track& track,
                     const LagrangianOptions& options) {
  if (dt <= 0.0) throw std::invalid_argument("lagrangian_step: dt must be positive");
  const int n = mesh.cells();
  const BoundaryClosure closure = apply_boundary(mesh, options.bc);

  // Earth pressure coefficient at each boundary from the one-sided velocity
  // comparison u_{j+1} >= u_j (tie goes to the active branch).
  std::vector<double> K(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double du = (j < n) ? mesh.u_half[j + 1] - mesh.u_half[j]
                              : mesh.u_half[n] - mesh.u_half[n - 1];
    K[j] = earth_pressure_coefficient(params, select_branch(du));
  }

  std::vector<double> u_new(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double x = mesh.b[j];
    const double u = mesh.u_half[j];
    const double zeta = track.zeta(x);

    double grad_h, h_bnd;
    if (j == 0) {
      grad_h = closure.grad_h_left;
      h_bnd = closure.h_left;
    } else if (j == n) {
      grad_h = closure.grad_h_right;
      h_bnd = closure.h_right;
    } else {
      // (h_right - h_left) over the centre distance of the adjacent cells.
      grad_h = 2.0 * (mesh.h[j] - mesh.h[j - 1]) / (mesh.b[j + 1] - mesh.b[j - 1]);
      h_bnd = 0.5 * (mesh.h[j - 1] + mesh.h[j]);
    }

    double accel = driving_acceleration(u, x, params, track) -
                   params.epsilon * std::cos(zeta) * K[j] * grad_h;

    if (options.pressure_gradient_term && j >= 1 && j < n) {
      const double dc = 0.5 * (mesh.b[j + 1] - mesh.b[j - 1]);
      const double dpk =
          (std::cos(track.zeta(mesh.b[j + 1])) * K[j + 1] - std::cos(zeta) * K[j]) / dc;
      accel -= params.epsilon * 0.5 * h_bnd * dpk;
    }

    if (params.mu_artificial > 0.0 && j >= 1 && j < n) {
      const double dc = 0.5 * (mesh.b[j + 1] - mesh.b[j - 1]);
      accel += params.mu_artificial *
               (mesh.u_half[j + 1] - 2.0 * u + mesh.u_half[j - 1]) / (dc * dc);
    }

    u_new[j] = u + dt * accel;
  }

  for (int j = 0; j <= n; ++j) mesh.b[j] += dt * u_new[j];
  mesh.u_half = std::move(u_new);

  for (int j = 0; j < n; ++j) {
    const double width = mesh.b[j + 1] - mesh.b[j];
    if (width <= 0.0)
      throw SolverError("lagrangian_step: cell inversion", mesh.step_count + 1,
                        mesh.t + dt, j);
    mesh.h[j] = mesh.volume[j] / width;
  }
  mesh.t += dt;
  ++mesh.step_count;
}

double total_volume(const LagrangianMesh& mesh) {
  double v = 0.0;
  for (double vj : mesh.volume) v += vj;
  return v;
}

double velocity_total_variation(const LagrangianMesh& mesh) {
  double tv = 0.0;
  for (std::size_t j = 1; j < mesh.u_half.size(); ++j)
    tv += std::abs(mesh.u_half[j] - mesh.u_half[j - 1]);
  return tv;
}

}  // namespace sh1d
