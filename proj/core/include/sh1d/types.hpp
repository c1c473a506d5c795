#ifndef SH1D_TYPES_HPP
#define SH1D_TYPES_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace sh1d {

/// Depth below which a cell is treated as vacuum (u := 0, m := 0).
inline constexpr double dry_tolerance = 1e-10;

/// Conserved pair: dimensionless avalanche thickness h and depth-integrated
/// momentum m = h*u, either pointwise or as a cell average.
struct Conserved {
  double h = 0.0;
  double m = 0.0;

  bool dry() const { return h < dry_tolerance; }
  /// Velocity m/h; zero on vacuum.
  double u() const { return dry() ? 0.0 : m / h; }
};

enum class PressureBranch { Active, Passive };

/// Material constants of the granular body and its basal contact.
struct MaterialParams {
  double phi;                  ///< internal friction angle [rad]
  double delta;                ///< basal friction angle [rad]
  double epsilon = 1.0;        ///< aspect ratio (thickness/length scale)
  double mu_artificial = 0.0;  ///< artificial viscosity coefficient, 0 disables

  void validate() const {
    const double cp = std::cos(phi), cd = std::cos(delta);
    if (cp * cp > cd * cd + 1e-15)
      throw std::domain_error("MaterialParams: cos^2(phi) > cos^2(delta), "
                              "earth pressure coefficient would be complex");
    if (epsilon < 0.0 || epsilon > 1.0)
      throw std::domain_error("MaterialParams: epsilon outside [0, 1]");
    if (mu_artificial < 0.0 || mu_artificial > 0.1)
      throw std::domain_error("MaterialParams: mu_artificial outside [0, 0.1]");
  }
};

/// Track geometry along the arc length: local inclination angle, scaled
/// curvature and basal topography. All evaluators must be total functions
/// over the computational domain.
struct Track {
  std::function<double(double)> zeta;          ///< inclination angle [rad]
  std::function<double(double)> lambda_kappa;  ///< scaled curvature
  std::function<double(double)> zb;            ///< basal topography height
  std::function<double(double)> dzb_dx;        ///< basal topography gradient

  /// Plane chute with constant inclination, no curvature, flat bed.
  static Track inclined_plane(double zeta_rad) {
    return Track{[zeta_rad](double) { return zeta_rad; },
                 [](double) { return 0.0; },
                 [](double) { return 0.0; },
                 [](double) { return 0.0; }};
  }

  /// Incline at zeta0 for x <= x_begin, linear and continuous transition to
  /// horizontal at x_end, horizontal beyond. Curvature is left at zero.
  static Track runout_chute(double zeta0_rad, double x_begin, double x_end) {
    auto z = [=](double x) {
      if (x <= x_begin) return zeta0_rad;
      if (x >= x_end) return 0.0;
      return zeta0_rad * (x_end - x) / (x_end - x_begin);
    };
    return Track{z, [](double) { return 0.0; }, [](double) { return 0.0; },
                 [](double) { return 0.0; }};
  }
};

/// Runtime failure of a scheme (cell inversion, negative depth, CFL breach...).
/// Carries enough context to point at the offending step and cell.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& msg, long step = -1,
                       double time = std::nan(""), int cell = -1)
      : std::runtime_error(msg), step(step), time(time), cell(cell) {}

  long step;
  double time;
  int cell;
};

}  // namespace sh1d

#endif
