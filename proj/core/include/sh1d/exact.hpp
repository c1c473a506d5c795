#ifndef SH1D_EXACT_HPP
#define SH1D_EXACT_HPP

#include <optional>
#include <utility>

#include "sh1d/types.hpp"

namespace sh1d {

// ---------------------------------------------------------------------------
// Travelling shock
// ---------------------------------------------------------------------------

/// Characteristic family carrying the discontinuity: First has speed
/// u - sqrt(beta h), Second has u + sqrt(beta h).
enum class ShockFamily { First, Second };

/// A single plane discontinuity on a non-accelerating chute. The "+" state
/// lies upslope (left), the "-" state downslope (right).
struct ShockSetup {
  double h_plus;    ///< upslope thickness
  double h_minus;   ///< downslope thickness
  double u_minus;   ///< downslope velocity
  double beta_x;    ///< pressure factor (equal on both sides)
  ShockFamily family = ShockFamily::First;
  double x0 = 0.0;  ///< initial shock position

  double depth_ratio() const { return h_minus / h_plus; }
  void validate() const;
};

struct ShockState {
  double v_n;          ///< propagation speed of the discontinuity
  double u_plus;       ///< upslope velocity satisfying the jump conditions
  double depth_ratio;  ///< H = h-/h+
};

/// Magnitude of the velocity jump |u+ - u-| from
/// (u+ - u-)^2 = beta h- (H+1)/2 ((H-1)/H)^2. Zero iff H = 1.
double velocity_jump(double h_minus, double depth_ratio, double beta_x);

/// Shock speed V_n = (H u- - u+)/(H-1) and the admissible u+, with the sign
/// chosen so that the Lax inequalities hold for the requested family
/// (First requires H > 1, Second requires H < 1).
ShockState shock_speed(const ShockSetup& setup);

/// Piecewise-constant exact solution: the "+" state for x < x0 + V_n t,
/// the "-" state otherwise.
Conserved travelling_shock_solution(double x, double t, const ShockSetup& setup);

// ---------------------------------------------------------------------------
// Parabolic similarity solution
// ---------------------------------------------------------------------------

/// Spreading parabolic cap on a plane chute: the half-width g(t) obeys
/// g'' g^2 = K with K = 3 beta_x M / 2, giving the implicit relation solved
/// by solve_g. All lengths are physical (no normalisation of g0).
struct SimilaritySetup {
  double g0;          ///< initial half-width (> 0)
  double p0 = 0.0;    ///< initial spreading rate g'(0) (>= 0)
  double u00;         ///< initial bulk velocity u_0(0)
  double zeta;        ///< chute inclination [rad]
  double delta;       ///< basal friction angle [rad]
  double beta_x;      ///< pressure factor
  double total_mass;  ///< M = integral of h dx (> 0)
  double x_center0;   ///< initial centre position

  double spreading_constant() const { return 1.5 * beta_x * total_mass; }
  /// Bulk drive sin(zeta) - tan(delta) cos(zeta), constant on a plane chute.
  double drive() const {
    return std::sin(zeta) - std::tan(delta) * std::cos(zeta);
  }
  void validate() const;
};

struct GrowthState {
  double g;   ///< half-width
  double gp;  ///< spreading rate g'(t)
};

/// Half-width and spreading rate at time t from the implicit relation;
/// residual of the relation is driven below 1e-13. Throws SolverError if the
/// root bracket fails (cannot happen for a valid setup).
GrowthState solve_g(double t, const SimilaritySetup& setup);

/// Bulk velocity u_0(t) = u00 + t (sin(zeta) - tan(delta) cos(zeta)).
double bulk_velocity_u0(double t, const SimilaritySetup& setup);

/// Centre position x_c(t) = x_center0 + u00 t + drive t^2 / 2 (closed form).
double center_position(double t, const SimilaritySetup& setup);

struct PointState {
  double h;
  double u;
  double m;
};

/// Everything needed to evaluate the profile at one instant.
struct SimilarityFrame {
  double t;
  double g;
  double gp;
  double u0;
  double xc;
  double peak;  ///< centre depth 3M/(4g)
};

/// Solve for g and assemble the frame; throws SolverError if the validity
/// condition g'(t) < u_0(t) is violated.
SimilarityFrame similarity_frame(double t, const SimilaritySetup& setup);

/// Pointwise state at position x within a frame: h = peak (1 - eta^2) for
/// |eta| <= 1 with eta = (x - xc)/g, u = u0 + eta g', vacuum outside.
PointState similarity_state(double x, const SimilarityFrame& frame);

/// Convenience wrapper: frame + state in one call.
PointState similarity_profile(double x, double t, const SimilaritySetup& setup);

/// Exact mean depth over [a, b] (closed-form antiderivative of the parabola).
double similarity_mean_depth(double a, double b, const SimilarityFrame& frame);

// ---------------------------------------------------------------------------
// Oracle interface used by the harness for error measurement
// ---------------------------------------------------------------------------

class ExactSolution {
 public:
  virtual ~ExactSolution() = default;
  virtual PointState state(double x, double t) const = 0;
  virtual double mean_depth(double a, double b, double t) const = 0;
  /// (tail, front) margin positions, when the solution has margins.
  virtual std::optional<std::pair<double, double>> margins(double t) const {
    return std::nullopt;
  }
};

class TravellingShockOracle final : public ExactSolution {
 public:
  explicit TravellingShockOracle(const ShockSetup& setup);
  PointState state(double x, double t) const override;
  double mean_depth(double a, double b, double t) const override;
  double shock_position(double t) const { return setup_.x0 + state_.v_n * t; }
  const ShockState& shock() const { return state_; }

 private:
  ShockSetup setup_;
  ShockState state_;
};

class SimilarityOracle final : public ExactSolution {
 public:
  explicit SimilarityOracle(const SimilaritySetup& setup) : setup_(setup) {
    setup_.validate();
  }
  PointState state(double x, double t) const override;
  double mean_depth(double a, double b, double t) const override;
  std::optional<std::pair<double, double>> margins(double t) const override;
  const SimilaritySetup& setup() const { return setup_; }

 private:
  SimilarityFrame frame(double t) const;
  SimilaritySetup setup_;
  mutable SimilarityFrame cached_{-1.0, 0, 0, 0, 0, 0};
};

}  // namespace sh1d

#endif
