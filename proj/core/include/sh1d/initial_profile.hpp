#ifndef SH1D_INITIAL_PROFILE_HPP
#define SH1D_INITIAL_PROFILE_HPP

#include <functional>

#include "sh1d/types.hpp"

namespace sh1d {

/// Initial data h(x,0), u(x,0) together with definite integrals of h and h*u.
/// Piecewise-polynomial profiles integrate exactly; the generic fallback uses
/// composite 5-point Gauss quadrature.
class InitialProfile {
 public:
  virtual ~InitialProfile() = default;
  virtual double depth(double x) const = 0;
  virtual double velocity(double x) const = 0;
  virtual double integral_depth(double a, double b) const;
  virtual double integral_momentum(double a, double b) const;

  /// Cell average of (h, m) over [a, b].
  Conserved cell_average(double a, double b) const;
};

/// Piecewise-constant data with a single jump (a dam-break style profile).
class StepProfile final : public InitialProfile {
 public:
  StepProfile(double x_jump, double h_left, double u_left, double h_right,
              double u_right)
      : x_jump_(x_jump), hl_(h_left), ul_(u_left), hr_(h_right), ur_(u_right) {}

  double depth(double x) const override { return x < x_jump_ ? hl_ : hr_; }
  double velocity(double x) const override { return x < x_jump_ ? ul_ : ur_; }
  double integral_depth(double a, double b) const override;
  double integral_momentum(double a, double b) const override;

 private:
  double x_jump_, hl_, ul_, hr_, ur_;
};

/// Parabolic cap h = peak (1 - ((x-c)/g)^2) on [c-g, c+g], vacuum outside,
/// uniform velocity over the body.
class ParabolicCapProfile final : public InitialProfile {
 public:
  ParabolicCapProfile(double center, double half_width, double peak, double u)
      : c_(center), g_(half_width), peak_(peak), u_(u) {}

  double depth(double x) const override {
    const double eta = (x - c_) / g_;
    return std::abs(eta) <= 1.0 ? peak_ * (1.0 - eta * eta) : 0.0;
  }
  double velocity(double x) const override { return depth(x) > 0.0 ? u_ : 0.0; }
  double integral_depth(double a, double b) const override;
  double integral_momentum(double a, double b) const override;

  double total_mass() const { return 4.0 / 3.0 * peak_ * g_; }
  double left_margin() const { return c_ - g_; }
  double right_margin() const { return c_ + g_; }

 private:
  double c_, g_, peak_, u_;
};

/// Arbitrary callables, integrated numerically.
class CallableProfile final : public InitialProfile {
 public:
  CallableProfile(std::function<double(double)> h, std::function<double(double)> u)
      : h_(std::move(h)), u_(std::move(u)) {}
  double depth(double x) const override { return h_(x); }
  double velocity(double x) const override { return u_(x); }

 private:
  std::function<double(double)> h_, u_;
};

}  // namespace sh1d

#endif
