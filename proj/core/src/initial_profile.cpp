#include "sh1d/initial_profile.hpp"

#include <algorithm>
#include <cmath>

namespace sh1d {

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double gauss_x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
constexpr double gauss_w[5] = {0.2369268850561891, 0.4786286704993665,
                               0.5688888888888889, 0.4786286704993665,
                               0.2369268850561891};

double gauss5(const std::function<double(double)>& f, double a, double b,
              int panels = 8) {
  double total = 0.0;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * w;
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) acc += gauss_w[k] * f(mid + 0.5 * w * gauss_x[k]);
    total += acc * 0.5 * w;
  }
  return total;
}

}  // namespace

double InitialProfile::integral_depth(double a, double b) const {
  return gauss5([this](double x) { return depth(x); }, a, b);
}

double InitialProfile::integral_momentum(double a, double b) const {
  return gauss5([this](double x) { return depth(x) * velocity(x); }, a, b);
}

Conserved InitialProfile::cell_average(double a, double b) const {
  const double w = b - a;
  return {integral_depth(a, b) / w, integral_momentum(a, b) / w};
}

double StepProfile::integral_depth(double a, double b) const {
  const double split = std::clamp(x_jump_, a, b);
  return (split - a) * hl_ + (b - split) * hr_;
}

double StepProfile::integral_momentum(double a, double b) const {
  const double split = std::clamp(x_jump_, a, b);
  return (split - a) * hl_ * ul_ + (b - split) * hr_ * ur_;
}

double ParabolicCapProfile::integral_depth(double a, double b) const {
  const double lo = std::max(a, c_ - g_);
  const double hi = std::min(b, c_ + g_);
  if (hi <= lo) return 0.0;
  auto anti = [this](double x) {
    const double s = x - c_;
    return peak_ * (s - s * s * s / (3.0 * g_ * g_));
  };
  return anti(hi) - anti(lo);
}

double ParabolicCapProfile::integral_momentum(double a, double b) const {
  return u_ * integral_depth(a, b);
}

}  // namespace sh1d
