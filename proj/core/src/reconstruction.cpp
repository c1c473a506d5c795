#include "sh1d/reconstruction.hpp"

#include <algorithm>
#include <cmath>

namespace sh1d {

namespace {
constexpr double weno_eps = 1e-6;
}

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

double superbee(double a, double b) {
  const double s1 = minmod(2.0 * a, b);
  const double s2 = minmod(a, 2.0 * b);
  return std::abs(s1) > std::abs(s2) ? s1 : s2;
}

CellPoly cell_poly(double w, double d_left, double d_right, ReconMethod method) {
  switch (method) {
    case ReconMethod::MinMod:
      return {w, minmod(d_left, d_right), 0.0};
    case ReconMethod::Superbee:
      return {w, superbee(d_left, d_right), 0.0};
    case ReconMethod::UnlimitedCentral:
      return {w, 0.5 * (d_left + d_right), 0.0};
    case ReconMethod::WenoLinear: {
      const double al = 0.5 / ((weno_eps + d_left * d_left) * (weno_eps + d_left * d_left));
      const double ar = 0.5 / ((weno_eps + d_right * d_right) * (weno_eps + d_right * d_right));
      return {w, (al * d_left + ar * d_right) / (al + ar), 0.0};
    }
    case ReconMethod::WenoQuadratic: {
      // Central blend of the two one-sided lines and the parabola through
      // the three cell averages, linear weights {1/4, 1/2, 1/4}.
      const double is_l = d_left * d_left;
      const double is_r = d_right * d_right;
      const double dd = d_right - d_left;
      const double ds = d_right + d_left;
      const double is_c = (13.0 / 12.0) * dd * dd + 0.25 * ds * ds;
      const double al = 0.25 / ((weno_eps + is_l) * (weno_eps + is_l));
      const double ar = 0.25 / ((weno_eps + is_r) * (weno_eps + is_r));
      const double ac = 0.50 / ((weno_eps + is_c) * (weno_eps + is_c));
      const double inv = 1.0 / (al + ar + ac);
      const double wl = al * inv, wr = ar * inv, wc = ac * inv;
      // P_c = 2 P_opt - (P_l + P_r)/2 keeps the average when blended.
      return {w - wc * dd / 12.0,
              wl * d_left + wr * d_right + wc * 0.5 * ds,
              wc * dd};
    }
  }
  return {w, 0.0, 0.0};
}

Reconstruction reconstruct_states(std::span<const Conserved> w,
                                  ReconMethod method) {
  const int n = static_cast<int>(w.size());
  Reconstruction r;
  r.method = method;
  r.h.resize(n);
  r.m.resize(n);
  for (int j = 0; j < n; ++j) {
    if (w[j].dry() || n == 1) {
      r.h[j] = {w[j].h, 0.0, 0.0};
      r.m[j] = {w[j].m, 0.0, 0.0};
      continue;
    }
    const double dhl = (j > 0) ? w[j].h - w[j - 1].h : w[j + 1].h - w[j].h;
    const double dhr = (j < n - 1) ? w[j + 1].h - w[j].h : dhl;
    const double dml = (j > 0) ? w[j].m - w[j - 1].m : w[j + 1].m - w[j].m;
    const double dmr = (j < n - 1) ? w[j + 1].m - w[j].m : dml;
    if (j == 0 || j == n - 1) {
      // One-sided fallback: both arguments are the same single difference.
      r.h[j] = cell_poly(w[j].h, (j == 0) ? dhr : dhl, (j == 0) ? dhr : dhl,
                         method == ReconMethod::WenoQuadratic ? ReconMethod::WenoLinear
                                                              : method);
      r.m[j] = cell_poly(w[j].m, (j == 0) ? dmr : dml, (j == 0) ? dmr : dml,
                         method == ReconMethod::WenoQuadratic ? ReconMethod::WenoLinear
                                                              : method);
    } else {
      r.h[j] = cell_poly(w[j].h, dhl, dhr, method);
      r.m[j] = cell_poly(w[j].m, dml, dmr, method);
    }
  }
  return r;
}

}  // namespace sh1d
