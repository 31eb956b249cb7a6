#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "berger/covector.hpp"
#include "berger/geodesic.hpp"
#include "berger/group.hpp"
#include "berger/linalg.hpp"

namespace berger::testing {

inline constexpr double kPi = 3.14159265358979323846;

// Random element of SO(1,2) for the Killing form diag(-1,1,1): exponential of
// a Kil-antisymmetric generator (two boosts and one rotation).
inline Mat3 random_so12(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double a = u(rng), b = u(rng), c = u(rng);
  Mat3 j;
  j(0, 1) = a;
  j(1, 0) = a;
  j(0, 2) = b;
  j(2, 0) = b;
  j(1, 2) = c;
  j(2, 1) = -c;
  return mat_exp3(j);
}

// Random normalized time-like covector on H = -1/2 through the hyperbola
// chart; s_max limits how close to the light cone the sample gets.
inline Covector random_timelike(const MetricParams& params, std::mt19937_64& rng,
                                double s_max = 2.5) {
  std::uniform_real_distribution<double> us(0.0, s_max);
  std::uniform_real_distribution<double> uphi(0.0, 2.0 * kPi);
  return timelike_covector(params, us(rng), uphi(rng));
}

inline Covector random_lightlike(const MetricParams& params, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uphi(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> uscale(0.5, 2.0);
  const Covector h = lightlike_covector(params, uphi(rng));
  const double s = uscale(rng);
  return Covector{s * h.h1, s * h.h2, s * h.h3};
}

// Finite-difference velocity of the geodesic in (c, w) coordinates.
inline void fd_velocity(const MetricParams& params, const Covector& h, double t, double step,
                        double& cdot, Complex& wdot) {
  const GroupPoint p = exp_map(params, h, t + step);
  const GroupPoint m = exp_map(params, h, t > step ? t - step : 0.0);
  const double dt = t > step ? 2.0 * step : step;
  cdot = (p.c - m.c) / dt;
  wdot = (p.w - m.w) / dt;
}

// Determinant of the finite-difference differential of the exponential map in
// the chart (s, phi, t): rows are d(c, Re w, Im w).
inline double fd_exp_jacobian_det(const MetricParams& params, double s, double phi, double t) {
  const double hs = 1e-5 * (1.0 + std::fabs(s));
  const double hp = 1e-5;
  const double ht = 1e-5 * (1.0 + std::fabs(t));
  auto eval = [&](double ss, double pp, double tt) {
    return exp_map(params, timelike_covector(params, ss, pp), tt);
  };
  const GroupPoint sp = eval(s + hs, phi, t), sm = eval(s - hs, phi, t);
  const GroupPoint pp = eval(s, phi + hp, t), pm = eval(s, phi - hp, t);
  const GroupPoint tp = eval(s, phi, t + ht), tm = eval(s, phi, t - ht);
  const double j[3][3] = {
      {(sp.c - sm.c) / (2 * hs), (pp.c - pm.c) / (2 * hp), (tp.c - tm.c) / (2 * ht)},
      {(sp.w.real() - sm.w.real()) / (2 * hs), (pp.w.real() - pm.w.real()) / (2 * hp),
       (tp.w.real() - tm.w.real()) / (2 * ht)},
      {(sp.w.imag() - sm.w.imag()) / (2 * hs), (pp.w.imag() - pm.w.imag()) / (2 * hp),
       (tp.w.imag() - tm.w.imag()) / (2 * ht)}};
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
         j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

inline double wrap_to_pi(double x) {
  double r = std::remainder(x, 2.0 * kPi);
  return r;
}

}  // namespace berger::testing
