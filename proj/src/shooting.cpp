#include "berger/shooting.hpp"

#include <algorithm>
#include <cmath>

#include "berger/errors.hpp"
#include "berger/reachability.hpp"

namespace berger {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kResidualTol = 1e-9;

// (c, |w|) of the geodesic at (s, t); the w phase is rotation-symmetric and
// recovered separately.
void eval_reduced(const MetricParams& params, double s, double t, double& c, double& wmag) {
  const GroupPoint p = exp_map(params, timelike_covector(params, s, 0.0), t);
  c = p.c;
  wmag = std::abs(p.w);
}

bool in_open_v(const MetricParams& params, const GroupPoint& target) {
  const ReachVerdict v = attainable_contains(params, target);
  if (!v.in_attainable || v.on_boundary) return false;
  const double tol = 1e-12 * (1.0 + std::fabs(target.c) + std::abs(target.w));
  switch (params.regime()) {
    case Regime::Oblate:
      return false;  // no diffeomorphism domain without longest arcs
    case Regime::Symmetric:
      return target.c < kPi - std::atan(std::abs(target.w)) - tol;
    case Regime::Prolate:
      return !cut_locus(params).contains(target, 1e-11 * (1.0 + target.c));
  }
  return false;
}

struct NewtonOutcome {
  double s = 0.0, t = 0.0;
  bool converged = false;
  int iterations = 0;
};

NewtonOutcome newton_2d(const MetricParams& params, double C, double R, double s0, double t0) {
  NewtonOutcome out;
  double s = s0, t = t0;
  double c, wmag;
  eval_reduced(params, s, t, c, wmag);
  double err = std::hypot(c - C, wmag - R);
  for (int it = 0; it < 80; ++it) {
    if (err < 1e-12) break;
    const double hs = 1e-6 * (1.0 + std::fabs(s));
    const double ht = 1e-6 * (1.0 + std::fabs(t));
    double cp, wp, cm, wm;
    eval_reduced(params, s + hs, t, cp, wp);
    eval_reduced(params, s - hs, t, cm, wm);
    const double j00 = (cp - cm) / (2.0 * hs), j10 = (wp - wm) / (2.0 * hs);
    eval_reduced(params, s, t + ht, cp, wp);
    eval_reduced(params, s, t - ht, cm, wm);
    const double j01 = (cp - cm) / (2.0 * ht), j11 = (wp - wm) / (2.0 * ht);
    const double det = j00 * j11 - j01 * j10;
    if (std::fabs(det) < 1e-300) break;
    const double f0 = c - C, f1 = wmag - R;
    double ds = -(j11 * f0 - j01 * f1) / det;
    double dt = -(-j10 * f0 + j00 * f1) / det;

    // damped update, keeping (s, t) in the open quadrant
    double lam = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 30; ++bt) {
      double sn = s + lam * ds, tn = t + lam * dt;
      if (sn < 1e-12) sn = 1e-12;
      if (sn > 60.0) sn = 60.0;
      if (tn < 1e-12) tn = 0.5 * t;
      double cn, wn;
      eval_reduced(params, sn, tn, cn, wn);
      const double en = std::hypot(cn - C, wn - R);
      if (en < err) {
        s = sn;
        t = tn;
        c = cn;
        wmag = wn;
        err = en;
        accepted = true;
        break;
      }
      lam *= 0.5;
    }
    out.iterations = it + 1;
    if (!accepted) break;
  }
  out.s = s;
  out.t = t;
  out.converged = err < 1e-10 * (1.0 + std::fabs(C) + R);
  return out;
}

// Initial guess from the exact modulus relation |q0+iq1| = sqrt(1+R^2) with a
// fixed-point update of the rotation phase tau*eta*hbar1.
bool initial_guess(const MetricParams& params, double C, double R, double& s0, double& t0) {
  const double eta = params.eta();
  const double m = std::sqrt(1.0 + R * R);
  double phi = 0.0;
  double s = 0.5, t = params.I2;
  bool ok = false;
  for (int it = 0; it < 12; ++it) {
    const double beta = std::min(std::max(C + phi, 1e-6), kPi - 1e-6);
    const double a = m * std::cos(beta);
    const double b = m * std::sin(beta);
    const double tau = std::acos(std::max(-1.0, std::min(1.0, a)));
    const double st = std::max(std::sin(tau), 1e-9);
    double hbar1 = -b / st;
    if (hbar1 > -1.0) hbar1 = -1.0 - 1e-9;
    const double denom = 1.0 + eta * hbar1 * hbar1;
    if (!(denom > 1e-12)) return ok;  // target needs the chi >= 0 side; grid start instead
    const double sinh_s = std::sqrt((hbar1 * hbar1 - 1.0) / denom);
    s = std::asinh(sinh_s);
    const double norm = std::sqrt(params.I2 / denom);
    t = 2.0 * params.I2 * tau / norm;
    phi = tau * eta * hbar1;
    ok = true;
  }
  s0 = std::max(s, 1e-6);
  t0 = t;
  return ok;
}

ShootingResult finish(const MetricParams& params, const GroupPoint& target, double s, double t,
                      int iterations) {
  // recover the momentum phase: arg w(t) = psi + t*eta*h1/(2 I2)
  const Covector h_axis = timelike_covector(params, s, 0.0);
  const double psi = std::arg(target.w) - w_phase_shift(params, h_axis, t);
  ShootingResult r;
  r.h = timelike_covector(params, s, psi);
  r.t = t;
  r.iterations = iterations;
  const GroupPoint reached = exp_map(params, r.h, t);
  r.residual = std::hypot(reached.c - target.c, std::abs(reached.w - target.w));
  return r;
}

std::vector<std::pair<double, double>> start_grid(const MetricParams& params, double C, double R,
                                                  int starts) {
  std::vector<std::pair<double, double>> grid;
  double s0 = 0.5, t0 = params.I2;
  if (initial_guess(params, C, R, s0, t0)) grid.emplace_back(s0, t0);
  // coarse fill over the chart; tau ranges inside (0, pi) on the trig side and
  // t is mapped through |h(s)|
  const int ns = 4, nt = 4;
  for (int i = 0; i < ns && static_cast<int>(grid.size()) < starts; ++i)
    for (int j = 0; j < nt && static_cast<int>(grid.size()) < starts; ++j) {
      const double s = 0.15 + (4.0 - 0.15) * i / (ns - 1);
      const Covector h = timelike_covector(params, s, 0.0);
      const double kil = h.kil();
      double t;
      if (kil < 0.0) {
        const double tau = (0.15 + 0.75 * j / (nt - 1)) * kPi;
        t = 2.0 * params.I2 * tau / std::sqrt(-kil);
      } else {
        const double tau = 0.2 + 2.8 * j / (nt - 1);
        t = 2.0 * params.I2 * tau / std::sqrt(std::max(kil, 1e-9));
      }
      grid.emplace_back(s, t);
    }
  return grid;
}

}  // namespace

ShootingResult inverse_exp(const MetricParams& params, const GroupPoint& target) {
  return inverse_exp_multistart(params, target, 1, nullptr);
}

ShootingResult inverse_exp_multistart(const MetricParams& params, const GroupPoint& target,
                                      int starts, double* cluster_diameter) {
  params.require_axisymmetric("inverse_exp");
  if (!in_open_v(params, target))
    throw OutsideDomain("inverse_exp: target outside the diffeomorphism domain V");

  const double R = std::abs(target.w);
  const double C = target.c;

  // axis targets: the rotation phase degenerates, solved in closed form
  if (R <= 1e-13 * (1.0 + std::fabs(C))) {
    ShootingResult r;
    r.h = Covector{-std::sqrt(params.I1), 0.0, 0.0};
    r.t = 2.0 * std::sqrt(params.I1) * C;
    const GroupPoint reached = exp_map(params, r.h, r.t);
    r.residual = std::hypot(reached.c - C, std::abs(reached.w - target.w));
    return r;
  }

  const auto grid = start_grid(params, C, R, std::max(starts, 1));
  std::vector<ShootingResult> found;
  ShootingResult best;
  best.residual = kInfiniteTime;
  int tried = 0;
  for (const auto& [s0, t0] : grid) {
    if (tried++ >= std::max(starts, 1) && best.residual <= kResidualTol && starts <= 1) break;
    const NewtonOutcome n = newton_2d(params, C, R, s0, t0);
    if (!n.converged) continue;
    ShootingResult r = finish(params, target, n.s, n.t, n.iterations);
    if (r.residual <= kResidualTol) found.push_back(r);
    if (r.residual < best.residual) best = r;
  }
  if (found.empty() || best.residual > kResidualTol)
    throw ConvergenceFailure("inverse_exp: residual above 1e-9 after all starts");

  if (cluster_diameter) {
    double diam = 0.0;
    for (size_t i = 0; i < found.size(); ++i)
      for (size_t j = i + 1; j < found.size(); ++j) {
        const double d = std::sqrt(std::pow(found[i].h.h1 - found[j].h.h1, 2) +
                                   std::pow(found[i].h.h2 - found[j].h.h2, 2) +
                                   std::pow(found[i].h.h3 - found[j].h.h3, 2) +
                                   std::pow(found[i].t - found[j].t, 2));
        diam = std::max(diam, d);
      }
    *cluster_diameter = diam;
  }
  return best;
}

DistanceAnswer lorentz_distance(const MetricParams& params, const GroupPoint& target) {
  params.require_axisymmetric("lorentz_distance");
  const ReachVerdict v = attainable_contains(params, target);
  DistanceAnswer a;
  if (!v.in_attainable) {
    a.kind = DistanceKind::Unreachable;
    return a;
  }
  if (v.on_boundary && params.regime() != Regime::Oblate) {
    a.kind = DistanceKind::Zero;  // light-like geodesics are optimal to infinity
    return a;
  }
  switch (params.regime()) {
    case Regime::Oblate:
      a.kind = DistanceKind::NoLongestArc;
      return a;
    case Regime::Symmetric: {
      if (v.infinite_distance) {
        a.kind = DistanceKind::Infinite;
        return a;
      }
      if (!v.longest_arc_exists) {
        a.kind = DistanceKind::NoLongestArc;  // the dashed line c = pi - arctan|w|, w != 0
        return a;
      }
      const CutLocus cut = cut_locus(params);
      if (cut.contains(target)) {
        a.kind = DistanceKind::Finite;
        a.value = 2.0 * kPi * params.I2 / std::sqrt(params.I2);  // |h| = sqrt(I2) for eta = 0
        a.multi_geodesic = true;
        return a;
      }
      break;
    }
    case Regime::Prolate: {
      const CutLocus cut = cut_locus(params);
      if (cut.contains(target)) {
        // the meeting family at (c, 0) has hbar1 = (pi - c)/(pi eta)
        const double hbar1 = (kPi - target.c) / (kPi * params.eta());
        const double norm = std::sqrt(params.I2 / (1.0 + params.eta() * hbar1 * hbar1));
        a.kind = DistanceKind::Finite;
        a.value = 2.0 * kPi * params.I2 / norm;
        a.multi_geodesic = true;
        return a;
      }
      break;
    }
  }
  const ShootingResult r = inverse_exp(params, target);
  a.kind = DistanceKind::Finite;
  a.value = r.t;
  return a;
}

std::vector<WavefrontSample> wavefront(const MetricParams& params, double t, int samples,
                                       double s_max) {
  params.require_axisymmetric("wavefront");
  if (samples < 2) throw std::invalid_argument("wavefront: samples must be >= 2");
  std::vector<WavefrontSample> rows(samples);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < samples; ++i) {
    const double s = s_max * i / (samples - 1);
    const Covector h = timelike_covector(params, s, 0.0);
    const GroupPoint p = exp_map(params, h, t);
    WavefrontSample& r = rows[i];
    r.s = s;
    r.chi = killing_branch(h);
    r.hbar1 = r.chi != 0 ? h.h1 / h.norm()
                         : -1.0 / std::sqrt(std::max(params.eta(), 1e-300));
    r.t = t;
    r.c = p.c;
    r.abs_w = std::abs(p.w);
  }
  return rows;
}

}  // namespace berger
