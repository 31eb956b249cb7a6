#include "berger/optimality.hpp"

#include <cmath>

#include "berger/errors.hpp"
#include "berger/geodesic.hpp"

namespace berger {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double conjugate_equation(const MetricParams& params, double hbar1, int chi, double tau) {
  const double eta = params.eta();
  const TrigPair f = trig_pair(tau, chi);
  return tau * eta * (chi + hbar1 * hbar1) * f.c + (chi - eta * hbar1 * hbar1) * f.s;
}

double conjugate_time(const MetricParams& params, const Covector& h) {
  params.require_axisymmetric("conjugate_time");
  if (!(h.h1 < 0.0)) throw NotAdmissible("conjugate_time: h1 must be negative");
  const double eta = params.eta();
  const double kil = h.kil();
  const double norm = h.norm();
  const int chi = killing_branch(h);

  if (params.regime() != Regime::Oblate) {
    // eta >= 0: 2 pi I2/|h| on the trigonometric branch, +inf otherwise
    if (chi < 0) return 2.0 * kPi * params.I2 / norm;
    return kInfiniteTime;
  }

  // oblate: every admissible covector has Kil < 0; the first root of the
  // conjugate equation lies in (pi/2, pi]
  if (!(kil < 0.0)) throw NotAdmissible("conjugate_time: oblate covectors must have Kil(h) < 0");
  const double hbar1 = h.h1 / norm;
  const double coef = 1.0 + eta * hbar1 * hbar1;
  double tau;
  if (coef <= 1e-12) {
    tau = 0.5 * kPi;  // light-like limit hbar1 = -1/sqrt(-eta)
  } else {
    double lo = 0.5 * kPi, hi = kPi;  // F(lo) = -coef < 0, F(hi) >= 0
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (conjugate_equation(params, hbar1, -1, mid) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    tau = 0.5 * (lo + hi);
  }
  return 2.0 * params.I2 * tau / norm;
}

std::pair<double, std::optional<GroupPoint>> maxwell_time(const MetricParams& params,
                                                          const Covector& h) {
  params.require_axisymmetric("maxwell_time");
  if (!(h.h1 < 0.0)) throw NotAdmissible("maxwell_time: h1 must be negative");
  if (killing_branch(h) >= 0) return {kInfiniteTime, std::nullopt};
  const double norm = h.norm();
  const double hbar1 = h.h1 / norm;
  const double t = 2.0 * kPi * params.I2 / norm;
  return {t, GroupPoint{kPi - kPi * params.eta() * hbar1, Complex(0.0, 0.0)}};
}

double cut_time(const MetricParams& params, const Covector& h) {
  params.require_axisymmetric("cut_time");
  if (params.regime() == Regime::Oblate)
    throw RegimeError("cut_time: undefined for eta < 0 (no longest arcs exist)");
  if (!(h.h1 < 0.0)) throw NotAdmissible("cut_time: h1 must be negative");
  if (killing_branch(h) < 0) return 2.0 * kPi * params.I2 / h.norm();
  return kInfiniteTime;
}

bool CutLocus::contains(const GroupPoint& p, double tol) const {
  if (std::abs(p.w) > tol) return false;
  if (single_point) return std::fabs(p.c - c_min) <= tol;
  return p.c >= c_min - tol;
}

CutLocus cut_locus(const MetricParams& params) {
  params.require_axisymmetric("cut_locus");
  switch (params.regime()) {
    case Regime::Oblate:
      throw RegimeError("cut_locus: undefined for eta < 0 (no longest arcs exist)");
    case Regime::Symmetric:
      return CutLocus{Regime::Symmetric, kPi, true};
    case Regime::Prolate:
      return CutLocus{Regime::Prolate, kPi * (1.0 + params.eta()), false};
  }
  return CutLocus{};
}

OptimalityReport optimality_report(const MetricParams& params, const Covector& h) {
  if (params.regime() == Regime::Oblate)
    throw RegimeError("optimality_report: cut time undefined in oblate regime");
  OptimalityReport r;
  r.t_conj = conjugate_time(params, h);
  auto [tm, pt] = maxwell_time(params, h);
  r.t_max = tm;
  r.cut_point = pt;
  r.t_cut = cut_time(params, h);
  return r;
}

ObserverFrame observer_frame(const MetricParams& params, const Covector& p) {
  const double H = hamiltonian_value(params, p);
  if (std::fabs(H + 0.5) > 1e-9 * (1.0 + p.euclid_sq()))
    throw NotTimeLike("observer_frame: H(p) must equal -1/2");
  if (!(p.h1 < 0.0)) throw NotTimeLike("observer_frame: p1 must be negative");

  const Mat3 qdual = Mat3::diag(-1.0 / params.I1, 1.0 / params.I2, 1.0 / params.I3);
  const Vec3 pv{p.h1, p.h2, p.h3};
  const Vec3 qp = qdual * pv;  // Q*(p, .), and Q*(p,p) = 2H = -1
  Mat3 g = qdual;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) += 2.0 * qp[i] * qp[j];
  cholesky3(g);  // positive definiteness check
  return ObserverFrame{p, g};
}

double injectivity_radius(const MetricParams& params, const ObserverFrame& frame) {
  params.require_axisymmetric("injectivity_radius");
  if (params.regime() == Regime::Oblate) return 0.0;
  const Mat3 kil = Mat3::diag(-1.0, 1.0, 1.0);
  SymEigen e = generalized_sym_eigen(kil, frame.g_r);
  const double lambda = e.values[0];  // unique negative eigenvalue by signature
  if (!(lambda < 0.0)) throw std::logic_error("injectivity_radius: pencil has no negative eigenvalue");
  return 2.0 * kPi * params.I2 / std::sqrt(-lambda);
}

}  // namespace berger
