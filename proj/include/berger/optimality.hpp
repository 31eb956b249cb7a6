#pragma once

#include <limits>
#include <optional>
#include <utility>

#include "berger/covector.hpp"
#include "berger/group.hpp"
#include "berger/linalg.hpp"

namespace berger {

inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

// Left side of the conjugate-point condition in the factored, pole-free form
// F(tau) = tau*eta*(chi + hbar1^2) c(tau,h) + (chi - eta*hbar1^2) s(tau,h); the
// first conjugate time is its first positive root (jointly with s(tau,h) = 0).
double conjugate_equation(const MetricParams& params, double hbar1, int chi, double tau);

// First conjugate time of the geodesic with normalized covector h, +inf when
// there is none.
double conjugate_time(const MetricParams& params, const Covector& h);

// First Maxwell time of the rotation symmetry and the corresponding axis
// point (pi - pi*eta*hbar1, 0); +inf and nullopt for Kil(h) >= 0.
std::pair<double, std::optional<GroupPoint>> maxwell_time(const MetricParams& params,
                                                          const Covector& h);

// Cut time for eta >= 0; RegimeError in the oblate case where no longest arcs
// exist.
double cut_time(const MetricParams& params, const Covector& h);

struct CutLocus {
  Regime regime = Regime::Symmetric;
  double c_min = 0.0;      // pi for eta=0, pi(1+eta) for eta>0
  bool single_point = false;

  bool contains(const GroupPoint& p, double tol = 1e-9) const;
};

CutLocus cut_locus(const MetricParams& params);

struct OptimalityReport {
  double t_conj = kInfiniteTime;
  double t_max = kInfiniteTime;
  double t_cut = kInfiniteTime;
  std::optional<GroupPoint> cut_point;
};

// Combined report for eta >= 0 (the CLI surface); RegimeError for eta < 0.
OptimalityReport optimality_report(const MetricParams& params, const Covector& h);

// Observer momentum p (H = -1/2, p1 < 0) together with the reference
// Riemannian form g_{R,p} = Q* + 2 (Q* p)(Q* p)^T on the dual algebra, where
// Q* = diag(-1/I1, 1/I2, 1/I3) is the dual Lorentzian form.
struct ObserverFrame {
  Covector p;
  Mat3 g_r;
};

ObserverFrame observer_frame(const MetricParams& params, const Covector& p);

// Injectivity radius with respect to the observer momentum: 0 for eta < 0,
// otherwise 2 pi I2 / sqrt(|lambda|) with lambda the negative eigenvalue of
// the Killing form against g_{R,p}.
double injectivity_radius(const MetricParams& params, const ObserverFrame& frame);

}  // namespace berger
