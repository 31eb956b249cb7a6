#pragma once

#include <span>

#include "berger/covector.hpp"
#include "berger/group.hpp"

namespace berger {

// Regime pair c(tau,h), s(tau,h): cos/sin for chi=-1, cosh/sinh for chi=+1,
// the affine limit (1, tau) for chi=0.  Satisfies c^2 - chi*s^2 = 1.
struct TrigPair {
  double c = 1.0;
  double s = 0.0;
  int chi = 0;
};

TrigPair trig_pair(double tau, int chi);

// Lorentzian exponential map at the identity for n = 1.  h must be admissible
// (h1 < 0) and lie on H = -1/2 or H = 0 up to tolerance; t >= 0.  The fiber
// coordinate of the result is the continuous argument of q0 + i q1 along the
// geodesic, starting from 0, evaluated in closed form.
GroupPoint exp_map(const MetricParams& params, const Covector& h, double t);

// General n: rotate hperp onto the first complex axis, evaluate the
// three-dimensional map, rotate back.
GroupPointN exp_map_nd(const MetricParams& params, double h1, std::span<const Complex> hperp,
                       double t);

// Fiber coordinate of the light-like boundary of the attainable set at radius
// |w| = wmag, for eta >= 0.  Throws RegimeError in the oblate case.
double light_like_boundary_c(const MetricParams& params, double wmag);

// Rotation symmetry in the momentum: (h2, h3) rotated by phi.  Geodesics of
// partner covectors are fiber rotations of one another.
Covector maxwell_partner(const Covector& h, double phi);

// Momentum phase of w at time t: arg w(t) = arg(h2 + i h3) + t*eta*h1/(2 I2),
// valid in every Killing branch.
double w_phase_shift(const MetricParams& params, const Covector& h, double t);

// An initial covector together with a duration.
struct GeodesicArc {
  Covector h;
  double t1 = 0.0;

  GroupPoint at(const MetricParams& params, double t) const { return exp_map(params, h, t); }
  GroupPoint endpoint(const MetricParams& params) const { return exp_map(params, h, t1); }
  // t1 for unit-speed time-like arcs (H = -1/2), zero for light-like ones.
  double lorentzian_length(const MetricParams& params) const;
};

}  // namespace berger
