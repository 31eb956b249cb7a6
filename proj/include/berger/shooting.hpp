#pragma once

#include <vector>

#include "berger/geodesic.hpp"
#include "berger/group.hpp"
#include "berger/optimality.hpp"

namespace berger {

struct ShootingResult {
  Covector h;          // normalized time-like covector, H = -1/2
  double t = 0.0;      // exp_map(h, t) hits the target
  double residual = 0.0;
  int iterations = 0;
};

// Inverse of the exponential map on its diffeomorphism domain V (interior of
// the attainable set minus boundary and cut locus), via damped Newton in the
// smooth chart (s, t) of the H = -1/2 momentum hyperbola.  Throws
// OutsideDomain when the target fails the precondition and ConvergenceFailure
// when the residual cannot be brought below 1e-9.
ShootingResult inverse_exp(const MetricParams& params, const GroupPoint& target);

// Multi-start variant; all converged starts are clustered and the cluster
// diameter in (h1, h2, h3, t) is reported (uniqueness witness).
ShootingResult inverse_exp_multistart(const MetricParams& params, const GroupPoint& target,
                                      int starts, double* cluster_diameter);

enum class DistanceKind { Finite, Zero, Infinite, Unreachable, NoLongestArc };

struct DistanceAnswer {
  DistanceKind kind = DistanceKind::Unreachable;
  double value = 0.0;         // meaningful for Finite
  bool multi_geodesic = false;  // target on the cut locus
};

// Lorentzian distance from the identity with full case classification.
DistanceAnswer lorentz_distance(const MetricParams& params, const GroupPoint& target);

struct WavefrontSample {
  double s = 0.0;      // hyperbola parameter of the covector
  double hbar1 = 0.0;  // h1/|h| (the light-like limit value on the null seam)
  int chi = 0;
  double t = 0.0;
  double c = 0.0;
  double abs_w = 0.0;
};

// Axial section of the wavefront of radius t: exp_map over a grid of
// normalized time-like covectors h(s), s in [0, s_max].  For eta > 0 the grid
// crosses the Killing-null seam, so both chi branches appear.
std::vector<WavefrontSample> wavefront(const MetricParams& params, double t, int samples,
                                       double s_max = 3.0);

}  // namespace berger
