#pragma once

#include "berger/metric.hpp"

namespace berger {

// Momentum in the dual Lie algebra.  Normalizations live on the level sets of
// the maximized Hamiltonian: H = -1/2 for time-like geodesics, H = 0 for
// light-like ones.
struct Covector {
  double h1 = 0.0, h2 = 0.0, h3 = 0.0;

  double kil() const { return -h1 * h1 + h2 * h2 + h3 * h3; }
  double norm() const;                    // sqrt(|Kil|)
  double euclid_sq() const { return h1 * h1 + h2 * h2 + h3 * h3; }
  double hbar1() const;                   // h1/|h|, requires |h| > 0
};

enum class CausalClass {
  TimeLike,           // H = -1/2 with Kil(h) < 0
  LightLike,          // H = 0
  SpacelikeMomentum,  // H = -1/2 with Kil(h) >= 0 (prolate only)
};

// Killing branch sign with the null-classification tolerance
// |Kil| <= 1e-10 (1 + |h|^2): -1, 0 or +1.
int killing_branch(const Covector& h);

double hamiltonian_value(const MetricParams& params, const Covector& h);

// Scale to the level H = -1/2.  Throws NotTimeLike unless H < 0 and h1 < 0.
Covector normalize_timelike(const MetricParams& params, const Covector& h);

// Fix the free scale of an H = 0 covector by |h1| = 1.  Throws NotTimeLike
// unless H vanishes within tolerance and h1 < 0.
Covector normalize_lightlike(const MetricParams& params, const Covector& h);

// Classification of an admissible normalized covector.  Throws NotAdmissible
// for h1 >= 0 or H > 0.
CausalClass classify(const MetricParams& params, const Covector& h);

// Closed-form flow of the vertical subsystem: h1 fixed, (h2, h3) rotated by
// the angle t*eta*h1/I2.  Requires I2 == I3.
Covector vertical_flow(const MetricParams& params, const Covector& h, double t);

// The level surface H = -1/2 as a hyperbola chart:
// h(s, phi) = (-sqrt(I1) cosh s, sqrt(I2) sinh s e^{i phi}).
Covector timelike_covector(const MetricParams& params, double s, double phi);

// Light-like covector with h1 = -1.
Covector lightlike_covector(const MetricParams& params, double phi);

}  // namespace berger
