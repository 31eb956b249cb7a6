#include "berger/covector.hpp"

#include <cmath>

#include "berger/errors.hpp"

namespace berger {

double Covector::norm() const { return std::sqrt(std::fabs(kil())); }

double Covector::hbar1() const { return h1 / norm(); }

int killing_branch(const Covector& h) {
  const double k = h.kil();
  const double tol = 1e-10 * (1.0 + h.euclid_sq());
  if (k < -tol) return -1;
  if (k > tol) return 1;
  return 0;
}

double hamiltonian_value(const MetricParams& params, const Covector& h) {
  return -0.5 * (h.h1 * h.h1 / params.I1 - h.h2 * h.h2 / params.I2 - h.h3 * h.h3 / params.I3);
}

Covector normalize_timelike(const MetricParams& params, const Covector& h) {
  const double H = hamiltonian_value(params, h);
  if (!(H < 0.0)) throw NotTimeLike("normalize_timelike: H(h) is not negative");
  if (!(h.h1 < 0.0)) throw NotTimeLike("normalize_timelike: h1 must be negative (future directed)");
  const double s = 1.0 / std::sqrt(-2.0 * H);
  return Covector{s * h.h1, s * h.h2, s * h.h3};
}

Covector normalize_lightlike(const MetricParams& params, const Covector& h) {
  const double H = hamiltonian_value(params, h);
  if (std::fabs(H) > 1e-10 * (1.0 + h.euclid_sq()))
    throw NotTimeLike("normalize_lightlike: H(h) does not vanish");
  if (!(h.h1 < 0.0)) throw NotTimeLike("normalize_lightlike: h1 must be negative");
  const double s = 1.0 / std::fabs(h.h1);
  return Covector{s * h.h1, s * h.h2, s * h.h3};
}

CausalClass classify(const MetricParams& params, const Covector& h) {
  if (!(h.h1 < 0.0)) throw NotAdmissible("classify: h1 must be negative");
  const double H = hamiltonian_value(params, h);
  const double tol = 1e-10 * (1.0 + h.euclid_sq());
  if (std::fabs(H) <= tol) return CausalClass::LightLike;
  if (H > 0.0) throw NotAdmissible("classify: H(h) > 0, not a geodesic covector");
  return killing_branch(h) < 0 ? CausalClass::TimeLike : CausalClass::SpacelikeMomentum;
}

Covector vertical_flow(const MetricParams& params, const Covector& h, double t) {
  params.require_axisymmetric("vertical_flow");
  const double angle = t * params.eta() * h.h1 / params.I2;  // = 2 tau eta hbar1
  const double ca = std::cos(angle), sa = std::sin(angle);
  return Covector{h.h1, ca * h.h2 - sa * h.h3, sa * h.h2 + ca * h.h3};
}

Covector timelike_covector(const MetricParams& params, double s, double phi) {
  const double perp = std::sqrt(params.I2) * std::sinh(s);
  return Covector{-std::sqrt(params.I1) * std::cosh(s), perp * std::cos(phi), perp * std::sin(phi)};
}

Covector lightlike_covector(const MetricParams& params, double phi) {
  const double perp = std::sqrt(params.I2 / params.I1);
  return Covector{-1.0, perp * std::cos(phi), perp * std::sin(phi)};
}

}  // namespace berger
