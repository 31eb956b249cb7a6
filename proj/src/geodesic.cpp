#include "berger/geodesic.hpp"

#include <cmath>
#include <stdexcept>

#include "berger/errors.hpp"

namespace berger {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TrigPair trig_pair(double tau, int chi) {
  if (chi < 0) return TrigPair{std::cos(tau), std::sin(tau), -1};
  if (chi > 0) return TrigPair{std::cosh(tau), std::sinh(tau), 1};
  return TrigPair{1.0, tau, 0};
}

GroupPoint exp_map(const MetricParams& params, const Covector& h, double t) {
  params.require_axisymmetric("exp_map");
  if (t < 0.0) throw NotAdmissible("exp_map: t must be nonnegative");
  if (!(h.h1 < 0.0)) throw NotAdmissible("exp_map: h1 must be negative");
  const double H = hamiltonian_value(params, h);
  if (H > 1e-9 * (1.0 + h.euclid_sq()))
    throw NotAdmissible("exp_map: H(h) > 0, covector is not admissible");

  const double half = 0.5 * t / params.I2;
  const double kil = h.kil();
  const double u = half * half * kil;
  double C, S;
  cs_entire(u, C, S);

  // q0 + i q1 = (C - i h1*half*S) e^{-i alpha},  w = (h2 + i h3)*half*S e^{i alpha}
  const double A = C;
  const double B = -h.h1 * half * S;
  const double alpha = half * params.eta() * h.h1;

  double arg0;
  if (kil < 0.0) {
    const double tau = half * std::sqrt(-kil);
    arg0 = ellipse_arg(1.0, A, B, tau);  // the B coefficient -hbar1 is >= 1 here
  } else {
    arg0 = std::atan2(B, A);  // A = cosh or affine branch, right half plane
  }

  GroupPoint out;
  out.c = arg0 - alpha;
  out.w = Complex(h.h2, h.h3) * (half * S) * std::exp(Complex(0.0, alpha));
  return out;
}

GroupPointN exp_map_nd(const MetricParams& params, double h1, std::span<const Complex> hperp,
                       double t) {
  if (static_cast<int>(hperp.size()) != params.n)
    throw std::invalid_argument("exp_map_nd: hperp size must equal params.n");
  double r2 = 0.0;
  for (const Complex& z : hperp) r2 += std::norm(z);
  const double r = std::sqrt(r2);

  const GroupPoint p3 = exp_map(params, Covector{h1, r, 0.0}, t);

  GroupPointN out;
  out.c = p3.c;
  out.w.assign(hperp.size(), Complex(0.0, 0.0));
  if (r > 1e-300) {
    const Complex scale = p3.w / r;
    for (size_t i = 0; i < hperp.size(); ++i) out.w[i] = scale * hperp[i];
  }
  return out;
}

double light_like_boundary_c(const MetricParams& params, double wmag) {
  params.require_axisymmetric("light_like_boundary_c");
  if (wmag < 0.0) throw std::invalid_argument("light_like_boundary_c: wmag must be nonnegative");
  const double eta = params.eta();
  switch (params.regime()) {
    case Regime::Oblate:
      throw RegimeError("light_like_boundary_c: attainable set has no boundary for eta < 0");
    case Regime::Symmetric:
      return std::atan(wmag);
    case Regime::Prolate: {
      const double se = std::sqrt(eta);
      const double tau = std::asinh(wmag * se / std::sqrt(eta + 1.0));
      return tau * se + std::atan(std::tanh(tau) / se);
    }
  }
  return 0.0;
}

Covector maxwell_partner(const Covector& h, double phi) {
  const double ca = std::cos(phi), sa = std::sin(phi);
  return Covector{h.h1, ca * h.h2 - sa * h.h3, sa * h.h2 + ca * h.h3};
}

double w_phase_shift(const MetricParams& params, const Covector& h, double t) {
  return 0.5 * t * params.eta() * h.h1 / params.I2;
}

double GeodesicArc::lorentzian_length(const MetricParams& params) const {
  return classify(params, h) == CausalClass::LightLike ? 0.0 : t1;
}

}  // namespace berger
