#include "berger/metric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "berger/errors.hpp"

namespace berger {

MetricParams MetricParams::axisymmetric(double i1, double i2, int n) {
  if (!(i1 > 0.0) || !(i2 > 0.0)) throw std::invalid_argument("MetricParams: I1, I2 must be positive");
  if (n < 1) throw std::invalid_argument("MetricParams: n must be >= 1");
  MetricParams p;
  p.I1 = i1;
  p.I2 = i2;
  p.I3 = i2;
  p.n = n;
  return p;
}

MetricParams MetricParams::from_eta(double i1, double eta, int n) {
  if (!(eta > -1.0)) throw std::invalid_argument("MetricParams: eta must exceed -1");
  return axisymmetric(i1, i1 * (1.0 + eta), n);
}

bool MetricParams::is_axisymmetric() const {
  return std::fabs(I2 - I3) <= 1e-12 * (I2 + I3);
}

void MetricParams::require_axisymmetric(const char* who) const {
  if (!is_axisymmetric())
    throw std::invalid_argument(std::string(who) + ": requires the axisymmetric case I2 == I3");
}

Regime MetricParams::regime() const {
  double e = eta();
  if (e < -regime_tol) return Regime::Oblate;
  if (e > regime_tol) return Regime::Prolate;
  return Regime::Symmetric;
}

AlgebraVec bracket(const AlgebraVec& x, const AlgebraVec& y) {
  return AlgebraVec{-(x.x2 * y.x3 - x.x3 * y.x2),
                    x.x3 * y.x1 - x.x1 * y.x3,
                    x.x1 * y.x2 - x.x2 * y.x1};
}

double killing(const AlgebraVec& x) { return -x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3; }

double lorentz_form(const MetricParams& params, const AlgebraVec& x) {
  return -params.I1 * x.x1 * x.x1 + params.I2 * x.x2 * x.x2 + params.I3 * x.x3 * x.x3;
}

double sectional_curvature(const MetricParams& params, const AlgebraVec& w) {
  params.require_axisymmetric("sectional_curvature");
  const double eta = params.eta();
  const double qww = lorentz_form(params, w);
  const double scale = params.I1 * (w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3);
  if (std::fabs(qww) <= 1e-12 * (1.0 + scale))
    throw DegeneratePlane("sectional_curvature: Q(w,w) vanishes, plane degenerate");
  const double qwe1 = -params.I1 * w.x1;  // Q(w, e1)
  const double denom = 4.0 * params.I1 * (eta + 1.0) * (eta + 1.0);
  return -(1.0 - 4.0 * eta * qwe1 * qwe1 / (params.I1 * qww)) / denom;
}

namespace {

constexpr double kKillingDiag[3] = {-1.0, 1.0, 1.0};

double killing_quad(const Vec3& v) { return -v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

// Smallest eigenvalue of sign*Kil + lambda*Q; concave in lambda.
double min_eigen_shift(int sign, const Mat3& q, double lambda) {
  Mat3 s = Mat3::diag(sign * kKillingDiag[0], sign * kKillingDiag[1], sign * kKillingDiag[2]) + lambda * q;
  return sym_eigen(s).values[0];
}

}  // namespace

CanonicalForm canonicalize_form(const Mat3& q) {
  // signature check
  SymEigen eq = sym_eigen(q);
  const double scale = std::fabs(eq.values[0]) + std::fabs(eq.values[2]);
  if (std::fabs(eq.values[0]) < 1e-12 * scale || std::fabs(eq.values[1]) < 1e-12 * scale)
    throw SignatureError("canonicalize_form: Q is degenerate");
  if (!(eq.values[0] < 0.0 && eq.values[1] > 0.0 && eq.values[2] > 0.0))
    throw SignatureError("canonicalize_form: Q does not have signature (1,2)");

  // sample the null cone of Q; Kil must not change sign there (the Finsler
  // condition, checked numerically on 512 directions)
  Vec3 axes[3];
  for (int k = 0; k < 3; ++k) {
    double inv = 1.0 / std::sqrt(std::fabs(eq.values[k]));
    axes[k] = Vec3{eq.vectors(0, k) * inv, eq.vectors(1, k) * inv, eq.vectors(2, k) * inv};
  }
  bool has_pos = false, has_neg = false;
  constexpr int kSamples = 512;
  constexpr double kZeroTol = 1e-10;
  for (int i = 0; i < kSamples; ++i) {
    double th = 2.0 * M_PI * (i + 0.5) / kSamples;
    Vec3 v;
    for (int j = 0; j < 3; ++j) v[j] = axes[0][j] + std::cos(th) * axes[1][j] + std::sin(th) * axes[2][j];
    double k = killing_quad(v);
    double vscale = dot(v, v);
    if (k > kZeroTol * vscale) has_pos = true;
    if (k < -kZeroTol * vscale) has_neg = true;
  }
  if (has_pos && has_neg)
    throw FinslerViolation("canonicalize_form: Killing form changes sign on the null cone of Q");
  if (!has_pos && !has_neg) {
    // Kil vanishes identically on the cone: Q is a positive multiple of Kil
    // (two signature-(1,2) forms sharing a null cone are proportional) and is
    // canonical already
    const double c = -q(0, 0);
    CanonicalForm out;
    out.params.I1 = c;
    out.params.I2 = q(1, 1);
    out.params.I3 = q(2, 2);
    out.params.n = 1;
    out.basis_change = Mat3::identity();
    out.lambda = 0.0;
    out.killing_sign = 0;
    return out;
  }
  const int sign = has_pos ? 1 : -1;

  // locate lambda with sign*Kil + lambda*Q positive definite; the smallest
  // eigenvalue is concave in lambda, golden-section maximization over a
  // bracket that is widened until the maximum is interior
  double lo = -1.0, hi = 1.0, lambda = 0.0, best = -1.0;
  for (int grow = 0; grow < 60 && best <= 0.0; ++grow) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = min_eigen_shift(sign, q, x1), f2 = min_eigen_shift(sign, q, x2);
    for (int it = 0; it < 200; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b - a);
        f2 = min_eigen_shift(sign, q, x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - gr * (b - a);
        f1 = min_eigen_shift(sign, q, x1);
      }
    }
    lambda = 0.5 * (a + b);
    best = min_eigen_shift(sign, q, lambda);
    lo *= 4.0;
    hi *= 4.0;
  }
  if (best <= 0.0)
    throw FinslerViolation("canonicalize_form: no Finsler shift found (sign*Kil + lambda*Q never definite)");

  // simultaneous diagonalization of S = sign*Kil + lambda*Q and Q
  Mat3 s = Mat3::diag(sign * kKillingDiag[0], sign * kKillingDiag[1], sign * kKillingDiag[2]) + lambda * q;
  SymEigen pencil = generalized_sym_eigen(q, s);  // q f_k = a_k s f_k, f_k S-orthonormal

  // rescale each f_k so that Kil(e_k) = +-1, then order time-like first and
  // the space block by increasing Q-eigenvalue
  Vec3 cols[3];
  double kil_val[3], q_val[3];
  for (int k = 0; k < 3; ++k) {
    Vec3 f{pencil.vectors(0, k), pencil.vectors(1, k), pencil.vectors(2, k)};
    double kf = killing_quad(f);
    double r = 1.0 / std::sqrt(std::fabs(kf));
    for (int i = 0; i < 3; ++i) f[i] *= r;
    cols[k] = f;
    kil_val[k] = killing_quad(f);
    q_val[k] = quad_form(q, f);
  }
  int time_idx = -1;
  for (int k = 0; k < 3; ++k)
    if (kil_val[k] < 0.0) {
      if (time_idx >= 0) throw SignatureError("canonicalize_form: Killing form not (1,2) on the pencil basis");
      time_idx = k;
    }
  if (time_idx < 0) throw SignatureError("canonicalize_form: no time-like pencil direction");
  int sp[2], nsp = 0;
  for (int k = 0; k < 3; ++k)
    if (k != time_idx) sp[nsp++] = k;
  if (q_val[sp[0]] > q_val[sp[1]]) std::swap(sp[0], sp[1]);
  if (!(q_val[time_idx] < 0.0 && q_val[sp[0]] > 0.0))
    throw FinslerViolation("canonicalize_form: Q signs do not match Killing signs in the common basis");

  Mat3 t;
  const int order[3] = {time_idx, sp[0], sp[1]};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) t(i, k) = cols[order[k]][i];
  if (det3(t) < 0.0)
    for (int i = 0; i < 3; ++i) t(i, 2) = -t(i, 2);  // stay in SO(1,2)

  CanonicalForm out;
  out.params.I1 = -q_val[time_idx];
  out.params.I2 = q_val[sp[0]];
  out.params.I3 = q_val[sp[1]];
  out.params.n = 1;
  out.basis_change = t;
  out.lambda = lambda;
  out.killing_sign = sign;
  return out;
}

}  // namespace berger
