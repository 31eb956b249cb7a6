#pragma once

#include "berger/linalg.hpp"

namespace berger {

enum class Regime { Oblate, Symmetric, Prolate };

// Deformation data of the invariant Lorentzian form: eigenvalues of the
// quadratic form diag(-I1, I2, I3) on the Lie algebra.  The whole geodesic
// machinery assumes the axisymmetric case I2 == I3; only canonicalize_form
// may produce distinct space eigenvalues.
struct MetricParams {
  double I1 = 1.0;
  double I2 = 1.0;
  double I3 = 1.0;
  int n = 1;                    // ambient complex dimension of the w-part
  double regime_tol = 1e-12;    // classification tolerance on eta

  static MetricParams axisymmetric(double i1, double i2, int n = 1);
  static MetricParams from_eta(double i1, double eta, int n = 1);

  double eta() const { return I2 / I1 - 1.0; }
  bool is_axisymmetric() const;
  void require_axisymmetric(const char* who) const;
  Regime regime() const;
};

// Coordinates in the basis e1, e2, e3 with brackets
// [e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = -e1.
struct AlgebraVec {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

// Lie bracket in the fixed basis.
AlgebraVec bracket(const AlgebraVec& x, const AlgebraVec& y);

// Killing-form value -x1^2 + x2^2 + x3^2 (normalized so the e_i are unit).
double killing(const AlgebraVec& x);

// Lorentzian value -I1 x1^2 + I2 x2^2 + I3 x3^2.
double lorentz_form(const MetricParams& params, const AlgebraVec& x);

// Sectional curvature of the Q-orthogonal plane of w.  Requires I2 == I3 and
// Q(w,w) away from zero, otherwise DegeneratePlane.
double sectional_curvature(const MetricParams& params, const AlgebraVec& w);

struct CanonicalForm {
  MetricParams params;   // I1, I2, I3 with I2 <= I3
  Mat3 basis_change;     // columns are the canonical basis vectors; lies in SO(1,2)
  double lambda;         // Finsler shift that made sign*Kil + lambda*Q definite
  int killing_sign;      // sign of Kil on the null cone of Q
};

// Reduce a signature-(1,2) quadratic form on the algebra to diag(-I1, I2, I3)
// by a Killing-orthogonal automorphism.  Throws SignatureError on a wrong
// signature and FinslerViolation when Kil changes sign on the null cone of Q.
CanonicalForm canonicalize_form(const Mat3& q);

}  // namespace berger
