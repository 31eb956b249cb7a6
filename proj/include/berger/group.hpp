#pragma once

#include <complex>
#include <vector>

#include "berger/metric.hpp"

namespace berger {

using Complex = std::complex<double>;

// Point of the universal cover in fiber/disk coordinates.  c is a plain real
// number carrying the winding; it is never reduced mod 2*pi.
struct GroupPoint {
  double c = 0.0;
  Complex w{0.0, 0.0};
};

// Same, for the ambient case with an n-dimensional w.
struct GroupPointN {
  double c = 0.0;
  std::vector<Complex> w;
};

// Element of SU(1,1) with rows (q0+iq1, q2+iq3; q2-iq3, q0-iq1).
struct SuMatrix {
  double q0 = 1.0, q1 = 0.0, q2 = 0.0, q3 = 0.0;

  Complex z() const { return {q0, q1}; }   // q0 + i q1
  Complex w() const { return {q2, q3}; }   // q2 + i q3
  double det() const { return q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3; }
};

SuMatrix su_mult(const SuMatrix& a, const SuMatrix& b);

// Group exponential, all three Killing branches handled through the entire
// functions cosh(sqrt(u)) and sinh(sqrt(u))/sqrt(u) so the null cone is not a
// special case numerically.
SuMatrix su_exp(const AlgebraVec& x);

struct GroupExp {
  SuMatrix matrix;
  GroupPoint point;  // c carries the winding of the one-parameter path s -> exp(s*x), s in [0,1]
};

GroupExp group_exp(const AlgebraVec& x);

// Multiplication rule in (c, w) coordinates; exact including the winding of c
// (the correction term always lies in (-pi/2, pi/2)).
GroupPoint group_mult(const GroupPoint& a, const GroupPoint& b);

// Rotation around the fiber axis: (c, w) -> (c, e^{i phi} w).
GroupPoint rotate_fiber(double phi, const GroupPoint& p);
GroupPointN rotate_fiber(double phi, const GroupPointN& p);

// Projection to the hyperboloid model: (c, w) -> (sqrt(1+|w|^2) e^{ic}, w).
std::pair<Complex, Complex> pi_project(const GroupPoint& p);

// SU(1,1) representative of a point (c taken mod 2*pi).
SuMatrix su_from_point(const GroupPoint& p);

// Principal-branch coordinates of an SU(1,1) element, c in (-pi, pi].
GroupPoint point_from_su(const SuMatrix& m);

// Continuous argument along theta -> cos(theta) + i*a*sin(theta) for |a| >= 1,
// starting from 0.  (A, B) must be the point at the given theta.
double ellipse_arg(double a_sign, double A, double B, double theta);

// cosh(sqrt(u)) and sinh(sqrt(u))/sqrt(u) as entire functions of u.
void cs_entire(double u, double& C, double& S);

}  // namespace berger
