#include "berger/group.hpp"

#include <cmath>

namespace berger {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SuMatrix su_mult(const SuMatrix& a, const SuMatrix& b) {
  const Complex z = a.z() * b.z() + a.w() * std::conj(b.w());
  const Complex w = a.z() * b.w() + a.w() * std::conj(b.z());
  return SuMatrix{z.real(), z.imag(), w.real(), w.imag()};
}

void cs_entire(double u, double& C, double& S) {
  if (std::fabs(u) < 1e-6) {
    // series of cosh(sqrt(u)) and sinh(sqrt(u))/sqrt(u); |u|<1e-6 keeps the
    // truncation far below double precision
    C = 1.0 + u * (1.0 / 2.0 + u * (1.0 / 24.0 + u * (1.0 / 720.0 + u / 40320.0)));
    S = 1.0 + u * (1.0 / 6.0 + u * (1.0 / 120.0 + u * (1.0 / 5040.0 + u / 362880.0)));
  } else if (u > 0.0) {
    const double r = std::sqrt(u);
    C = std::cosh(r);
    S = std::sinh(r) / r;
  } else {
    const double r = std::sqrt(-u);
    C = std::cos(r);
    S = std::sin(r) / r;
  }
}

SuMatrix su_exp(const AlgebraVec& x) {
  const double u = 0.25 * killing(x);
  double C, S;
  cs_entire(u, C, S);
  return SuMatrix{C, 0.5 * x.x1 * S, 0.5 * x.x2 * S, 0.5 * x.x3 * S};
}

double ellipse_arg(double a_sign, double A, double B, double theta) {
  if (a_sign < 0.0) return -ellipse_arg(-a_sign, A, -B, theta);
  const double k = std::round(theta / kPi);
  const bool odd = (static_cast<long long>(k) & 1) != 0;
  const double sgn = odd ? -1.0 : 1.0;
  return k * kPi + std::atan2(sgn * B, sgn * A);
}

GroupExp group_exp(const AlgebraVec& x) {
  GroupExp out;
  out.matrix = su_exp(x);
  out.point.w = out.matrix.w();
  const double kil = killing(x);
  if (kil < 0.0) {
    const double theta = 0.5 * std::sqrt(-kil);
    const double a = x.x1 / std::sqrt(-kil);  // |a| >= 1 when Kil < 0
    out.point.c = ellipse_arg(a, out.matrix.q0, out.matrix.q1, theta);
  } else {
    // affine and hyperbolic branches stay in the right half plane
    out.point.c = std::atan2(out.matrix.q1, out.matrix.q0);
  }
  return out;
}

GroupPoint group_mult(const GroupPoint& a, const GroupPoint& b) {
  const double csum = a.c + b.c;
  const double ra = std::sqrt(1.0 + std::norm(a.w));
  const double rb = std::sqrt(1.0 + std::norm(b.w));
  const Complex cross = a.w * std::conj(b.w) * std::exp(Complex(0.0, -csum));
  GroupPoint out;
  out.c = csum + std::atan2(cross.imag(), ra * rb + cross.real());
  out.w = b.w * ra * std::exp(Complex(0.0, a.c)) + a.w * rb * std::exp(Complex(0.0, -b.c));
  return out;
}

GroupPoint rotate_fiber(double phi, const GroupPoint& p) {
  return GroupPoint{p.c, p.w * std::exp(Complex(0.0, phi))};
}

GroupPointN rotate_fiber(double phi, const GroupPointN& p) {
  GroupPointN out;
  out.c = p.c;
  out.w.reserve(p.w.size());
  const Complex f = std::exp(Complex(0.0, phi));
  for (const Complex& wi : p.w) out.w.push_back(wi * f);
  return out;
}

std::pair<Complex, Complex> pi_project(const GroupPoint& p) {
  const double r = std::sqrt(1.0 + std::norm(p.w));
  return {r * std::exp(Complex(0.0, p.c)), p.w};
}

SuMatrix su_from_point(const GroupPoint& p) {
  const auto [z, w] = pi_project(p);
  return SuMatrix{z.real(), z.imag(), w.real(), w.imag()};
}

GroupPoint point_from_su(const SuMatrix& m) {
  return GroupPoint{std::atan2(m.q1, m.q0), m.w()};
}

}  // namespace berger
