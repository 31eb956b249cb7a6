#include "berger/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace berger {

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r(i, i) = 1.0;
  return r;
}

Mat3 Mat3::diag(double a, double b, double c) {
  Mat3 r;
  r(0, 0) = a;
  r(1, 1) = b;
  r(2, 2) = c;
  return r;
}

Mat3 Mat3::zero() { return Mat3{}; }

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = s * a(i, j);
  return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

double det3(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double quad_form(const Mat3& q, const Vec3& v) { return dot(v, q * v); }

double max_abs(const Mat3& a) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::fabs(a(i, j)));
  return r;
}

SymEigen sym_eigen(const Mat3& a) {
  Mat3 d = a;
  Mat3 v = Mat3::identity();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::fabs(d(0, 1)) + std::fabs(d(0, 2)) + std::fabs(d(1, 2));
    if (off < 1e-15 * (1.0 + max_abs(d))) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::fabs(d(p, q)) < 1e-300) continue;
        double theta = (d(q, q) - d(p, p)) / (2.0 * d(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        Mat3 r = Mat3::identity();
        r(p, p) = c;
        r(q, q) = c;
        r(p, q) = s;
        r(q, p) = -s;
        d = transpose(r) * d * r;
        d(p, q) = d(q, p) = 0.0;
        v = v * r;
      }
  }
  // sort ascending, keep vectors attached
  std::array<int, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return d(i, i) < d(j, j); });
  SymEigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[k] = d(idx[k], idx[k]);
    for (int i = 0; i < 3; ++i) out.vectors(i, k) = v(i, idx[k]);
  }
  return out;
}

Mat3 cholesky3(const Mat3& a) {
  Mat3 l;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0) throw std::domain_error("cholesky3: matrix not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

Vec3 solve_lower(const Mat3& l, const Vec3& b) {
  Vec3 x{};
  for (int i = 0; i < 3; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l(i, k) * x[k];
    x[i] = s / l(i, i);
  }
  return x;
}

Vec3 solve_upper_t(const Mat3& l, const Vec3& b) {
  Vec3 x{};
  for (int i = 2; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < 3; ++k) s -= l(k, i) * x[k];
    x[i] = s / l(i, i);
  }
  return x;
}

SymEigen generalized_sym_eigen(const Mat3& a, const Mat3& b) {
  Mat3 l = cholesky3(b);
  // c = l^-1 a l^-T, assembled column by column
  Mat3 tmp;
  for (int j = 0; j < 3; ++j) {
    Vec3 col{a(0, j), a(1, j), a(2, j)};
    Vec3 y = solve_lower(l, col);
    for (int i = 0; i < 3; ++i) tmp(i, j) = y[i];
  }
  Mat3 c;
  for (int i = 0; i < 3; ++i) {
    Vec3 row{tmp(i, 0), tmp(i, 1), tmp(i, 2)};
    Vec3 y = solve_lower(l, row);
    for (int j = 0; j < 3; ++j) c(i, j) = y[j];
  }
  // symmetrize against rounding
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double s = 0.5 * (c(i, j) + c(j, i));
      c(i, j) = c(j, i) = s;
    }
  SymEigen e = sym_eigen(c);
  // eigenvectors of the pencil are l^-T u
  Mat3 vecs;
  for (int k = 0; k < 3; ++k) {
    Vec3 u{e.vectors(0, k), e.vectors(1, k), e.vectors(2, k)};
    Vec3 w = solve_upper_t(l, u);
    for (int i = 0; i < 3; ++i) vecs(i, k) = w[i];
  }
  e.vectors = vecs;
  return e;
}

Mat3 mat_exp3(const Mat3& a) {
  double norm = max_abs(a);
  int s = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++s;
  }
  Mat3 x = std::pow(0.5, s) * a;
  Mat3 sum = Mat3::identity();
  Mat3 term = Mat3::identity();
  for (int k = 1; k <= 16; ++k) {
    term = (1.0 / k) * (term * x);
    sum = sum + term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

}  // namespace berger
