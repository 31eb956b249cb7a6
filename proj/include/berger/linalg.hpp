#pragma once

#include <array>
#include <cstddef>

namespace berger {

// Minimal fixed-size 3x3 real linear algebra.  Everything in the library is
// three dimensional, so we keep this self-contained instead of pulling in a
// matrix library.

using Vec3 = std::array<double, 3>;

struct Mat3 {
  // row-major entries
  std::array<std::array<double, 3>, 3> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  static Mat3 identity();
  static Mat3 diag(double a, double b, double c);
  static Mat3 zero();
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(double s, const Mat3& a);
Vec3 operator*(const Mat3& a, const Vec3& v);

Mat3 transpose(const Mat3& a);
double det3(const Mat3& a);
double dot(const Vec3& a, const Vec3& b);
double quad_form(const Mat3& q, const Vec3& v);  // v^T q v
double max_abs(const Mat3& a);

struct SymEigen {
  Vec3 values;   // ascending
  Mat3 vectors;  // columns are the eigenvectors
};

// Cyclic Jacobi iteration for a symmetric 3x3 matrix.
SymEigen sym_eigen(const Mat3& a);

// Lower-triangular Cholesky factor of a positive definite matrix; throws
// std::domain_error otherwise.
Mat3 cholesky3(const Mat3& a);

// Solve L x = b and L^T x = b for a lower-triangular L.
Vec3 solve_lower(const Mat3& l, const Vec3& b);
Vec3 solve_upper_t(const Mat3& l, const Vec3& b);

// Eigenvalues of the pencil A v = lambda B v with A symmetric and B positive
// definite, via Cholesky reduction to an ordinary symmetric problem.
SymEigen generalized_sym_eigen(const Mat3& a, const Mat3& b);

// Matrix exponential by scaling and squaring on a truncated series.  Used for
// generating group elements of SO(1,2) from Killing-antisymmetric generators.
Mat3 mat_exp3(const Mat3& a);

}  // namespace berger
