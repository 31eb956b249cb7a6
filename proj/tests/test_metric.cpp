#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "berger/errors.hpp"
#include "berger/metric.hpp"
#include "helpers.hpp"

using namespace berger;
using namespace berger::testing;

TEST_CASE("killing form values") {
  CHECK(killing({1, 0, 0}) == doctest::Approx(-1.0));
  CHECK(killing({1, 1, 0}) == doctest::Approx(0.0));
  CHECK(killing({0.6, 0.8, 0.0}) == doctest::Approx(0.28));
}

TEST_CASE("lorentz form values") {
  const MetricParams unit = MetricParams::axisymmetric(1, 1);
  CHECK(lorentz_form(unit, {1, 0, 0}) == doctest::Approx(-1.0));
  const MetricParams p = MetricParams::axisymmetric(1, 2);
  CHECK(lorentz_form(p, {1, 1, 0}) == doctest::Approx(1.0));

  // eta = 0: proportional to the Killing form
  const MetricParams s = MetricParams::axisymmetric(2.5, 2.5);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    AlgebraVec x{u(rng), u(rng), u(rng)};
    CHECK(lorentz_form(s, x) == doctest::Approx(2.5 * killing(x)).epsilon(1e-12));
  }
}

TEST_CASE("metric params invariants and regimes") {
  const MetricParams p = MetricParams::axisymmetric(2.0, 1.0);
  CHECK(p.eta() == doctest::Approx(-0.5));
  CHECK(p.regime() == Regime::Oblate);
  CHECK(MetricParams::axisymmetric(1.0, 1.0).regime() == Regime::Symmetric);
  CHECK(MetricParams::axisymmetric(1.0, 1.1).regime() == Regime::Prolate);
  CHECK(MetricParams::from_eta(2.0, 0.25).I2 == doctest::Approx(2.5));
  CHECK_THROWS_AS(MetricParams::axisymmetric(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(MetricParams::from_eta(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("bracket matches the structure constants") {
  const AlgebraVec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  auto eq = [](const AlgebraVec& a, const AlgebraVec& b) {
    return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  };
  CHECK(eq(bracket(e1, e2), e3));
  CHECK(eq(bracket(e1, e3), AlgebraVec{0, -1, 0}));
  CHECK(eq(bracket(e2, e3), AlgebraVec{-1, 0, 0}));
}

TEST_CASE("sectional curvature closed forms") {
  SUBCASE("constant curvature at eta = 0") {
    const MetricParams p = MetricParams::axisymmetric(2.0, 2.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    int checked = 0;
    while (checked < 100) {
      AlgebraVec w{u(rng), u(rng), u(rng)};
      if (std::fabs(lorentz_form(p, w)) < 1e-3) continue;
      CHECK(sectional_curvature(p, w) == doctest::Approx(-1.0 / (4.0 * p.I1)).epsilon(1e-12));
      ++checked;
    }
  }
  SUBCASE("axis and orthogonal planes") {
    const MetricParams p = MetricParams::from_eta(1.5, 0.4);
    const double eta = p.eta();
    const double base = 4.0 * p.I1 * (1 + eta) * (1 + eta);
    CHECK(sectional_curvature(p, {1, 0, 0}) == doctest::Approx(-(1 + 4 * eta) / base));
    CHECK(sectional_curvature(p, {0, 1, 0}) == doctest::Approx(-1.0 / base));
  }
  SUBCASE("rotational invariance in (w2, w3)") {
    const MetricParams p = MetricParams::from_eta(1.0, -0.6);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 100; ++i) {
      AlgebraVec w{u(rng) * 2, u(rng), u(rng)};
      if (std::fabs(lorentz_form(p, w)) < 1e-3) continue;
      const double phi = u(rng) * kPi;
      AlgebraVec wr{w.x1, std::cos(phi) * w.x2 - std::sin(phi) * w.x3,
                    std::sin(phi) * w.x2 + std::cos(phi) * w.x3};
      CHECK(sectional_curvature(p, w) ==
            doctest::Approx(sectional_curvature(p, wr)).epsilon(1e-12));
    }
  }
  SUBCASE("degenerate plane rejected") {
    const MetricParams p = MetricParams::from_eta(1.0, 0.5);
    // Q(w,w) = 0 at w = (1, sqrt(I1/I2), 0)
    AlgebraVec w{1.0, std::sqrt(p.I1 / p.I2), 0.0};
    CHECK_THROWS_AS(sectional_curvature(p, w), DegeneratePlane);
  }
}

TEST_CASE("canonicalize_form on already canonical input") {
  SUBCASE("identity-like") {
    const CanonicalForm c = canonicalize_form(Mat3::diag(-1, 1, 1));
    CHECK(c.params.I1 == doctest::Approx(1.0));
    CHECK(c.params.I2 == doctest::Approx(1.0));
    CHECK(c.params.I3 == doctest::Approx(1.0));
  }
  SUBCASE("diagonal with distinct eigenvalues") {
    const CanonicalForm c = canonicalize_form(Mat3::diag(-2, 3, 3));
    CHECK(c.params.I1 == doctest::Approx(2.0));
    CHECK(c.params.I2 == doctest::Approx(3.0));
    CHECK(c.params.I3 == doctest::Approx(3.0));
  }
}

TEST_CASE("canonicalize_form recovers a conjugated diagonal form") {
  std::mt19937_64 rng(2024);
  const Mat3 kil = Mat3::diag(-1, 1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat3 r = random_so12(rng, 0.8);
    const Mat3 q = transpose(r) * Mat3::diag(-1, 2, 5) * r;
    const CanonicalForm c = canonicalize_form(q);
    CHECK(c.params.I1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(c.params.I2 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(c.params.I3 == doctest::Approx(5.0).epsilon(1e-9));

    // basis change diagonalizes Q and preserves the Killing form
    const Mat3 t = c.basis_change;
    const Mat3 qd = transpose(t) * q * t;
    const Mat3 kd = transpose(t) * kil * t;
    CHECK(qd(0, 0) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(qd(1, 1) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(qd(2, 2) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(max_abs(kd - kil) < 1e-9);
    CHECK(det3(t) == doctest::Approx(1.0).epsilon(1e-9));

    // the new basis satisfies the same commutator relations (automorphism)
    const AlgebraVec f1{t(0, 0), t(1, 0), t(2, 0)};
    const AlgebraVec f2{t(0, 1), t(1, 1), t(2, 1)};
    const AlgebraVec f3{t(0, 2), t(1, 2), t(2, 2)};
    auto close = [](const AlgebraVec& a, const AlgebraVec& b) {
      return std::fabs(a.x1 - b.x1) + std::fabs(a.x2 - b.x2) + std::fabs(a.x3 - b.x3) < 1e-9;
    };
    CHECK(close(bracket(f1, f2), f3));
    CHECK(close(bracket(f1, f3), AlgebraVec{-f2.x1, -f2.x2, -f2.x3}));
    CHECK(close(bracket(f2, f3), AlgebraVec{-f1.x1, -f1.x2, -f1.x3}));
  }
}

TEST_CASE("canonicalize_form error paths") {
  CHECK_THROWS_AS(canonicalize_form(Mat3::diag(1, 1, 1)), SignatureError);
  CHECK_THROWS_AS(canonicalize_form(Mat3::diag(-1, -1, 1)), SignatureError);
  CHECK_THROWS_AS(canonicalize_form(Mat3::diag(0, 1, 1)), SignatureError);
  // space eigenvalues straddling I1: Kil changes sign on the null cone of Q
  CHECK_THROWS_AS(canonicalize_form(Mat3::diag(-1, 5, 0.5)), FinslerViolation);
}

TEST_CASE("canonicalize_form handles multiples of the Killing form") {
  const CanonicalForm c = canonicalize_form(Mat3::diag(-2, 2, 2));
  CHECK(c.params.I1 == doctest::Approx(2.0));
  CHECK(c.params.I2 == doctest::Approx(2.0));
  CHECK(c.params.I3 == doctest::Approx(2.0));
  CHECK(max_abs(c.basis_change - Mat3::identity()) == 0.0);
}

TEST_CASE("generalized symmetric eigenproblem sanity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) a(i, j) = a(j, i) = u(rng);
    Mat3 b = Mat3::diag(1.5, 0.7, 2.2);
    b(0, 1) = b(1, 0) = 0.2;
    const SymEigen e = generalized_sym_eigen(a, b);
    for (int k = 0; k < 3; ++k) {
      const Vec3 v{e.vectors(0, k), e.vectors(1, k), e.vectors(2, k)};
      const Vec3 av = a * v;
      const Vec3 bv = b * v;
      for (int i = 0; i < 3; ++i) CHECK(av[i] == doctest::Approx(e.values[k] * bv[i]).epsilon(1e-8));
    }
  }
}
