#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "berger/covector.hpp"
#include "berger/errors.hpp"
#include "helpers.hpp"

using namespace berger;
using namespace berger::testing;

TEST_CASE("hamiltonian values") {
  const MetricParams p1 = MetricParams::axisymmetric(3.0, 1.5);
  CHECK(hamiltonian_value(p1, {-std::sqrt(p1.I1), 0, 0}) == doctest::Approx(-0.5));
  // null level: h1^2/I1 = (h2^2+h3^2)/I2
  CHECK(hamiltonian_value(p1, {-std::sqrt(p1.I1), std::sqrt(p1.I2), 0}) == doctest::Approx(0.0));
  const MetricParams p2 = MetricParams::axisymmetric(1.0, 2.0);
  CHECK(hamiltonian_value(p2, {-1, 1, 0}) == doctest::Approx(-0.25));
}

TEST_CASE("normalize_timelike") {
  const MetricParams p = MetricParams::from_eta(1.7, -0.3);
  SUBCASE("pure scaling along the axis") {
    const Covector n = normalize_timelike(p, {-2.0 * std::sqrt(p.I1), 0, 0});
    CHECK(n.h1 == doctest::Approx(-std::sqrt(p.I1)).epsilon(1e-14));
  }
  SUBCASE("output lands on H = -1/2 and satisfies the norm identity") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1, 1);
    int done = 0;
    while (done < 200) {
      Covector h{-std::fabs(u(rng)) - 0.5, u(rng), u(rng)};
      if (hamiltonian_value(p, h) >= -1e-3) continue;
      const Covector n = normalize_timelike(p, h);
      CHECK(hamiltonian_value(p, n) == doctest::Approx(-0.5).epsilon(1e-12));
      // direction unchanged
      CHECK(n.h2 * h.h1 == doctest::Approx(n.h1 * h.h2).epsilon(1e-10));
      // |h| = sqrt(I2)/sqrt(1 + eta hbar1^2) on the trigonometric branch
      if (n.kil() < 0) {
        const double hbar1 = n.hbar1();
        CHECK(n.norm() ==
              doctest::Approx(std::sqrt(p.I2 / (1.0 + p.eta() * hbar1 * hbar1))).epsilon(1e-10));
        CHECK(hbar1 <= -1.0 + 1e-12);
        CHECK(hbar1 > -1.0 / std::sqrt(-p.eta()));
      }
      // idempotence
      const Covector nn = normalize_timelike(p, n);
      CHECK(nn.h1 == doctest::Approx(n.h1).epsilon(1e-14));
      ++done;
    }
  }
  SUBCASE("worked scaling example") {
    const MetricParams unit = MetricParams::axisymmetric(1, 1);
    const Covector n = normalize_timelike(unit, {-3, 1, 1});
    CHECK(hamiltonian_value(unit, n) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(n.h1 == doctest::Approx(-3.0 / std::sqrt(7.0)));
  }
  SUBCASE("rejections") {
    const MetricParams unit = MetricParams::axisymmetric(1, 1);
    CHECK_THROWS_AS(normalize_timelike(unit, {-1, 2, 0}), NotTimeLike);  // H > 0
    CHECK_THROWS_AS(normalize_timelike(unit, {1, 0, 0}), NotTimeLike);   // past directed
    CHECK_THROWS_AS(normalize_timelike(unit, {-1, 1, 0}), NotTimeLike);  // H = 0
  }
}

TEST_CASE("light-like classification per regime") {
  SUBCASE("oblate: hbar1 = -1/sqrt(-eta), trig branch") {
    const MetricParams p = MetricParams::from_eta(1.0, -0.36);
    const Covector l = lightlike_covector(p, 0.7);
    CHECK(hamiltonian_value(p, l) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(killing_branch(l) == -1);
    CHECK(l.hbar1() == doctest::Approx(-1.0 / 0.6).epsilon(1e-12));
    CHECK(classify(p, l) == CausalClass::LightLike);
  }
  SUBCASE("prolate: hbar1 = -1/sqrt(eta), hyperbolic branch") {
    const MetricParams p = MetricParams::from_eta(1.0, 0.25);
    const Covector l = lightlike_covector(p, -1.2);
    CHECK(killing_branch(l) == 1);
    CHECK(l.hbar1() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(classify(p, l) == CausalClass::LightLike);
  }
  SUBCASE("symmetric: Killing-null") {
    const MetricParams p = MetricParams::axisymmetric(2.0, 2.0);
    const Covector l = lightlike_covector(p, 0.0);
    CHECK(killing_branch(l) == 0);
    CHECK(classify(p, l) == CausalClass::LightLike);
  }
  SUBCASE("prolate time-like covectors cross the Killing branches") {
    const MetricParams p = MetricParams::from_eta(1.0, 1.0);
    CHECK(classify(p, timelike_covector(p, 0.3, 0)) == CausalClass::TimeLike);
    // sinh(s)^2 > 1/eta = 1 beyond s = asinh(1)
    CHECK(classify(p, timelike_covector(p, 2.0, 0)) == CausalClass::SpacelikeMomentum);
  }
}

TEST_CASE("normalize_lightlike fixes the free scale") {
  const MetricParams p = MetricParams::from_eta(1.0, 0.5);
  Covector l = lightlike_covector(p, 0.3);
  l = Covector{3.0 * l.h1, 3.0 * l.h2, 3.0 * l.h3};
  const Covector n = normalize_lightlike(p, l);
  CHECK(n.h1 == doctest::Approx(-1.0));
  CHECK_THROWS_AS(normalize_lightlike(p, timelike_covector(p, 0.5, 0)), NotTimeLike);
}

TEST_CASE("vertical flow") {
  SUBCASE("symmetric case is the identity") {
    const MetricParams p = MetricParams::axisymmetric(2.0, 2.0);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
      const Covector h = random_timelike(p, rng);
      const Covector f = vertical_flow(p, h, 3.7);
      CHECK(f.h2 == doctest::Approx(h.h2).epsilon(1e-14));
      CHECK(f.h3 == doctest::Approx(h.h3).epsilon(1e-14));
    }
  }
  SUBCASE("axis momentum is fixed") {
    const MetricParams p = MetricParams::from_eta(1.0, 0.4);
    const Covector f = vertical_flow(p, {-1, 0, 0}, 11.0);
    CHECK(f.h1 == -1.0);
    CHECK(f.h2 == 0.0);
    CHECK(f.h3 == 0.0);
  }
  SUBCASE("conserves h1, Kil and H") {
    const MetricParams p = MetricParams::from_eta(1.3, -0.55);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ut(-5, 5);
    for (int i = 0; i < 100; ++i) {
      const Covector h = random_timelike(p, rng);
      const double t = ut(rng);
      const Covector f = vertical_flow(p, h, t);
      CHECK(f.h1 == h.h1);
      CHECK(f.kil() == doctest::Approx(h.kil()).epsilon(1e-12));
      CHECK(hamiltonian_value(p, f) == doctest::Approx(hamiltonian_value(p, h)).epsilon(1e-12));
    }
  }
  SUBCASE("matches an RK4 integration of the vertical subsystem") {
    const MetricParams p = MetricParams::from_eta(0.9, 0.35);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const Covector h0 = random_timelike(p, rng);
      const double t = 2.5;
      // plain RK4 on hdot2 = -(eta/I2) h1 h3, hdot3 = (eta/I2) h1 h2
      const int steps = 4000;
      const double dt = t / steps;
      double h2 = h0.h2, h3 = h0.h3;
      const double k = p.eta() * h0.h1 / p.I2;
      for (int i = 0; i < steps; ++i) {
        auto f2 = [&](double a3) { return -k * a3; };
        auto f3 = [&](double a2) { return k * a2; };
        const double k2a = f2(h3), k3a = f3(h2);
        const double k2b = f2(h3 + 0.5 * dt * k3a), k3b = f3(h2 + 0.5 * dt * k2a);
        const double k2c = f2(h3 + 0.5 * dt * k3b), k3c = f3(h2 + 0.5 * dt * k2b);
        const double k2d = f2(h3 + dt * k3c), k3d = f3(h2 + dt * k2c);
        h2 += dt / 6 * (k2a + 2 * (k2b + k2c) + k2d);
        h3 += dt / 6 * (k3a + 2 * (k3b + k3c) + k3d);
      }
      const Covector f = vertical_flow(p, h0, t);
      CHECK(f.h2 == doctest::Approx(h2).epsilon(1e-9));
      CHECK(f.h3 == doctest::Approx(h3).epsilon(1e-9));
    }
  }
}

TEST_CASE("hyperbola chart lands on H = -1/2") {
  for (double eta : {-0.8, -0.3, 0.0, 0.1, 1.0}) {
    const MetricParams p = MetricParams::from_eta(1.4, eta);
    for (double s : {0.0, 0.4, 1.7, 3.0}) {
      const Covector h = timelike_covector(p, s, 0.9);
      CHECK(hamiltonian_value(p, h) == doctest::Approx(-0.5).epsilon(1e-12));
      CHECK(h.h1 < 0.0);
    }
  }
}
