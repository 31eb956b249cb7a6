#include "berger/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace berger {

namespace {

struct State {
  double y[6];  // c, Re w, Im w, h1, h2, h3
};

void rhs(const MetricParams& p, const State& s, State& d) {
  const double c = s.y[0];
  const Complex w(s.y[1], s.y[2]);
  const double h1 = s.y[3], h2 = s.y[4], h3 = s.y[5];

  // vertical part
  d.y[3] = (p.I2 - p.I3) / (p.I2 * p.I3) * h2 * h3;
  d.y[4] = (p.I1 - p.I3) / (p.I1 * p.I3) * h1 * h3;
  d.y[5] = (p.I2 - p.I1) / (p.I1 * p.I2) * h1 * h2;

  // control of the maximized Hamiltonian, as a coordinate tangent at the
  // identity (the exponential halves the algebra coefficients)
  const double xi = 0.5 * (-h1 / p.I1);
  const Complex omega(0.5 * h2 / p.I2, 0.5 * h3 / p.I3);

  // left translation to the current point
  const double r = std::sqrt(1.0 + std::norm(w));
  const Complex eic = std::exp(Complex(0.0, c));
  d.y[0] = xi + (w * std::conj(omega) / eic).imag() / r;
  const Complex wdot = omega * r * eic - Complex(0.0, 1.0) * w * xi;
  d.y[1] = wdot.real();
  d.y[2] = wdot.imag();
}

void rk4_step(const MetricParams& p, State& s, double dt) {
  State k1, k2, k3, k4, tmp;
  rhs(p, s, k1);
  for (int i = 0; i < 6; ++i) tmp.y[i] = s.y[i] + 0.5 * dt * k1.y[i];
  rhs(p, tmp, k2);
  for (int i = 0; i < 6; ++i) tmp.y[i] = s.y[i] + 0.5 * dt * k2.y[i];
  rhs(p, tmp, k3);
  for (int i = 0; i < 6; ++i) tmp.y[i] = s.y[i] + dt * k3.y[i];
  rhs(p, tmp, k4);
  for (int i = 0; i < 6; ++i) s.y[i] += dt / 6.0 * (k1.y[i] + 2.0 * (k2.y[i] + k3.y[i]) + k4.y[i]);
}

HamiltonianState unpack(const State& s) {
  return HamiltonianState{GroupPoint{s.y[0], Complex(s.y[1], s.y[2])},
                          Covector{s.y[3], s.y[4], s.y[5]}};
}

}  // namespace

HamiltonianState integrate_hamiltonian(const MetricParams& params, const Covector& h0, double t,
                                       int steps) {
  if (steps < 1) throw std::invalid_argument("integrate_hamiltonian: steps must be >= 1");
  State s{{0.0, 0.0, 0.0, h0.h1, h0.h2, h0.h3}};
  const double dt = t / steps;
  for (int i = 0; i < steps; ++i) rk4_step(params, s, dt);
  return unpack(s);
}

std::vector<HamiltonianState> integrate_checkpoints(const MetricParams& params, const Covector& h0,
                                                    std::span<const double> times, int total_steps) {
  std::vector<HamiltonianState> out;
  out.reserve(times.size());
  State s{{0.0, 0.0, 0.0, h0.h1, h0.h2, h0.h3}};
  double t_prev = 0.0;
  const double t_final = times.empty() ? 0.0 : times.back();
  for (double t : times) {
    if (t < t_prev) throw std::invalid_argument("integrate_checkpoints: times must be increasing");
    const double seg = t - t_prev;
    int steps = t_final > 0.0 ? static_cast<int>(std::ceil(total_steps * seg / t_final)) : 1;
    if (steps < 1) steps = 1;
    const double dt = seg / steps;
    if (seg > 0.0)
      for (int i = 0; i < steps; ++i) rk4_step(params, s, dt);
    out.push_back(unpack(s));
    t_prev = t;
  }
  return out;
}

}  // namespace berger
