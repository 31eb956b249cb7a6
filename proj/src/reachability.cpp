#include "berger/reachability.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "berger/errors.hpp"

namespace berger {

namespace {
constexpr double kPi = 3.14159265358979323846;

double f_ratio(double s) { return s / std::sqrt(1.0 + s * s); }  // increases to 1

double boundary_tol(const GroupPoint& p) { return 1e-12 * (1.0 + std::fabs(p.c) + std::abs(p.w)); }
}  // namespace

ConeDecomposition admissible_cone_contains(const MetricParams& params, const GroupPoint& base,
                                           double cdot, const Complex& wdot) {
  params.require_axisymmetric("admissible_cone_contains");
  ConeDecomposition out;
  const double n2 = std::norm(base.w);
  out.xi = cdot * (1.0 + n2) - (base.w * std::conj(wdot)).imag();
  out.omega = (wdot + Complex(0.0, 1.0) * base.w * out.xi) * std::exp(Complex(0.0, -base.c)) /
              std::sqrt(1.0 + n2);
  const double q = params.I1 * out.xi * out.xi - params.I2 * std::norm(out.omega);
  const double scale = params.I1 * out.xi * out.xi + params.I2 * std::norm(out.omega);
  out.admissible = out.xi > 0.0 && q >= -1e-12 * (1.0 + scale);
  out.boundary = out.admissible && std::fabs(q) <= 1e-10 * (1.0 + scale);
  out.lorentzian_length = out.admissible ? std::sqrt(std::max(q, 0.0)) : 0.0;
  return out;
}

ReachVerdict attainable_contains(const MetricParams& params, const GroupPoint& p) {
  params.require_axisymmetric("attainable_contains");
  const double tol = boundary_tol(p);
  const double wmag = std::abs(p.w);
  ReachVerdict v;
  switch (params.regime()) {
    case Regime::Oblate:
      v.in_attainable = true;
      return v;
    case Regime::Symmetric: {
      const double b = std::atan(wmag);
      v.in_attainable = p.c >= b - tol;
      v.on_boundary = v.in_attainable && std::fabs(p.c - b) <= tol;
      const double upper = kPi - b;
      const bool at_cut_point = std::fabs(p.c - kPi) <= tol && wmag <= tol;
      v.longest_arc_exists = v.in_attainable && (p.c < upper - tol || at_cut_point);
      v.infinite_distance = v.in_attainable && p.c > upper + tol && !at_cut_point;
      return v;
    }
    case Regime::Prolate: {
      const double b = light_like_boundary_c(params, wmag);
      v.in_attainable = p.c >= b - tol;
      v.on_boundary = v.in_attainable && std::fabs(p.c - b) <= tol;
      v.longest_arc_exists = v.in_attainable;
      return v;
    }
  }
  return v;
}

ReachVerdict attainable_contains_nd(const MetricParams& params, const GroupPointN& p) {
  double n2 = 0.0;
  for (const Complex& z : p.w) n2 += std::norm(z);
  return attainable_contains(params, GroupPoint{p.c, Complex(std::sqrt(n2), 0.0)});
}

GroupPoint evaluate_plan(std::span<const ControlArc> plan) {
  GroupPoint g;
  for (const ControlArc& arc : plan) {
    const AlgebraVec step{arc.u.x1 * arc.dt, arc.u.x2 * arc.dt, arc.u.x3 * arc.dt};
    g = group_mult(g, group_exp(step).point);
  }
  return g;
}

namespace {

// Closed-form data of the light-like arc exp(t*u) for the oblate unit control
// u = (ubar1, cos(theta)/sqrt(-eta), sin(theta)/sqrt(-eta)), Kil(u) = 1.
struct LightArc {
  double c;     // atan(ubar1 * tanh(t/2))
  double wmag;  // sinh(t/2)/sqrt(-eta)
};

LightArc light_arc(double ubar1, double sqrt_neg_eta, double t) {
  return LightArc{std::atan(ubar1 * std::tanh(0.5 * t)), std::sinh(0.5 * t) / sqrt_neg_eta};
}

}  // namespace

std::vector<ControlArc> oblate_reach_plan(const MetricParams& params, const GroupPoint& target,
                                          double tol) {
  params.require_axisymmetric("oblate_reach_plan");
  if (params.regime() != Regime::Oblate)
    throw RegimeError("oblate_reach_plan: requires the oblate regime eta < 0");
  const double eta = params.eta();
  const double sne = std::sqrt(-eta);
  const double ubar1 = std::sqrt(eta + 1.0) / sne;
  const double c_light_sup = std::atan(ubar1);

  std::vector<ControlArc> plan;
  GroupPoint state;  // endpoint tracked through exact group operations

  auto push_light = [&](double theta, double dt) {
    plan.push_back(ControlArc{AlgebraVec{ubar1, std::cos(theta) / sne, std::sin(theta) / sne}, dt});
    state = group_mult(state, group_exp(AlgebraVec{plan.back().u.x1 * dt, plan.back().u.x2 * dt,
                                                   plan.back().u.x3 * dt})
                                  .point);
  };
  auto push_vertical = [&](double dc) {
    if (dc <= 0.0) return;
    plan.push_back(ControlArc{AlgebraVec{1.0, 0.0, 0.0}, 2.0 * dc});
    state = group_mult(state, group_exp(AlgebraVec{2.0 * dc, 0.0, 0.0}).point);
  };

  const double wmag_target = std::abs(target.w);
  double t_hop = 0.0, c_hop = 0.0;
  if (wmag_target > 0.0) {
    t_hop = 2.0 * std::asinh(wmag_target * sne);
    c_hop = light_arc(ubar1, sne, t_hop).c;
  }
  const double c_axis = target.c - c_hop;  // axis point the plan passes through

  if (c_axis >= 0.0) {
    push_vertical(c_axis);
  } else {
    // descent step: t1 with q = ubar1 f(sinh(t1/2)) / f(|w_u(t1)|) safely < 1,
    // so the c-decrement of a quarter-phase light arc dominates
    double t1 = 2.0 * std::asinh(1.0);
    const double qlim = 0.5 * (1.0 + std::sqrt(eta + 1.0));
    auto q_of = [&](double t) {
      const LightArc a = light_arc(ubar1, sne, t);
      return ubar1 * f_ratio(std::sinh(0.5 * t)) / f_ratio(a.wmag);
    };
    int guard = 0;
    while (q_of(t1) > qlim) {
      t1 *= 0.5;
      if (++guard > 200) throw PlannerFailure("oblate_reach_plan: no usable descent step");
    }
    const double q = q_of(t1);
    const double fmin = 0.5 * (1.0 + q);
    const double r0 = fmin / std::sqrt(1.0 - fmin * fmin);

    // out to a radius from which descent works
    push_light(0.0, 2.0 * std::asinh(std::max(r0, 1.0) * sne));

    const LightArc step = light_arc(ubar1, sne, t1);
    int iter = 0;
    while (state.c + c_light_sup > c_axis) {
      const double theta = std::arg(state.w) - state.c - step.c + 0.5 * kPi;
      const double c_before = state.c;
      push_light(theta, t1);
      if (!(state.c < c_before)) throw PlannerFailure("oblate_reach_plan: descent step failed");
      if (++iter > 200000) throw PlannerFailure("oblate_reach_plan: iteration bound exceeded");
    }

    // close onto the axis: equal f-ratios and opposite phases cancel w exactly
    const double t_close = 2.0 * std::asinh(std::abs(state.w) * sne);
    const double c_close = light_arc(ubar1, sne, t_close).c;
    const double theta_close = std::arg(state.w) - (state.c + c_close) + kPi;
    push_light(theta_close, t_close);

    push_vertical(c_axis - state.c);
  }

  if (wmag_target > 0.0) {
    const double theta_hop = std::arg(target.w) - state.c;
    push_light(theta_hop, t_hop);
  }

  const GroupPoint end = evaluate_plan(plan);
  const double err = std::hypot(end.c - target.c, std::abs(end.w - target.w));
  if (err > tol)
    throw PlannerFailure("oblate_reach_plan: endpoint error above tolerance");
  return plan;
}

std::vector<GroupPoint> sample_admissible_trajectory(const MetricParams& params, std::uint64_t seed,
                                                     int steps, double step_duration) {
  params.require_axisymmetric("sample_admissible_trajectory");
  if (steps < 0) throw std::invalid_argument("sample_admissible_trajectory: steps must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u1_dist(0.5, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cone_ratio = std::sqrt(params.I1 / params.I2);

  std::vector<GroupPoint> traj;
  traj.reserve(steps + 1);
  GroupPoint g;
  traj.push_back(g);
  for (int i = 0; i < steps; ++i) {
    const double u1 = u1_dist(rng);
    const double rho = unit(rng) < 0.25 ? 1.0 : unit(rng);  // include the light cone boundary
    const double th = 2.0 * kPi * unit(rng);
    const double ur = rho * u1 * cone_ratio;
    const AlgebraVec u{u1, ur * std::cos(th), ur * std::sin(th)};
    g = group_mult(g, group_exp(AlgebraVec{u.x1 * step_duration, u.x2 * step_duration,
                                           u.x3 * step_duration})
                          .point);
    traj.push_back(g);
  }
  return traj;
}

InfiniteLengthWitness infinite_length_witness(const MetricParams& params, const GroupPoint& target,
                                              double min_length) {
  params.require_axisymmetric("infinite_length_witness");
  if (params.regime() != Regime::Symmetric)
    throw RegimeError("infinite_length_witness: requires the symmetric regime eta = 0");
  const double R = std::abs(target.w);
  const double eps = target.c - (kPi - std::atan(R));
  if (!(eps > 0.0))
    throw OutsideDomain("infinite_length_witness: target must satisfy c > pi - arctan|w|");

  // radius of the vertical segment; its Lorentzian length is eps*sqrt(I2 (1+r1^2))
  const double needed = 1.25 * std::max(min_length, 1.0) / (eps * std::sqrt(params.I2));
  const double r1 = std::max(2.0 * R + 1.0, needed);
  const double sq1 = std::sqrt(1.0 + r1 * r1);

  // closing arc: radius r3 and relative phase gamma solve |w_end| = R and the
  // c-budget pi - atan(R) - atan(r1) simultaneously
  const double de = kPi - std::atan(R) - std::atan(r1);
  const double r3a = r1 * std::sqrt(1.0 + R * R) - R * sq1;  // anti-phase root of |w_end| = R

  auto cos_gamma = [&](double r3) {
    const double d = sq1 * std::sqrt(1.0 + r3 * r3);
    return (R * R - r3 * r3 * (1.0 + r1 * r1) - r1 * r1 * (1.0 + r3 * r3)) / (2.0 * r1 * r3 * d);
  };
  auto dc3 = [&](double r3) {
    const double cg = std::max(-1.0, std::min(1.0, cos_gamma(r3)));
    const double sg = -std::sqrt(std::max(0.0, 1.0 - cg * cg));
    const double d = sq1 * std::sqrt(1.0 + r3 * r3);
    return std::atan(r3) + std::atan2(r1 * r3 * sg, d + r1 * r3 * cg);
  };

  double lo = r3a * (1.0 + 1e-14) + 1e-300, hi = r1;
  if (!(dc3(lo) - de > 0.0) || !(dc3(hi) - de < 0.0))
    throw PlannerFailure("infinite_length_witness: closing-arc bracket failed");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (dc3(mid) - de > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double r3 = 0.5 * (lo + hi);
  const double cg = std::max(-1.0, std::min(1.0, cos_gamma(r3)));
  const double gamma = -std::acos(cg);

  InfiniteLengthWitness w;
  w.r1 = r1;
  w.r3 = r3;
  w.eps = eps;
  w.mid_length = eps * std::sqrt(params.I2 * (1.0 + r1 * r1));

  // assemble with theta1 = 0 first, then rotate the whole construction so the
  // final w phase matches the target
  auto assemble = [&](double theta1) {
    w.theta1 = theta1;
    w.after_first = GroupPoint{std::atan(r1), Complex(r1 * std::cos(theta1), r1 * std::sin(theta1))};
    w.after_vertical = GroupPoint{w.after_first.c + eps, w.after_first.w};
    // gamma = arg(w_mid * conj(w_u3) * e^{-i(c_mid + atan r3)})
    w.theta3 = theta1 - gamma - w.after_vertical.c - std::atan(r3);
    const GroupPoint arc3{std::atan(r3), Complex(r3 * std::cos(w.theta3), r3 * std::sin(w.theta3))};
    w.endpoint = group_mult(w.after_vertical, arc3);
  };
  assemble(0.0);
  assemble(std::arg(target.w) - std::arg(w.endpoint.w));

  const double err = std::hypot(w.endpoint.c - target.c, std::abs(w.endpoint.w - target.w));
  if (err > 1e-6 * (1.0 + std::fabs(target.c) + R))
    throw PlannerFailure("infinite_length_witness: endpoint mismatch");
  if (w.mid_length < min_length)
    throw PlannerFailure("infinite_length_witness: vertical segment shorter than requested");
  return w;
}

}  // namespace berger
