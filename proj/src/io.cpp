#include "berger/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace berger::io {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json to_json(const MetricParams& p) {
  return json{{"I1", p.I1}, {"I2", p.I2}, {"I3", p.I3}, {"n", p.n}};
}

MetricParams params_from_json(const json& j) {
  MetricParams p = MetricParams::axisymmetric(j.at("I1").get<double>(), j.at("I2").get<double>(),
                                              j.value("n", 1));
  if (j.contains("I3")) p.I3 = j.at("I3").get<double>();
  return p;
}

json to_json(const GroupPoint& p) {
  return json{{"c", p.c}, {"w", json::array({json::array({p.w.real(), p.w.imag()})})}};
}

json to_json(const GroupPointN& p) {
  json w = json::array();
  for (const Complex& z : p.w) w.push_back(json::array({z.real(), z.imag()}));
  return json{{"c", p.c}, {"w", w}};
}

GroupPoint point_from_json(const json& j) {
  GroupPoint p;
  p.c = j.at("c").get<double>();
  const auto& w = j.at("w");
  if (!w.empty()) p.w = Complex(w[0][0].get<double>(), w[0][1].get<double>());
  return p;
}

json to_json(const Covector& h) { return json{{"h1", h.h1}, {"h2", h.h2}, {"h3", h.h3}}; }

Covector covector_from_json(const json& j) {
  return Covector{j.at("h1").get<double>(), j.at("h2").get<double>(), j.at("h3").get<double>()};
}

json to_json(const ReachVerdict& v) {
  return json{{"attainable", v.in_attainable},
              {"boundary", v.on_boundary},
              {"exists", v.longest_arc_exists},
              {"infinite", v.infinite_distance}};
}

json to_json(std::span<const ControlArc> plan) {
  json arr = json::array();
  for (const ControlArc& a : plan)
    arr.push_back(json{{"u", {a.u.x1, a.u.x2, a.u.x3}}, {"dt", a.dt}});
  return arr;
}

std::vector<ControlArc> plan_from_json(const json& j) {
  std::vector<ControlArc> plan;
  for (const auto& e : j) {
    const auto& u = e.at("u");
    plan.push_back(ControlArc{AlgebraVec{u[0].get<double>(), u[1].get<double>(), u[2].get<double>()},
                              e.at("dt").get<double>()});
  }
  return plan;
}

namespace {
json time_or_inf(double t) {
  if (std::isinf(t)) return json("inf");
  return json(t);
}
}  // namespace

json to_json(const OptimalityReport& r) {
  json j{{"t_conj", time_or_inf(r.t_conj)},
         {"t_max", time_or_inf(r.t_max)},
         {"t_cut", time_or_inf(r.t_cut)}};
  if (r.cut_point)
    j["cut_point"] = json::array({r.cut_point->c, 0.0});
  else
    j["cut_point"] = nullptr;
  return j;
}

json to_json(const ShootingResult& r) {
  return json{{"h", to_json(r.h)}, {"t", r.t}, {"residual", r.residual},
              {"iterations", r.iterations}};
}

json to_json(const DistanceAnswer& a) {
  const char* kind = nullptr;
  switch (a.kind) {
    case DistanceKind::Finite: kind = "finite"; break;
    case DistanceKind::Zero: kind = "zero"; break;
    case DistanceKind::Infinite: kind = "infinite"; break;
    case DistanceKind::Unreachable: kind = "unreachable"; break;
    case DistanceKind::NoLongestArc: kind = "no_longest_arc"; break;
  }
  json j{{"kind", kind}, {"multi_geodesic", a.multi_geodesic}};
  if (a.kind == DistanceKind::Finite) j["value"] = a.value;
  return j;
}

void write_geodesic_csv(std::ostream& os, const MetricParams& params, const Covector& h,
                        double t_max, int samples) {
  os << "t,tau,c,re_w,im_w\n";
  const double norm = h.norm();
  for (int i = 0; i < samples; ++i) {
    const double t = samples > 1 ? t_max * i / (samples - 1) : 0.0;
    const GroupPoint p = exp_map(params, h, t);
    const double tau = 0.5 * t * norm / params.I2;
    os << fmt(t) << ',' << fmt(tau) << ',' << fmt(p.c) << ',' << fmt(p.w.real()) << ','
       << fmt(p.w.imag()) << '\n';
  }
}

json geodesic_json(const MetricParams& params, const Covector& h, double t_max, int samples) {
  json rows = json::array();
  const double norm = h.norm();
  for (int i = 0; i < samples; ++i) {
    const double t = samples > 1 ? t_max * i / (samples - 1) : 0.0;
    const GroupPoint p = exp_map(params, h, t);
    rows.push_back(json{{"t", t},
                        {"tau", 0.5 * t * norm / params.I2},
                        {"c", p.c},
                        {"re_w", p.w.real()},
                        {"im_w", p.w.imag()}});
  }
  return json{{"params", to_json(params)}, {"h", to_json(h)}, {"samples", rows}};
}

void write_wavefront_csv(std::ostream& os, std::span<const WavefrontSample> rows) {
  os << "hbar1,chi,t,c,abs_w\n";
  for (const WavefrontSample& r : rows)
    os << fmt(r.hbar1) << ',' << r.chi << ',' << fmt(r.t) << ',' << fmt(r.c) << ',' << fmt(r.abs_w)
       << '\n';
}

}  // namespace berger::io
