#include "berger/parallel.hpp"

#include <algorithm>
#include <cmath>

#include "berger/geodesic.hpp"
#include "berger/oracle.hpp"
#include "berger/reachability.hpp"

namespace berger::batch {

namespace {

double one_trajectory_deviation(const MetricParams& params, const Covector& h, double t_max,
                                int checkpoints, int rk4_steps) {
  std::vector<double> times(checkpoints);
  for (int k = 0; k < checkpoints; ++k) times[k] = t_max * (k + 1) / checkpoints;
  const auto states = integrate_checkpoints(params, h, times, rk4_steps);
  double dev = 0.0;
  for (int k = 0; k < checkpoints; ++k) {
    const GroupPoint closed = exp_map(params, h, times[k]);
    const GroupPoint& rk = states[k].point;
    dev = std::max(dev, std::fabs(closed.c - rk.c));
    dev = std::max(dev, std::fabs(closed.w.real() - rk.w.real()));
    dev = std::max(dev, std::fabs(closed.w.imag() - rk.w.imag()));
  }
  return dev;
}

long one_trajectory_violations(const MetricParams& params, std::uint64_t seed, int steps,
                               double dt) {
  const auto traj = sample_admissible_trajectory(params, seed, steps, dt);
  long bad = 0;
  for (const GroupPoint& p : traj)
    if (!attainable_contains(params, p).in_attainable) ++bad;
  return bad;
}

}  // namespace

std::vector<GroupPoint> geodesic_grid(const MetricParams& params, const Covector& h,
                                      std::span<const double> times) {
  std::vector<GroupPoint> out(times.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(times.size()); ++i)
    out[i] = exp_map(params, h, times[i]);
  return out;
}

std::vector<GroupPoint> geodesic_grid_serial(const MetricParams& params, const Covector& h,
                                             std::span<const double> times) {
  std::vector<GroupPoint> out(times.size());
  for (long i = 0; i < static_cast<long>(times.size()); ++i) out[i] = exp_map(params, h, times[i]);
  return out;
}

double max_oracle_deviation(const MetricParams& params, std::span<const Covector> covectors,
                            std::span<const double> t_max, int checkpoints, int rk4_steps) {
  double dev = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : dev)
  for (long i = 0; i < static_cast<long>(covectors.size()); ++i)
    dev = std::max(dev, one_trajectory_deviation(params, covectors[i], t_max[i], checkpoints,
                                                 rk4_steps));
  return dev;
}

double max_oracle_deviation_serial(const MetricParams& params, std::span<const Covector> covectors,
                                   std::span<const double> t_max, int checkpoints, int rk4_steps) {
  double dev = 0.0;
  for (long i = 0; i < static_cast<long>(covectors.size()); ++i)
    dev = std::max(dev, one_trajectory_deviation(params, covectors[i], t_max[i], checkpoints,
                                                 rk4_steps));
  return dev;
}

std::vector<WavefrontSample> wavefront_grid(const MetricParams& params, double t, int samples,
                                            double s_max) {
  return wavefront(params, t, samples, s_max);
}

std::vector<WavefrontSample> wavefront_grid_serial(const MetricParams& params, double t,
                                                   int samples, double s_max) {
  std::vector<WavefrontSample> rows(samples);
  for (int i = 0; i < samples; ++i) {
    const double s = s_max * i / (samples - 1);
    const Covector h = timelike_covector(params, s, 0.0);
    const GroupPoint p = exp_map(params, h, t);
    rows[i] = WavefrontSample{s,
                              killing_branch(h) != 0
                                  ? h.h1 / h.norm()
                                  : -1.0 / std::sqrt(std::max(params.eta(), 1e-300)),
                              killing_branch(h),
                              t,
                              p.c,
                              std::abs(p.w)};
  }
  return rows;
}

long ensemble_violations(const MetricParams& params, int trajectories, int steps,
                         double step_duration, std::uint64_t seed0) {
  long bad = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
  for (int i = 0; i < trajectories; ++i)
    bad += one_trajectory_violations(params, seed0 + i, steps, step_duration);
  return bad;
}

long ensemble_violations_serial(const MetricParams& params, int trajectories, int steps,
                                double step_duration, std::uint64_t seed0) {
  long bad = 0;
  for (int i = 0; i < trajectories; ++i)
    bad += one_trajectory_violations(params, seed0 + i, steps, step_duration);
  return bad;
}

}  // namespace berger::batch
