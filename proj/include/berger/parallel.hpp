#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "berger/covector.hpp"
#include "berger/group.hpp"
#include "berger/shooting.hpp"

namespace berger::batch {

// Batch kernels used by the validation suites and the CLI.  Each kernel has an
// OpenMP-parallel implementation and a serial reference; per-element work is
// identical, so the two must agree bitwise.  The bench tool compares their
// throughput.

// Geodesic sampled over a time grid.
std::vector<GroupPoint> geodesic_grid(const MetricParams& params, const Covector& h,
                                      std::span<const double> times);
std::vector<GroupPoint> geodesic_grid_serial(const MetricParams& params, const Covector& h,
                                             std::span<const double> times);

// Max deviation in (c, Re w, Im w) between the closed-form exponential map and
// the RK4 oracle, over a set of covectors; each trajectory is checked at
// `checkpoints` times uniformly spread over (0, t_max[i]].
double max_oracle_deviation(const MetricParams& params, std::span<const Covector> covectors,
                            std::span<const double> t_max, int checkpoints, int rk4_steps);
double max_oracle_deviation_serial(const MetricParams& params, std::span<const Covector> covectors,
                                   std::span<const double> t_max, int checkpoints, int rk4_steps);

// Wavefront sampling (the OpenMP kernel behind berger::wavefront).
std::vector<WavefrontSample> wavefront_grid(const MetricParams& params, double t, int samples,
                                            double s_max);
std::vector<WavefrontSample> wavefront_grid_serial(const MetricParams& params, double t,
                                                   int samples, double s_max);

// Random admissible trajectories from the identity; returns how many sampled
// points violate the attainable-set predicate (must be 0 for eta >= 0).
long ensemble_violations(const MetricParams& params, int trajectories, int steps,
                         double step_duration, std::uint64_t seed0);
long ensemble_violations_serial(const MetricParams& params, int trajectories, int steps,
                                double step_duration, std::uint64_t seed0);

}  // namespace berger::batch
