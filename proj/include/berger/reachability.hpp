#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "berger/geodesic.hpp"
#include "berger/group.hpp"

namespace berger {

// Decomposition of a tangent vector (cdot, wdot) at a point into the cone
// parameters (xi, omega) at the identity.  xi and omega follow the convention
// of the velocity cone: the corresponding algebra control is 2*(xi, omega).
struct ConeDecomposition {
  double xi = 0.0;
  Complex omega{0.0, 0.0};
  bool admissible = false;  // xi > 0 and I1 xi^2 >= I2 |omega|^2
  bool boundary = false;    // equality within tolerance (light direction)
  double lorentzian_length = 0.0;  // sqrt(I1 xi^2 - I2 |omega|^2) when admissible
};

ConeDecomposition admissible_cone_contains(const MetricParams& params, const GroupPoint& base,
                                           double cdot, const Complex& wdot);

struct ReachVerdict {
  bool in_attainable = false;
  bool on_boundary = false;
  bool longest_arc_exists = false;
  bool infinite_distance = false;
};

// Theorem-A classification of a target point in all three regimes.  Boundary
// ties resolve to inside; the symmetric dashed line c = pi - arctan|w|, w != 0
// reports exists = false and infinite = false.
ReachVerdict attainable_contains(const MetricParams& params, const GroupPoint& p);
ReachVerdict attainable_contains_nd(const MetricParams& params, const GroupPointN& p);

// One constant-control arc of a plan.
struct ControlArc {
  AlgebraVec u;   // control in the closed cone, u1 > 0
  double dt = 0.0;
};

// Endpoint of a piecewise-constant control plan from the identity.
GroupPoint evaluate_plan(std::span<const ControlArc> plan);

// Constructive full-controllability planner for eta < 0: a finite sequence of
// light-like and vertical arcs whose endpoint lands within tol of the target.
std::vector<ControlArc> oblate_reach_plan(const MetricParams& params, const GroupPoint& target,
                                          double tol);

// Piecewise-constant random controls drawn from the closed cone; returns the
// trajectory including the start point (0,0).
std::vector<GroupPoint> sample_admissible_trajectory(const MetricParams& params, std::uint64_t seed,
                                                     int steps, double step_duration);

// Witness of infinite Lorentzian distance in the symmetric regime: light arc
// out to radius r1, a coordinate-vertical segment of height eps, and a light
// arc back onto the target.  mid_length grows like eps*sqrt(I2 (1+r1^2)).
struct InfiniteLengthWitness {
  double r1 = 0.0;      // radius of the vertical segment
  double theta1 = 0.0;  // phase of the first light arc
  double r3 = 0.0;      // |w| gained along the closing light arc
  double theta3 = 0.0;  // phase of the closing light arc
  double eps = 0.0;     // height of the vertical segment
  double mid_length = 0.0;
  GroupPoint after_first;     // endpoint of the first light arc
  GroupPoint after_vertical;  // endpoint of the vertical segment
  GroupPoint endpoint;        // endpoint of the whole concatenation
};

InfiniteLengthWitness infinite_length_witness(const MetricParams& params, const GroupPoint& target,
                                              double min_length);

}  // namespace berger
