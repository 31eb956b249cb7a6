#pragma once

#include <span>
#include <vector>

#include "berger/covector.hpp"
#include "berger/group.hpp"

namespace berger {

struct HamiltonianState {
  GroupPoint point;
  Covector momentum;
};

// Fixed-step classical RK4 for the coupled vertical+horizontal Hamiltonian
// system, integrated in the global chart (c, Re w, Im w, h1, h2, h3).  The
// horizontal vector field is the left translation of d_h H obtained by
// differentiating the multiplication rule, so this path is independent of the
// closed-form geodesic parametrization and serves as its validation oracle.
// Works for general (I1, I2, I3), not only the axisymmetric case.
HamiltonianState integrate_hamiltonian(const MetricParams& params, const Covector& h0, double t,
                                       int steps);

// Same trajectory reported at several increasing times; the step budget is
// spread proportionally over the segments.
std::vector<HamiltonianState> integrate_checkpoints(const MetricParams& params, const Covector& h0,
                                                    std::span<const double> times, int total_steps);

// Default oracle resolution: steps per unit of tau = t|h|/(2 I2).
inline constexpr int kOracleStepsPerTau = 10000;

}  // namespace berger
