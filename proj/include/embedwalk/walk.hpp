#pragma once

#include <vector>

#include <Eigen/Dense>

#include "embedwalk/coin.hpp"
#include "embedwalk/covering.hpp"
#include "embedwalk/rotation_system.hpp"

namespace ew {

struct WaveState {
  Eigen::VectorXcd amplitudes;  // internal slots, see BlowUpGraph::*_slot
  Eigen::VectorXcd inflow;      // per tail, constant in time
  Eigen::VectorXcd outflow;     // emitted into each tail by the last step
};

WaveState initial_state(const BlowUpGraph& bg, const Eigen::VectorXcd& inflow);
WaveState step(const WaveState& state, const BlowUpGraph& bg, const Coin& coin);

// (1/2) ||internal||^2
double internal_energy(const WaveState& state);
double island_energy(const WaveState& state, const BlowUpGraph& bg);

struct StationaryRun {
  WaveState state;
  long steps = 0;
  double residual = 0.0;
};

StationaryRun run_to_stationary(const BlowUpGraph& bg, const Coin& coin, const Eigen::VectorXcd& inflow,
                                double tol = 1e-10, long max_steps = 1'000'000);

// Column t is the converged outflow for unit inflow on tail t.
Eigen::MatrixXcd simulate_outflow_map(const BlowUpGraph& bg, const Coin& coin, double tol = 1e-12,
                                      long max_steps = 1'000'000);

// State relabeling carrying the walk on rs to the walk on flip_vertex(rs, x).
std::vector<State> flip_relabeling(const RotationSystem& rs, Vertex x);

struct EquivalenceReport {
  double energy_before = 0, energy_after = 0;
  double outflow_modulus_gap = 0;  // max | |beta_1(w)| - |beta_2(w')| |
  bool equivalent = false;
};

// Runs rs and flip_vertex(rs, x) on the hedgehog with matching single inflows.
EquivalenceReport check_unitary_equivalence(const RotationSystem& rs, Vertex x, const Coin& coin,
                                            const Eigen::VectorXcd& inflow, double tol = 1e-8);

}  // namespace ew
