#include "embedwalk/walk.hpp"

#include "embedwalk/errors.hpp"

namespace ew {

WaveState initial_state(const BlowUpGraph& bg, const Eigen::VectorXcd& inflow) {
  if (inflow.size() != bg.tail_count()) throw DomainError("inflow size does not match tail count");
  return {Eigen::VectorXcd::Zero(bg.internal_size()), inflow, Eigen::VectorXcd::Zero(bg.tail_count())};
}

WaveState step(const WaveState& s, const BlowUpGraph& bg, const Coin& coin) {
  WaveState out{Eigen::VectorXcd(s.amplitudes.size()), s.inflow, Eigen::VectorXcd(bg.tail_count())};
  const auto& psi = s.amplitudes;
  auto& next = out.amplitudes;
  for (State v = 0; v < bg.vertex_count(); ++v) {
    const cplx from_island = psi[bg.tail_slot(bg.island_prev[v])];
    const cplx from_bridge = psi[bg.bridge_slot(bg.bridge_target[v])];
    const double sign = bg.bridge_twist[v] ? -1.0 : 1.0;
    next[bg.head_slot(v)] = coin.a * from_island + coin.b * from_bridge;
    next[bg.bridge_slot(v)] = sign * (coin.c * from_island + coin.d * from_bridge);
  }
  // Boundary vertices: quay head and pier-in come in, quay tail and pier-out leave.
  for (int t = 0; t < bg.tail_count(); ++t) {
    const State v = bg.tail_island[t];
    const cplx quay = psi[bg.head_slot(v)];
    next[bg.tail_slot(v)] = coin.a * quay + coin.b * s.inflow[t];
    out.outflow[t] = coin.c * quay + coin.d * s.inflow[t];
  }
  return out;
}

double internal_energy(const WaveState& state) { return 0.5 * state.amplitudes.squaredNorm(); }

double island_energy(const WaveState& state, const BlowUpGraph& bg) {
  return 0.5 * state.amplitudes.head(bg.vertex_count() + bg.tail_count()).squaredNorm();
}

StationaryRun run_to_stationary(const BlowUpGraph& bg, const Coin& coin, const Eigen::VectorXcd& inflow,
                                double tol, long max_steps) {
  if (!(tol > 0)) throw DomainError("tol must be positive");
  StationaryRun run{initial_state(bg, inflow), 0, 0.0};
  double residual = 0.0;
  for (long k = 1; k <= max_steps; ++k) {
    WaveState next = step(run.state, bg, coin);
    residual = (next.amplitudes - run.state.amplitudes).cwiseAbs().maxCoeff();
    run.state = std::move(next);
    run.steps = k;
    run.residual = residual;
    if (residual < tol) return run;
  }
  throw ConvergenceError(max_steps, residual);
}

Eigen::MatrixXcd simulate_outflow_map(const BlowUpGraph& bg, const Coin& coin, double tol, long max_steps) {
  const int T = bg.tail_count();
  Eigen::MatrixXcd S(T, T);
  for (int t = 0; t < T; ++t)
    S.col(t) = run_to_stationary(bg, coin, Eigen::VectorXcd::Unit(T, t), tol, max_steps).state.outflow;
  return S;
}

std::vector<State> flip_relabeling(const RotationSystem& rs, Vertex x) {
  std::vector<State> map(rs.state_count());
  for (State u = 0; u < rs.state_count(); ++u)
    map[u] = u ^ (rs.graph().origin(state_arc(u)) == x ? 1 : 0);
  return map;
}

EquivalenceReport check_unitary_equivalence(const RotationSystem& rs, Vertex x, const Coin& coin,
                                            const Eigen::VectorXcd& inflow, double tol) {
  if ((inflow.array().abs() > 0).count() != 1) throw DomainError("unitary equivalence check needs a single inflow");
  const RotationSystem flipped = flip_vertex(rs, x);
  const auto map = flip_relabeling(rs, x);
  const BlowUpGraph bg1 = attach_hedgehog(blow_up(rs));
  const BlowUpGraph bg2 = attach_hedgehog(blow_up(flipped));
  Eigen::VectorXcd inflow2 = Eigen::VectorXcd::Zero(inflow.size());
  for (State u = 0; u < rs.state_count(); ++u) inflow2[map[u]] = inflow[u];
  const auto r1 = run_to_stationary(bg1, coin, inflow, 1e-12);
  const auto r2 = run_to_stationary(bg2, coin, inflow2, 1e-12);
  EquivalenceReport rep;
  rep.energy_before = internal_energy(r1.state);
  rep.energy_after = internal_energy(r2.state);
  for (State u = 0; u < rs.state_count(); ++u)
    rep.outflow_modulus_gap = std::max(rep.outflow_modulus_gap,
                                       std::abs(std::abs(r1.state.outflow[u]) - std::abs(r2.state.outflow[map[u]])));
  rep.equivalent = std::abs(rep.energy_before - rep.energy_after) < tol && rep.outflow_modulus_gap < tol;
  return rep;
}

}  // namespace ew
