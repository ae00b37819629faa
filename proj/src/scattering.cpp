#include "embedwalk/scattering.hpp"

#include <deque>

#include "embedwalk/errors.hpp"

namespace ew {

namespace {

std::vector<int> tailed_positions(const Face& f, const BlowUpGraph& bg) {
  std::vector<int> pos;
  for (int j = 0; j < f.length(); ++j)
    if (bg.tailed[f.walk[j]]) pos.push_back(j);
  return pos;
}

// Twist parity and step count going from walk position `from` to `to` (exclusive of `from`).
std::pair<int, int> segment(const Face& f, const BlowUpGraph& bg, int from, int to) {
  const int len = f.length();
  int steps = ((to - from) % len + len) % len;
  if (steps == 0) steps = len;
  int parity = 0;
  for (int k = 1; k <= steps; ++k) parity ^= bg.bridge_twist[f.walk[(from + k) % len]];
  return {parity, steps};
}

}  // namespace

Eigen::MatrixXcd face_permutation(const FacialDecomposition& fd, int cover_face, const BlowUpGraph& bg,
                                  cplx omega) {
  const Face& f = fd.cover_faces[cover_face];
  const auto pos = tailed_positions(f, bg);
  const int q = static_cast<int>(pos.size());
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(q, q);
  for (int l = 0; l < q; ++l) {
    const int m = (l + q - 1) % q;
    const auto [parity, steps] = segment(f, bg, pos[m], pos[l]);
    P(l, m) = (parity ? -1.0 : 1.0) * std::pow(omega, steps);
  }
  return P;
}

Eigen::MatrixXcd ScatteringMatrix::dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(tail_count, tail_count);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.tails.size(); ++i)
      for (std::size_t j = 0; j < b.tails.size(); ++j) out(b.tails[i], b.tails[j]) = b.S(i, j);
  return out;
}

double ScatteringMatrix::unitarity_defect() const {
  double worst = 0.0;
  for (const auto& b : blocks) {
    const auto n = b.S.rows();
    worst = std::max(worst, (b.S.adjoint() * b.S - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
  }
  return worst;
}

ScatteringMatrix scattering_matrix(const FacialDecomposition& fd, const BlowUpGraph& bg, const Coin& coin) {
  require_real_d(coin);
  const cplx omega = coin.omega();
  const cplx bc = coin.b * coin.c;
  ScatteringMatrix out;
  out.tail_count = bg.tail_count();
  out.d = coin.d;
  for (int cf = 0; cf < static_cast<int>(fd.cover_faces.size()); ++cf) {
    const Face& f = fd.cover_faces[cf];
    FaceBlock blk;
    blk.face = cf / 2;
    blk.chiral = cf % 2 == 1;
    blk.cover_face = cf;
    blk.walk_length = f.length();
    blk.positions = tailed_positions(f, bg);
    if (blk.positions.empty()) continue;
    for (int p : blk.positions) blk.tails.push_back(bg.tail_index[f.walk[p]]);
    const int q = static_cast<int>(blk.positions.size());
    blk.P = face_permutation(fd, cf, bg, omega);
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(q, q);
    if (std::abs(bc) < 1e-15) {
      blk.S = coin.d * I;
    } else {
      const cplx det = 1.0 - std::pow(coin.a, q) * std::pow(omega, f.length());
      if (std::abs(det) < 1e-12)
        throw AssumptionError("singular face block: 1 - a^q omega^|f| vanishes (needs |a| < 1)");
      blk.S = bc * blk.P * (I - coin.a * blk.P).inverse() + coin.d * I;
    }
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

Eigen::MatrixXcd scattering_block_series(const FaceBlock& block, const Coin& coin) {
  const auto q = block.P.rows();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(q, q);
  const cplx denom = 1.0 - std::pow(coin.a, static_cast<int>(q)) * std::pow(coin.omega(), block.walk_length);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(q, q), power = I;
  for (int k = 0; k < q; ++k) {
    sum += power;
    power = coin.a * block.P * power;
  }
  return coin.b * coin.c / denom * sum * block.P + coin.d * I;
}

Eigen::MatrixXcd scattering_block_entrywise(const FaceBlock& block, const BlowUpGraph& bg,
                                            const FacialDecomposition& fd, const Coin& coin) {
  const Face& f = fd.cover_faces[block.cover_face];
  const int q = static_cast<int>(block.positions.size());
  const cplx omega = coin.omega();
  const cplx denom = 1.0 - std::pow(coin.a, q) * std::pow(omega, f.length());
  Eigen::MatrixXcd S(q, q);
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < q; ++i) {
      const int hops = i == j ? q : ((j - i) % q + q) % q;
      const auto [parity, steps] = segment(f, bg, block.positions[i], block.positions[j]);
      S(j, i) = coin.b * coin.c * std::pow(coin.a, hops - 1) * std::pow(omega, steps) / denom *
                (parity ? -1.0 : 1.0);
      if (i == j) S(j, i) += coin.d;
    }
  return S;
}

WaveState stationary_closed_form(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin,
                                 const Eigen::VectorXcd& inflow) {
  if (!bg.hedgehog()) throw AssumptionError("stationary closed form needs the hedgehog boundary");
  require_real_d(coin);
  require_nondegenerate(coin);
  const cplx omega = coin.omega();
  const Eigen::MatrixXcd dense = S.dense();
  const Eigen::VectorXcd q_alpha = dense * inflow - coin.d * inflow;
  const int n = bg.vertex_count();
  Eigen::VectorXcd eta(n);
  for (State u = 0; u < n; ++u) eta[u] = q_alpha[bg.phi(u)] / (coin.b * coin.c * omega);

  WaveState ws{Eigen::VectorXcd::Zero(bg.internal_size()), inflow, dense * inflow};
  for (State u = 0; u < n; ++u) {
    const State ub = bg.bridge_target[u];
    const double sign = bg.bridge_twist[u] ? -1.0 : 1.0;
    ws.amplitudes[bg.bridge_slot(u)] = omega * (eta[u] + sign * coin.d * eta[ub]);
    ws.amplitudes[bg.tail_slot(bg.is(u))] = sign * coin.b * eta[u];
    ws.amplitudes[bg.head_slot(ub)] = omega * coin.b * eta[u];
  }
  return ws;
}

bool orientability_from_scattering(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin) {
  if (!bg.hedgehog()) throw AssumptionError("scattering orientability test needs the hedgehog boundary");
  require_real_d(coin);
  if (std::abs(coin.a.imag()) > 1e-12 || coin.a.real() <= 0.0)
    throw AssumptionError("assumption violated: the sign test needs a real, positive a");
  if (std::abs(coin.omega() - 1.0) > 1e-9)
    throw AssumptionError("assumption violated: the sign test needs omega = -det C = 1");
  const Eigen::MatrixXcd dense = S.dense();
  int nv = 0;
  for (State v = 0; v < bg.vertex_count(); ++v) nv = std::max(nv, bg.base_vertex[v] + 1);
  // sign[x][y]: 0 unseen, +1 / -1 seen
  std::vector<std::vector<int>> sign(nv, std::vector<int>(nv, 0));
  for (int i = 0; i < bg.tail_count(); ++i)
    for (int j = 0; j < bg.tail_count(); ++j) {
      const int x = bg.base_vertex[bg.tail_island[i]], y = bg.base_vertex[bg.tail_island[j]];
      if (x == y || std::abs(dense(i, j)) <= 1e-12) continue;
      const int s = dense(i, j).real() > 0 ? 1 : -1;
      if (sign[x][y] == 0) sign[x][y] = s;
      else if (sign[x][y] != s) return false;
    }
  return true;
}

std::optional<Eigen::VectorXcd> find_diagonal_conjugation(const Eigen::MatrixXcd& S1, const Eigen::MatrixXcd& S2,
                                                          double tol) {
  const auto n = S1.rows();
  if (S2.rows() != n || S1.cols() != n || S2.cols() != n) return std::nullopt;
  Eigen::VectorXcd D = Eigen::VectorXcd::Zero(n);
  for (Eigen::Index root = 0; root < n; ++root) {
    if (D[root] != cplx(0)) continue;
    D[root] = 1.0;
    std::deque<Eigen::Index> queue{root};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (D[j] != cplx(0)) continue;
        if (std::abs(S1(i, j)) > tol) D[j] = S2(i, j) / (std::conj(D[i]) * S1(i, j));
        else if (std::abs(S1(j, i)) > tol) D[j] = std::conj(S2(j, i) / (S1(j, i) * D[i]));
        else continue;
        queue.push_back(j);
      }
    }
  }
  if ((D.cwiseAbs().array() - 1.0).abs().maxCoeff() > tol) return std::nullopt;
  const Eigen::MatrixXcd back = D.conjugate().asDiagonal() * S1 * D.asDiagonal();
  if ((back - S2).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return D;
}

}  // namespace ew
