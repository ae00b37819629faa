#include "embedwalk/comfortability.hpp"

#include "embedwalk/errors.hpp"

namespace ew {

namespace {

void require_closed_form_coin(const Coin& coin) {
  require_real_d(coin);
  require_contractive(coin);
  require_nondegenerate(coin);
}

}  // namespace

Eigen::MatrixXcd tail_flip_flop(const BlowUpGraph& bg) {
  if (!bg.hedgehog()) throw AssumptionError("comfortability formulas need the hedgehog boundary");
  const int n = bg.tail_count();
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(n, n);
  for (int t = 0; t < n; ++t) {
    const State w = bg.tail_island[t];
    sigma(t, bg.tail_index[bg.bridge_target[w]]) = bg.bridge_twist[w] ? -1.0 : 1.0;
  }
  return sigma;
}

ComfortReport comfortability(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin,
                             const Eigen::VectorXcd& inflow) {
  require_closed_form_coin(coin);
  const Eigen::VectorXcd q_alpha = S.Q() * inflow;
  const Eigen::VectorXcd bridge = (tail_flip_flop(bg) * q_alpha + coin.d * q_alpha);
  const double bc2 = std::norm(coin.b * coin.c);
  ComfortReport r;
  r.island = q_alpha.squaredNorm() / std::norm(coin.c);
  r.bridge = bridge.squaredNorm() / (2.0 * bc2);
  r.total = r.island + r.bridge;
  return r;
}

double enumerated_average(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin) {
  double sum = 0.0;
  for (int t = 0; t < bg.tail_count(); ++t)
    sum += comfortability(S, bg, coin, Eigen::VectorXcd::Unit(bg.tail_count(), t)).total;
  return sum / bg.tail_count();
}

AverageComfort average_comfortability(const RotationSystem& rs, const FacialDecomposition& fd, const Coin& coin) {
  require_closed_form_coin(coin);
  const cplx aw = coin.a * coin.omega();
  const double a2 = std::norm(coin.a), b2 = std::norm(coin.b), c2 = std::norm(coin.c);
  const double bc2 = b2 * c2;
  const double d = coin.d.real();

  AverageComfort out;
  out.tails = rs.state_count();
  out.faces.resize(fd.faces.size());
  for (int cf = 0; cf < static_cast<int>(fd.cover_faces.size()); ++cf) {
    const Face& f = fd.cover_faces[cf];
    const int L = f.length();
    const double scale = c2 / std::norm(1.0 - std::pow(aw, L));
    const double diag = scale * L * (1.0 - std::pow(a2, L));
    cplx cross = 0.0;
    for (int j = 0; j < L; ++j) {
      const State w = f.walk[j];
      const State sw = rs.lift_reverse(w);
      if (fd.location[sw].cover_face != cf) continue;
      const int m = fd.dist(sw, w);
      int parity = rs.twist(state_arc(w));
      for (int k = 1; k <= m; ++k) parity ^= rs.twist(state_arc(f.walk[(fd.location[sw].position + k) % L]));
      const cplx term = std::pow(aw, m) * (1.0 - std::pow(a2, L - m)) +
                        std::pow(std::conj(aw), L - m) * (1.0 - std::pow(a2, m));
      cross += (parity ? -1.0 : 1.0) * scale * term;
    }
    out.trace_QQ += diag;
    out.trace_QQ_sigma += cross;
    auto& ft = out.faces[cf / 2];
    ft.face = cf / 2;
    ft.length = L;
    ft.self_intersections = static_cast<int>(fd.self_intersections[cf / 2].size());
    ft.island += (2.0 + b2) / (2.0 * bc2) * diag / out.tails;
    ft.crossing += d / bc2 * cross.real() / out.tails;
  }
  out.mean = ((2.0 + b2) / (2.0 * bc2) * out.trace_QQ + d / bc2 * out.trace_QQ_sigma.real()) / out.tails;
  out.island_mean = out.trace_QQ / c2 / out.tails;
  out.tail_sum_over_arcs = out.mean * out.tails / rs.graph().arc_count();

  const bool fast_path = std::abs(coin.a.imag()) < 1e-12 && coin.a.real() > 0 && std::abs(coin.omega() - 1.0) < 1e-9;
  if (fast_path) {
    const double a = coin.a.real();
    double first = 0.0, second = 0.0;
    for (std::size_t i = 0; i < fd.faces.size(); ++i) {
      const int L = fd.faces[i].length();
      const double aL = std::pow(a, L);
      first += L * (1.0 + aL) / (1.0 - aL);
      double s = 0.0;
      for (const auto& si : fd.self_intersections[i])
        s += 2.0 * (std::pow(a, si.dist_forward) + std::pow(a, si.dist_back));  // both arcs of the edge
      second += s / (1.0 - aL);
    }
    out.face_sum_form = ((2.0 + b2) / (2.0 * b2) * first - a / b2 * second) / rs.graph().arc_count();
  }
  return out;
}

double limit_comfortability(const RotationSystem& rs, const FacialDecomposition& fd) {
  const double F = fd.face_count(), E = rs.graph().edge_count();
  double ratio = 0.0;
  for (std::size_t i = 0; i < fd.faces.size(); ++i)
    ratio += 2.0 * fd.self_intersections[i].size() / fd.faces[i].length();
  return F / E * (1.0 - ratio / F);
}

const std::vector<SelfIntersection>& self_intersections(const FacialDecomposition& fd, int face) {
  if (face < 0 || face >= fd.face_count()) throw DomainError("unknown face " + std::to_string(face));
  return fd.self_intersections[face];
}

}  // namespace ew
