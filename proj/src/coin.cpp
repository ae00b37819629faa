#include "embedwalk/coin.hpp"

#include <cmath>

#include "embedwalk/errors.hpp"

namespace ew {

Coin::Coin(cplx a_, cplx b_, cplx c_, cplx d_) : a(a_), b(b_), c(c_), d(d_) {
  const Eigen::Matrix2cd m = matrix();
  const double defect = (m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-12))
    throw AssumptionError("coin is not unitary (max |C*C - I| = " + std::to_string(defect) + ")");
}

Eigen::Matrix2cd Coin::matrix() const {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

Coin Coin::hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, h, h, -h};
}

Coin Coin::real_family(double a) {
  if (!(a >= -1.0 && a <= 1.0)) throw AssumptionError("real coin family needs |a| <= 1");
  const double b = std::sqrt(1.0 - a * a);
  return {a, b, b, -a};
}

Coin random_coin(std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  Eigen::Matrix2cd z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z(i, j) = {n01(rng), n01(rng)};
  Eigen::Matrix2cd q = Eigen::HouseholderQR<Eigen::Matrix2cd>(z).householderQ();
  const cplx dd = q(1, 1);
  const cplx phase = std::abs(dd) > 0 ? std::conj(dd) / std::abs(dd) : cplx(1.0);
  q *= phase;
  q(1, 1) = q(1, 1).real();
  return {q(0, 0), q(0, 1), q(1, 0), q(1, 1)};
}

void require_real_d(const Coin& coin) {
  if (std::abs(coin.d.imag()) > 1e-12) throw AssumptionError("assumption violated: coin entry d must be real");
}

void require_contractive(const Coin& coin) {
  if (std::abs(coin.a) >= 1.0 - 1e-15)
    throw AssumptionError("assumption violated: |a| < 1 is required (face blocks are singular at |a| = 1)");
}

void require_nondegenerate(const Coin& coin) {
  if (std::abs(coin.b) < 1e-14 || std::abs(coin.c) < 1e-14)
    throw AssumptionError("degenerate coin: b = 0 or c = 0 leaves the stationary closed form undefined");
}

}  // namespace ew
