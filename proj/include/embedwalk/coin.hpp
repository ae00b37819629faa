#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace ew {

using cplx = std::complex<double>;

// 2x2 unitary [[a, b], [c, d]]; a is the island-stay amplitude, d the bridge reflection.
struct Coin {
  cplx a, b, c, d;

  Coin(cplx a, cplx b, cplx c, cplx d);  // throws AssumptionError unless unitary to 1e-12

  cplx omega() const { return -(a * d - b * c); }
  Eigen::Matrix2cd matrix() const;

  static Coin hadamard();               // a=b=c=1/sqrt2, d=-1/sqrt2
  static Coin real_family(double a);    // [[a, sqrt(1-a^2)], [sqrt(1-a^2), -a]]
};

// Haar-ish random unitary rescaled by a phase so that d is real.
Coin random_coin(std::mt19937_64& rng);

// Closed-form preconditions.
void require_real_d(const Coin& coin);
void require_contractive(const Coin& coin);
void require_nondegenerate(const Coin& coin);

}  // namespace ew
