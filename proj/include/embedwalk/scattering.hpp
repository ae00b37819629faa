#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "embedwalk/coin.hpp"
#include "embedwalk/covering.hpp"
#include "embedwalk/rotation_system.hpp"
#include "embedwalk/walk.hpp"

namespace ew {

// One block per face of the double cover: face i of G and its chiral partner
// each scatter their own tails.
struct FaceBlock {
  int face = 0;          // index into FacialDecomposition::faces
  bool chiral = false;   // block of the partner f*
  int cover_face = 0;
  int walk_length = 0;   // |f|
  std::vector<int> tails;      // tail ids in walk order
  std::vector<int> positions;  // walk positions of those tails
  Eigen::MatrixXcd P;          // weighted cyclic shift P_f(omega)
  Eigen::MatrixXcd S;
};

struct ScatteringMatrix {
  std::vector<FaceBlock> blocks;
  int tail_count = 0;
  cplx d;

  Eigen::MatrixXcd dense() const;
  Eigen::MatrixXcd Q() const { return dense() - d * Eigen::MatrixXcd::Identity(tail_count, tail_count); }
  double unitarity_defect() const;  // max over blocks of max |S_f* S_f - I|
};

Eigen::MatrixXcd face_permutation(const FacialDecomposition& fd, int cover_face, const BlowUpGraph& bg,
                                  cplx omega);

ScatteringMatrix scattering_matrix(const FacialDecomposition& fd, const BlowUpGraph& bg, const Coin& coin);

// Same block from the truncated geometric series and from the entrywise formula.
Eigen::MatrixXcd scattering_block_series(const FaceBlock& block, const Coin& coin);
Eigen::MatrixXcd scattering_block_entrywise(const FaceBlock& block, const BlowUpGraph& bg,
                                            const FacialDecomposition& fd, const Coin& coin);

// Internal stationary amplitudes from S alone (hedgehog only).
WaveState stationary_closed_form(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin,
                                 const Eigen::VectorXcd& inflow);

// Tails grouped by vertex of G; orientable iff every cross-vertex submatrix
// has nonzero entries of a single sign. Needs a > 0 and omega = 1.
bool orientability_from_scattering(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin);

// Diagonal unimodular D with S2 = D* S1 D, if one exists.
std::optional<Eigen::VectorXcd> find_diagonal_conjugation(const Eigen::MatrixXcd& S1, const Eigen::MatrixXcd& S2,
                                                          double tol = 1e-9);

}  // namespace ew
