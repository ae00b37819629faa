#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "embedwalk/coin.hpp"
#include "embedwalk/covering.hpp"
#include "embedwalk/rotation_system.hpp"
#include "embedwalk/scattering.hpp"

namespace ew {

struct ComfortReport {
  double total = 0, island = 0, bridge = 0;
};

// Twist-signed flip-flop on tail indices: (sigma h)_w = (-1)^tau(w) h_{sigma w}.
Eigen::MatrixXcd tail_flip_flop(const BlowUpGraph& bg);

// Comfortability of one inflow, from S alone.
ComfortReport comfortability(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin,
                             const Eigen::VectorXcd& inflow);

struct FaceTerm {
  int face = 0;
  int length = 0;
  int self_intersections = 0;  // edges
  double island = 0;           // |f| (1 + a^|f|) / (1 - a^|f|) style term, both chiralities
  double crossing = 0;         // self-intersection correction, both chiralities
};

struct AverageComfort {
  double mean = 0;                      // E[E] over the 2|A| single-tail inflows
  double island_mean = 0;
  double trace_QQ = 0;                  // tr(QQ*)
  cplx trace_QQ_sigma;                  // tr(QQ* sigma)
  std::optional<double> face_sum_form;  // a > 0 and omega = 1 only
  double tail_sum_over_arcs = 0;        // sum over tails / |A| (= 2 mean), informational
  int tails = 0;
  std::vector<FaceTerm> faces;
};

AverageComfort average_comfortability(const RotationSystem& rs, const FacialDecomposition& fd, const Coin& coin);

// Mean of comfortability() over every single-tail inflow.
double enumerated_average(const ScatteringMatrix& S, const BlowUpGraph& bg, const Coin& coin);

// (|F|/|E|)(1 - (1/|F|) sum_f |f cap fbar| / |f|), with |f cap fbar| counted in arcs.
double limit_comfortability(const RotationSystem& rs, const FacialDecomposition& fd);

const std::vector<SelfIntersection>& self_intersections(const FacialDecomposition& fd, int face);

}  // namespace ew
