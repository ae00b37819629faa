#pragma once

#include <cstdint>
#include <vector>

#include "embedwalk/coin.hpp"
#include "embedwalk/graph.hpp"
#include "embedwalk/rotation_system.hpp"

namespace ew {

struct EmbeddingClass {
  RotationSystem representative;
  std::uint64_t key = 0;  // smallest encoding in the orbit
  bool orientable = true;
  int genus = 0;
  std::vector<int> faces;               // descending
  std::vector<int> self_intersections;  // edges, per face in the order of `faces`
  std::uint64_t orbit_size = 0;
  double limit = 0;                     // limit_comfortability
};

// 10^7 unless EW_BUDGET is set.
std::uint64_t default_budget();
// prod (deg-1)! * 2^|E|, saturating at UINT64_MAX.
std::uint64_t raw_system_count(const SymmetricDigraph& g);

std::vector<std::vector<Vertex>> automorphisms(const SymmetricDigraph& g);

// Key <-> rotation system. Rotation choices occupy the high digits, twists the low |E| bits.
std::uint64_t encode(const RotationSystem& rs);
RotationSystem decode(const SymmetricDigraph& g, std::uint64_t key);

std::vector<EmbeddingClass> enumerate_embeddings(const SymmetricDigraph& g, std::uint64_t budget = default_budget());

struct RankedClass {
  int index = 0;  // into the class list
  double value = 0;
  bool tied_with_previous = false;
};

struct Ranking {
  std::vector<RankedClass> by_mean;   // E[E], descending
  std::vector<RankedClass> by_limit;  // limit coefficient, descending
};

Ranking rank_by_comfortability(const std::vector<EmbeddingClass>& classes, const Coin& coin);

struct GenusSummary {
  int min_orientable = -1, max_orientable = -1;
  int min_non_orientable = -1, max_non_orientable = -1;
};

GenusSummary min_max_genus(const std::vector<EmbeddingClass>& classes);

}  // namespace ew
