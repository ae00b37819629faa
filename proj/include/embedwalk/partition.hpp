#pragma once

#include <string>
#include <vector>

namespace ew {

using Partition = std::vector<int>;  // face lengths, any order

// h(x) = x (1 + a^x) / (1 - a^x)
double h(int x, double a);
// h(0) = 2 / log|a| (negative) and the magnitude used in bounds.
double h0_signed(double a);
double h0_magnitude(double a);

// Q(lambda) = sum h(part); parts must be >= 3.
double island_energy(const Partition& lambda, double a);

enum class Order { less, equal, greater, incomparable };
std::string to_string(Order o);

// Partial order generated by the two moves that provably raise Q:
// split a part into two parts >= 3, or unbalance a pair of parts at fixed sum.
Order compare(Partition lhs, Partition rhs);

// All partitions of n with every part >= min_part, parts descending.
std::vector<Partition> partitions(int n, int min_part = 3);

// [3,3,...,3] with the remainder absorbed into one part of 4 or 5.
Partition max_island_partition(int n);

enum class Surface { orientable, non_orientable, both };
std::string to_string(Surface s);

struct KnClassification {
  int n = 0;
  int gamma = 0;              // minimal orientable genus
  int gamma_tilde = 0;        // minimal non-orientable genus (formula)
  int gamma_max = 0;          // maximal orientable genus
  int gamma_tilde_max = 0;    // maximal non-orientable genus, Betti number
  Surface best = Surface::both;   // minimal-genus surfaces that win
  Surface worst = Surface::both;  // maximal-genus surfaces that lose
};

KnClassification kn_best_worst(int n);

}  // namespace ew
