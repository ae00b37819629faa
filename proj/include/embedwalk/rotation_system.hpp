#pragma once

#include <vector>

#include "embedwalk/graph.hpp"

namespace ew {

// A sheeted arc: arc e of G together with the sheet of its origin, id 2e+s.
// These are exactly the arcs of the double cover, and face tracing runs on them.
using State = int;
inline constexpr Arc state_arc(State u) { return u >> 1; }
inline constexpr int state_sheet(State u) { return u & 1; }
inline constexpr State make_state(Arc e, int sheet) { return 2 * e + sheet; }

class RotationSystem {
 public:
  RotationSystem() = default;
  // rotation[e] is the successor of arc e in the cyclic order at t(e);
  // twist is indexed by edge.
  RotationSystem(SymmetricDigraph g, std::vector<Arc> rotation, std::vector<int> twist);

  // orders[x] lists the neighbours of x; incoming arc v_i->x is followed by v_{i+1}->x.
  static RotationSystem from_neighbor_orders(SymmetricDigraph g,
                                             const std::vector<std::vector<Vertex>>& orders,
                                             std::vector<int> twist);

  const SymmetricDigraph& graph() const { return g_; }
  const std::vector<Arc>& rotation() const { return rot_; }
  const std::vector<int>& twists() const { return twist_; }
  Arc rotate(Arc e) const { return rot_[e]; }
  Arc rotate_inverse(Arc e) const { return inv_[e]; }
  int twist(Arc e) const { return twist_[e >> 1]; }
  int edge_twist(int k) const { return twist_[k]; }
  int state_count() const { return 2 * g_.arc_count(); }

  // Neighbour order at x, starting from the smallest neighbour.
  std::vector<Vertex> neighbor_order(Vertex x) const;

  // Double-cover view: sheet 0 carries rho, sheet 1 carries rho^{-1}.
  int terminus_sheet(State u) const { return (state_sheet(u) + twist(state_arc(u))) & 1; }
  State lift_rotate(State u) const;
  State lift_rotate_inverse(State u) const;
  State lift_reverse(State u) const { return make_state(state_arc(u) ^ 1, terminus_sheet(u)); }
  State face_successor(State u) const { return lift_reverse(lift_rotate(u)); }
  // Sheet swap followed by reversal; maps a face onto its chiral partner.
  State chiral_image(State u) const { return lift_reverse(u ^ 1); }

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.g_ == b.g_ && a.rot_ == b.rot_ && a.twist_ == b.twist_;
  }

 private:
  SymmetricDigraph g_;
  std::vector<Arc> rot_, inv_;
  std::vector<int> twist_;
};

struct Face {
  std::vector<State> walk;
  int length() const { return static_cast<int>(walk.size()); }
};

struct FaceLocation {
  int cover_face;  // 2i is face i, 2i+1 its chiral partner
  int position;
};

// Edge e with both e and its reverse on the face.
struct SelfIntersection {
  int edge;
  State first, second;  // second = lift_reverse(first)
  int dist_forward;     // dist_f(first, second)
  int dist_back;        // dist_f(second, first)
};

struct FacialDecomposition {
  std::vector<Face> faces;        // one representative per face of G
  std::vector<Face> cover_faces;  // faces[i] at 2i, chiral partner at 2i+1
  std::vector<FaceLocation> location;  // indexed by state
  std::vector<std::vector<SelfIntersection>> self_intersections;  // per face
  bool orientable = true;
  int genus = 0;

  int face_count() const { return static_cast<int>(faces.size()); }
  std::vector<int> lengths() const;
  std::vector<int> length_multiset() const;  // descending
  // Steps from the position after `from` to `to` along the cover face, in 1..|f|.
  int dist(State from, State to) const;
  const FaceLocation& face_of(State u) const { return location[u]; }
};

struct Genus {
  bool orientable;
  int genus;  // g if orientable, k otherwise
};

struct OrientabilityResult {
  bool orientable;
  RotationSystem normalized;
  std::vector<Vertex> tree_parent;  // -1 at the root
};

FacialDecomposition trace_faces(const RotationSystem& rs);
Genus euler_genus(const RotationSystem& rs);
OrientabilityResult detect_orientability(const RotationSystem& rs);
RotationSystem flip_vertex(const RotationSystem& rs, Vertex x);
RotationSystem mirror(const RotationSystem& rs);

}  // namespace ew
