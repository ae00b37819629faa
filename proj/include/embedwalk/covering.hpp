#pragma once

#include <vector>

#include "embedwalk/graph.hpp"
#include "embedwalk/rotation_system.hpp"

namespace ew {

// Z2 voltage lift of (G, rho, tau). Vertex (x,j) of the cover has id 2x+j.
// Edge k of G lifts to cover edges 2k+j joining (u,j) and (v,j+tau).
struct DoubleCover {
  SymmetricDigraph graph;
  RotationSystem rotation_system;  // rho on sheet 0, rho^{-1} on sheet 1, no twists
  std::vector<Arc> lift_table;     // state of G -> arc of the cover
  std::vector<State> project_table;
  int component_count = 0;

  static int sheet(Vertex v) { return v & 1; }
  static Vertex base_vertex(Vertex v) { return v >> 1; }
  Arc lift(Arc e, int origin_sheet) const { return lift_table[make_state(e, origin_sheet)]; }
  State project(Arc cover_arc) const { return project_table[cover_arc]; }
};

// Vertices are the arcs of the double cover, labelled by their G state.
// Island arc v runs v -> rho~(v); bridge arc v runs v -> sigma(v).
struct BlowUpGraph {
  std::vector<State> island_next, island_prev, bridge_target;
  std::vector<int> bridge_twist;
  std::vector<Vertex> island_vertex;  // cover vertex hosting island arc v
  std::vector<Vertex> base_vertex;    // vertex of G hosting island arc v
  std::vector<char> tailed;
  std::vector<int> tail_index;        // island arc -> tail id, or -1
  std::vector<State> tail_island;     // tail id -> island arc

  int vertex_count() const { return static_cast<int>(island_next.size()); }
  int tail_count() const { return static_cast<int>(tail_island.size()); }
  bool hedgehog() const { return tail_count() == vertex_count(); }

  // Incidence maps around an island arc xi and a bridge b.
  State br(State xi) const { return bridge_target[xi]; }
  State br_sharp(State xi) const { return bridge_target[island_next[xi]]; }
  State is(State b) const { return island_prev[b]; }
  State is_sharp(State b) const { return b; }
  // Tail matched with a bridge: the one on the island arc leaving t(b).
  int phi(State b) const { return tail_index[bridge_target[b]]; }

  // Slots of the finite internal state. Island arc v is split into
  // head (v -> z_v) and tail part (z_v -> rho~ v) when it carries a tail.
  int internal_size() const { return 2 * vertex_count() + tail_count(); }
  int head_slot(State v) const { return v; }
  int tail_slot(State v) const { return tailed[v] ? vertex_count() + tail_index[v] : v; }
  int bridge_slot(State v) const { return vertex_count() + tail_count() + v; }
};

DoubleCover double_cover(const RotationSystem& rs);
BlowUpGraph blow_up(const RotationSystem& rs);
BlowUpGraph attach_hedgehog(const BlowUpGraph& bg);
// General boundary: tails on the island arcs flagged in `mask`.
BlowUpGraph attach_tails(const BlowUpGraph& bg, const std::vector<char>& mask);

}  // namespace ew
