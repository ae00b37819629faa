#include "embedwalk/covering.hpp"

#include "embedwalk/errors.hpp"

namespace ew {

DoubleCover double_cover(const RotationSystem& rs) {
  const auto& g = rs.graph();
  DoubleCover dc;
  std::vector<std::pair<Vertex, Vertex>> edges;
  dc.lift_table.assign(rs.state_count(), -1);
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [u, v] = g.edge(k);
    const int t = rs.edge_twist(k);
    for (int j = 0; j < 2; ++j) {
      const int ce = static_cast<int>(edges.size());
      edges.emplace_back(2 * u + j, 2 * v + ((j + t) & 1));
      dc.lift_table[make_state(2 * k, j)] = 2 * ce;
      dc.lift_table[make_state(2 * k + 1, (j + t) & 1)] = 2 * ce + 1;
    }
  }
  dc.graph = SymmetricDigraph(2 * g.vertex_count(), std::move(edges));
  dc.project_table.assign(dc.graph.arc_count(), -1);
  for (State s = 0; s < rs.state_count(); ++s) dc.project_table[dc.lift_table[s]] = s;

  std::vector<Arc> rot(dc.graph.arc_count());
  for (State s = 0; s < rs.state_count(); ++s) rot[dc.lift_table[s]] = dc.lift_table[rs.lift_rotate(s)];
  dc.rotation_system = RotationSystem(dc.graph, std::move(rot), std::vector<int>(dc.graph.edge_count(), 0));

  std::vector<int> comp(dc.graph.vertex_count(), -1);
  for (Vertex s = 0; s < dc.graph.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = dc.component_count;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Arc e : dc.graph.incoming(x))
        if (int y = dc.graph.origin(e); comp[y] == -1) { comp[y] = dc.component_count; stack.push_back(y); }
    }
    ++dc.component_count;
  }
  return dc;
}

BlowUpGraph blow_up(const RotationSystem& rs) {
  const int n = rs.state_count();
  const auto& g = rs.graph();
  BlowUpGraph bg;
  bg.island_next.resize(n);
  bg.island_prev.resize(n);
  bg.bridge_target.resize(n);
  bg.bridge_twist.resize(n);
  bg.island_vertex.resize(n);
  bg.base_vertex.resize(n);
  for (State v = 0; v < n; ++v) {
    bg.island_next[v] = rs.lift_rotate(v);
    bg.island_prev[v] = rs.lift_rotate_inverse(v);
    bg.bridge_target[v] = rs.lift_reverse(v);
    bg.bridge_twist[v] = rs.twist(state_arc(v));
    bg.base_vertex[v] = g.terminus(state_arc(v));
    bg.island_vertex[v] = 2 * bg.base_vertex[v] + rs.terminus_sheet(v);
  }
  bg.tailed.assign(n, 0);
  bg.tail_index.assign(n, -1);
  return bg;
}

BlowUpGraph attach_tails(const BlowUpGraph& bg, const std::vector<char>& mask) {
  if (static_cast<int>(mask.size()) != bg.vertex_count()) throw DomainError("tail mask size mismatch");
  BlowUpGraph out = bg;
  out.tailed = mask;
  out.tail_index.assign(bg.vertex_count(), -1);
  out.tail_island.clear();
  for (State v = 0; v < bg.vertex_count(); ++v)
    if (mask[v]) {
      out.tail_index[v] = static_cast<int>(out.tail_island.size());
      out.tail_island.push_back(v);
    }
  return out;
}

BlowUpGraph attach_hedgehog(const BlowUpGraph& bg) {
  return attach_tails(bg, std::vector<char>(bg.vertex_count(), 1));
}

}  // namespace ew
