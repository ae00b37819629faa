#include "embedwalk/rotation_system.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "embedwalk/errors.hpp"

namespace ew {

RotationSystem::RotationSystem(SymmetricDigraph g, std::vector<Arc> rotation, std::vector<int> twist)
    : g_(std::move(g)), rot_(std::move(rotation)), twist_(std::move(twist)) {
  const int m = g_.arc_count();
  if (static_cast<int>(rot_.size()) != m) throw InvariantError("rotation size", "expected one entry per arc");
  if (static_cast<int>(twist_.size()) != g_.edge_count()) throw InvariantError("twist size", "expected one entry per edge");
  for (int t : twist_)
    if (t != 0 && t != 1) throw InvariantError("twist in {0,1}", "got " + std::to_string(t));
  inv_.assign(m, -1);
  for (Arc e = 0; e < m; ++e) {
    Arc f = rot_[e];
    if (f < 0 || f >= m || g_.terminus(f) != g_.terminus(e))
      throw InvariantError("rotation preserves terminus", "arc " + std::to_string(e));
    if (inv_[f] != -1) throw InvariantError("rotation is a permutation", "arc " + std::to_string(f) + " hit twice");
    inv_[f] = e;
  }
  for (Vertex x = 0; x < g_.vertex_count(); ++x) {
    auto in = g_.incoming(x);
    int len = 0;
    Arc e = in[0];
    do { e = rot_[e]; ++len; } while (e != in[0] && len <= g_.degree(x));
    if (len != g_.degree(x))
      throw InvariantError("rotation is one cycle per vertex", "vertex " + std::to_string(x));
  }
}

RotationSystem RotationSystem::from_neighbor_orders(SymmetricDigraph g,
                                                    const std::vector<std::vector<Vertex>>& orders,
                                                    std::vector<int> twist) {
  if (static_cast<int>(orders.size()) != g.vertex_count())
    throw InvariantError("rotation per vertex", "expected " + std::to_string(g.vertex_count()) + " rotation lines");
  std::vector<Arc> rot(g.arc_count(), -1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto& ord = orders[x];
    std::vector<Vertex> sorted = ord, nbrs;
    std::sort(sorted.begin(), sorted.end());
    for (Arc e : g.incoming(x)) nbrs.push_back(g.origin(e));
    std::sort(nbrs.begin(), nbrs.end());
    if (sorted != nbrs)
      throw InvariantError("rotation lists each neighbour once", "vertex " + std::to_string(x));
    const int d = static_cast<int>(ord.size());
    for (int i = 0; i < d; ++i)
      rot[*g.arc_between(ord[i], x)] = *g.arc_between(ord[(i + 1) % d], x);
  }
  return {std::move(g), std::move(rot), std::move(twist)};
}

std::vector<Vertex> RotationSystem::neighbor_order(Vertex x) const {
  auto in = g_.incoming(x);
  Arc start = *std::min_element(in.begin(), in.end(),
                                [&](Arc a, Arc b) { return g_.origin(a) < g_.origin(b); });
  std::vector<Vertex> out;
  Arc e = start;
  do { out.push_back(g_.origin(e)); e = rot_[e]; } while (e != start);
  return out;
}

State RotationSystem::lift_rotate(State u) const {
  const Arc e = state_arc(u);
  const int ts = terminus_sheet(u);
  const Arc e2 = ts == 0 ? rot_[e] : inv_[e];
  return make_state(e2, (ts + twist(e2)) & 1);
}

State RotationSystem::lift_rotate_inverse(State u) const {
  const Arc e = state_arc(u);
  const int ts = terminus_sheet(u);
  const Arc e2 = ts == 0 ? inv_[e] : rot_[e];
  return make_state(e2, (ts + twist(e2)) & 1);
}

std::vector<int> FacialDecomposition::lengths() const {
  std::vector<int> out;
  for (const auto& f : faces) out.push_back(f.length());
  return out;
}

std::vector<int> FacialDecomposition::length_multiset() const {
  auto out = lengths();
  std::sort(out.rbegin(), out.rend());
  return out;
}

int FacialDecomposition::dist(State from, State to) const {
  const auto& a = location[from];
  const auto& b = location[to];
  if (a.cover_face != b.cover_face) throw DomainError("dist: states lie on different faces");
  const int len = cover_faces[a.cover_face].length();
  const int d = ((b.position - a.position) % len + len) % len;
  return d == 0 ? len : d;
}

FacialDecomposition trace_faces(const RotationSystem& rs) {
  const int n = rs.state_count();
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<State>> orbits;
  // Scanning in id order makes every orbit start at its smallest state.
  for (State s = 0; s < n; ++s) {
    if (orbit_of[s] != -1) continue;
    std::vector<State> walk;
    State u = s;
    do {
      orbit_of[u] = static_cast<int>(orbits.size());
      walk.push_back(u);
      u = rs.face_successor(u);
    } while (u != s);
    orbits.push_back(std::move(walk));
  }

  FacialDecomposition fd;
  fd.location.resize(n);
  std::vector<char> used(orbits.size(), 0);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (used[o]) continue;
    const int p = orbit_of[rs.chiral_image(orbits[o][0])];
    if (p == static_cast<int>(o) || used[p])
      throw InvariantError("faces pair with chiral partners", "orbit " + std::to_string(o));
    used[o] = used[p] = 1;
    fd.faces.push_back({orbits[o]});
    fd.cover_faces.push_back({orbits[o]});
    fd.cover_faces.push_back({orbits[p]});
  }
  for (std::size_t cf = 0; cf < fd.cover_faces.size(); ++cf) {
    const auto& w = fd.cover_faces[cf].walk;
    for (std::size_t j = 0; j < w.size(); ++j) fd.location[w[j]] = {static_cast<int>(cf), static_cast<int>(j)};
  }

  fd.self_intersections.resize(fd.faces.size());
  for (std::size_t i = 0; i < fd.faces.size(); ++i) {
    for (State u : fd.faces[i].walk) {
      const State v = rs.lift_reverse(u);
      const auto& lu = fd.location[u];
      const auto& lv = fd.location[v];
      if (lv.cover_face != lu.cover_face || lv.position < lu.position) continue;
      fd.self_intersections[i].push_back({state_arc(u) >> 1, u, v, fd.dist(u, v), fd.dist(v, u)});
    }
  }

  if (rs.graph().connected()) {
    const auto [orientable, k] = euler_genus(rs);
    fd.orientable = orientable;
    fd.genus = k;
  } else {
    fd.orientable = detect_orientability(rs).orientable;
    fd.genus = -1;
  }
  return fd;
}

OrientabilityResult detect_orientability(const RotationSystem& rs) {
  const auto& g = rs.graph();
  if (!g.connected()) throw DomainError("orientability needs a connected graph");
  std::vector<Vertex> parent(g.vertex_count(), -2), order;
  std::vector<int> tree_edge(g.vertex_count(), -1);
  std::deque<Vertex> queue{0};
  parent[0] = -1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (Arc e : g.incoming(x)) {
      Vertex y = g.origin(e);
      if (parent[y] != -2) continue;
      parent[y] = x;
      tree_edge[y] = e >> 1;
      queue.push_back(y);
    }
  }
  // Flipping y fixes its parent edge and only touches edges to unprocessed
  // children or to non-tree neighbours.
  RotationSystem cur = rs;
  for (Vertex y : order)
    if (parent[y] >= 0 && cur.edge_twist(tree_edge[y])) cur = flip_vertex(cur, y);

  std::vector<char> is_tree(g.edge_count(), 0);
  for (Vertex y = 0; y < g.vertex_count(); ++y)
    if (tree_edge[y] >= 0) is_tree[tree_edge[y]] = 1;
  bool orientable = true;
  for (int k = 0; k < g.edge_count(); ++k)
    if (!is_tree[k] && cur.edge_twist(k)) orientable = false;
  return {orientable, std::move(cur), std::move(parent)};
}

Genus euler_genus(const RotationSystem& rs) {
  const auto& g = rs.graph();
  const bool orientable = detect_orientability(rs).orientable;  // throws if disconnected
  int faces = 0;
  std::vector<char> seen(rs.state_count(), 0);
  for (State s = 0; s < rs.state_count(); ++s) {
    if (seen[s]) continue;
    ++faces;
    for (State u = s; !seen[u]; u = rs.face_successor(u)) seen[u] = 1;
  }
  faces /= 2;  // cover faces come in chiral pairs
  const int excess = g.edge_count() - g.vertex_count() - faces;
  return orientable ? Genus{true, excess / 2 + 1} : Genus{false, excess + 2};
}

RotationSystem flip_vertex(const RotationSystem& rs, Vertex x) {
  const auto& g = rs.graph();
  if (x < 0 || x >= g.vertex_count()) throw DomainError("unknown vertex " + std::to_string(x));
  std::vector<Arc> rot = rs.rotation();
  std::vector<int> tw = rs.twists();
  for (Arc e : g.incoming(x)) {
    rot[e] = rs.rotate_inverse(e);
    tw[e >> 1] ^= 1;
  }
  return {g, std::move(rot), std::move(tw)};
}

RotationSystem mirror(const RotationSystem& rs) {
  std::vector<Arc> rot(rs.rotation().size());
  for (std::size_t e = 0; e < rot.size(); ++e) rot[e] = rs.rotate_inverse(static_cast<Arc>(e));
  return {rs.graph(), std::move(rot), rs.twists()};
}

}  // namespace ew
