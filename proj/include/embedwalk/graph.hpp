#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ew {

using Vertex = int;
using Arc = int;

// Simple symmetric digraph. Edge k = {u,v} (as given) owns arcs 2k: u->v and
// 2k+1: v->u, so the reverse arc is id ^ 1.
class SymmetricDigraph {
 public:
  SymmetricDigraph() = default;
  // Validates: simple, vertices in range, min degree 2.
  SymmetricDigraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return n_; }
  int arc_count() const { return 2 * edge_count(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  Vertex origin(Arc e) const { return (e & 1) ? edges_[e >> 1].second : edges_[e >> 1].first; }
  Vertex terminus(Arc e) const { return origin(e ^ 1); }
  static Arc reverse(Arc e) { return e ^ 1; }
  static int edge_of(Arc e) { return e >> 1; }
  std::pair<Vertex, Vertex> edge(int k) const { return edges_[k]; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  // A_x in id order.
  std::span<const Arc> incoming(Vertex x) const { return incoming_[x]; }
  int degree(Vertex x) const { return static_cast<int>(incoming_[x].size()); }
  std::optional<Arc> arc_between(Vertex u, Vertex v) const;
  bool connected() const;

  friend bool operator==(const SymmetricDigraph& a, const SymmetricDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Arc>> incoming_;
};

// Checked version of g.incoming(x).
std::vector<Arc> incoming_arcs(const SymmetricDigraph& g, Vertex x);

SymmetricDigraph complete_graph(int n);
SymmetricDigraph cycle_graph(int n);

}  // namespace ew
