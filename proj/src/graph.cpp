#include "embedwalk/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "embedwalk/errors.hpp"

namespace ew {

SymmetricDigraph::SymmetricDigraph(int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), edges_(std::move(edges)), incoming_(n) {
  if (n < 1) throw DomainError("graph needs at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvariantError("vertex range", "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v) throw InvariantError("no self-loops", "loop at " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw InvariantError("simple graph", "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  for (Arc e = 0; e < arc_count(); ++e) incoming_[terminus(e)].push_back(e);
  for (Vertex x = 0; x < n; ++x)
    if (degree(x) < 2)
      throw InvariantError("degree >= 2", "vertex " + std::to_string(x) + " has degree " + std::to_string(degree(x)));
}

std::optional<Arc> SymmetricDigraph::arc_between(Vertex u, Vertex v) const {
  for (Arc e : incoming_[v])
    if (origin(e) == u) return e;
  return std::nullopt;
}

bool SymmetricDigraph::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Arc e : incoming_[x]) {
      Vertex y = origin(e);
      if (!seen[y]) { seen[y] = 1; ++count; stack.push_back(y); }
    }
  }
  return count == n_;
}

std::vector<Arc> incoming_arcs(const SymmetricDigraph& g, Vertex x) {
  if (x < 0 || x >= g.vertex_count()) throw DomainError("unknown vertex " + std::to_string(x));
  auto in = g.incoming(x);
  return {in.begin(), in.end()};
}

SymmetricDigraph complete_graph(int n) {
  if (n < 3) throw DomainError("complete graph needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return {n, std::move(edges)};
}

SymmetricDigraph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle graph needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
  return {n, std::move(edges)};
}

}  // namespace ew
