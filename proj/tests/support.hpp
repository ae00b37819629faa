#pragma once

#include <random>
#include <vector>

#include "embedwalk/enumeration.hpp"
#include "embedwalk/io.hpp"
#include "embedwalk/rotation_system.hpp"

namespace ew::testing {

inline RotationSystem load(const std::string& name) { return read_rotation_system(std::string(EW_DATA_DIR) + "/" + name); }

// One representative per K4 class, computed once.
inline const std::vector<EmbeddingClass>& k4_classes() {
  static const auto classes = enumerate_embeddings(complete_graph(4));
  return classes;
}

inline const EmbeddingClass& find_class(bool orientable, int genus, std::vector<int> faces) {
  for (const auto& c : k4_classes())
    if (c.orientable == orientable && c.genus == genus && c.faces == faces) return c;
  throw std::runtime_error("class not found");
}

// Connected simple graph on n vertices with minimum degree 2.
inline SymmetricDigraph random_graph(int n, std::mt19937_64& rng) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto add = [&](int u, int v) {
    if (u == v || adj[u][v]) return;
    adj[u][v] = adj[v][u] = 1;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  };
  for (int v = 1; v < n; ++v) add(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::bernoulli_distribution extra(0.35);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (extra(rng)) add(u, v);
  for (int u = 0; u < n; ++u) {
    int deg = 0;
    for (int v = 0; v < n; ++v) deg += adj[u][v];
    while (deg < 2) {
      const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (v != u && !adj[u][v]) { add(u, v); ++deg; }
    }
  }
  return {n, edges};
}

inline RotationSystem random_system(const SymmetricDigraph& g, std::mt19937_64& rng) {
  std::vector<std::vector<Vertex>> orders(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (Arc e : g.incoming(x)) orders[x].push_back(g.origin(e));
    std::shuffle(orders[x].begin(), orders[x].end(), rng);
  }
  std::vector<int> tw(g.edge_count());
  for (auto& t : tw) t = std::bernoulli_distribution(0.5)(rng);
  return RotationSystem::from_neighbor_orders(g, orders, tw);
}

inline RotationSystem random_system(std::mt19937_64& rng, int max_vertices = 6) {
  const int n = std::uniform_int_distribution<int>(3, max_vertices)(rng);
  return random_system(random_graph(n, rng), rng);
}

}  // namespace ew::testing
