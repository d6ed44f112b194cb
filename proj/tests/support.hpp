#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "triwalk/graph.hpp"
#include "triwalk/triangulation.hpp"

namespace triwalk::testing {

struct RandomTriangulable {
  Graph graph;
  std::vector<DirectedTriangle> partition;
};

/// Connected union of edge-disjoint triangles. Each triangle contributes both
/// orientations, so `partition` is a valid arc partition by construction.
inline RandomTriangulable random_triangulable(std::uint64_t seed, std::size_t triangles) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::array<Vertex, 3>> cliques{{0, 1, 2}};
  used = {{0, 1}, {0, 2}, {1, 2}};
  std::size_t n = 3;

  auto free_edge = [&](Vertex a, Vertex b) {
    return a != b && !used.contains({std::min(a, b), std::max(a, b)});
  };
  while (cliques.size() < triangles) {
    const Vertex u = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    const int shape = std::uniform_int_distribution<int>(0, 2)(rng);
    Vertex v = n;
    Vertex w = n + 1;
    if (shape >= 1) {
      v = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
      w = n;
    }
    if (shape == 2) w = std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
    if (!free_edge(u, v) || !free_edge(v, w) || !free_edge(u, w)) continue;
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, w}, std::pair{u, w}})
      used.insert({std::min(a, b), std::max(a, b)});
    n = std::max({n, v + 1, w + 1});
    cliques.push_back({u, v, w});
  }

  std::vector<Edge> edges;
  for (const auto& [a, b] : used) edges.push_back({a, b});
  RandomTriangulable out{Graph::from_edges(n, std::move(edges)), {}};
  for (const auto& [a, b, c] : cliques) {
    out.partition.push_back(DirectedTriangle::through(a, b, c));
    out.partition.push_back(DirectedTriangle::through(a, c, b));
  }
  return out;
}

inline const std::vector<std::uint64_t>& property_seeds() {
  static const std::vector<std::uint64_t> seeds{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  return seeds;
}

}  // namespace triwalk::testing
