#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ksi/graph.hpp"

namespace ksi::testing {

inline Graph cycle(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

// Star on n vertices, center 0.
inline Graph star(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph path(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

// Independent oracle: enumerate every edge and count those with exactly
// one endpoint inside N(i). No adjacency-intersection machinery shared
// with the implementation under test.
inline std::int64_t brute_boundary_edges(const Graph& g, VertexId i) {
  std::set<VertexId> hood;
  for (VertexId j : g.neighbors(i)) hood.insert(j);
  std::int64_t count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v && hood.count(u) + hood.count(v) == 1) ++count;
  return count;
}

}  // namespace ksi::testing
