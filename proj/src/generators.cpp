#include "ksi/generators.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <stdexcept>
#include <vector>

#include "ksi/rng.hpp"

namespace ksi {

const char* model_name(Model m) {
  switch (m) {
    case Model::ER: return "er";
    case Model::BA: return "ba";
    case Model::WS: return "ws";
  }
  return "?";
}

Model model_from_name(const std::string& name) {
  if (name == "er" || name == "ER") return Model::ER;
  if (name == "ba" || name == "BA") return Model::BA;
  if (name == "ws" || name == "WS") return Model::WS;
  throw std::invalid_argument("unknown model: " + name);
}

Graph erdos_renyi(VertexId n, double p, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("er: n must be positive");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("er: p outside [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (rng.next_double() < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

Graph barabasi_albert(VertexId n, int m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw std::invalid_argument("ba: need 1 <= m < n");
  SplitMix64 rng(seed);

  std::vector<std::pair<VertexId, VertexId>> edges;
  // Clique seed on m+1 vertices keeps every early vertex attachable.
  for (VertexId i = 0; i <= m; ++i)
    for (VertexId j = i + 1; j <= m; ++j) edges.emplace_back(i, j);

  // Each edge endpoint appears once; sampling an index uniformly is
  // sampling a vertex proportionally to its degree.
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * (static_cast<std::size_t>(m) * n));
  for (auto [u, v] : edges) {
    endpoints.push_back(u);
    endpoints.push_back(v);
  }

  std::vector<VertexId> targets;
  for (VertexId v = m + 1; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      VertexId t = endpoints[rng.next_below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (VertexId t : targets) {
      edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph watts_strogatz(VertexId n, int k, double p, std::uint64_t seed) {
  if (k % 2 != 0) {
    std::cerr << "ws: odd lattice degree k=" << k << " rounded down to "
              << k - 1 << "\n";
    k -= 1;
  }
  if (k < 2 || k >= n) throw std::invalid_argument("ws: need 2 <= k < n (even)");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("ws: p outside [0, 1]");
  SplitMix64 rng(seed);

  std::vector<std::set<VertexId>> adj(n);
  auto add = [&](VertexId u, VertexId v) {
    adj[u].insert(v);
    adj[v].insert(u);
  };
  auto remove = [&](VertexId u, VertexId v) {
    adj[u].erase(v);
    adj[v].erase(u);
  };

  const int half = k / 2;
  for (VertexId i = 0; i < n; ++i)
    for (int j = 1; j <= half; ++j) add(i, (i + j) % n);

  // Rewire each clockwise lattice edge once, ring by ring.
  for (int j = 1; j <= half; ++j) {
    for (VertexId i = 0; i < n; ++i) {
      if (rng.next_double() >= p) continue;
      if (static_cast<VertexId>(adj[i].size()) >= n - 1) continue;  // saturated
      VertexId old = (i + j) % n;
      VertexId w;
      do {
        w = static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(n)));
      } while (w == i || adj[i].count(w));
      remove(i, old);
      add(i, w);
    }
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId v : adj[i])
      if (i < v) edges.emplace_back(i, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.model) {
    case Model::ER: return erdos_renyi(spec.n, spec.er_p, spec.seed);
    case Model::BA: return barabasi_albert(spec.n, spec.ba_m, spec.seed);
    case Model::WS: return watts_strogatz(spec.n, spec.ws_k, spec.ws_p, spec.seed);
  }
  throw std::invalid_argument("unknown model");
}

}  // namespace ksi
