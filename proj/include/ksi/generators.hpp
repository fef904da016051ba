#pragma once

#include <cstdint>
#include <string>

#include "ksi/graph.hpp"

namespace ksi {

enum class Model { ER, BA, WS };

struct GeneratorSpec {
  Model model = Model::ER;
  VertexId n = 0;
  double er_p = 0.0;   // ER edge probability
  int ba_m = 1;        // BA attachments per new vertex
  int ws_k = 2;        // WS ring-lattice degree (even; odd rounds down)
  double ws_p = 0.0;   // WS rewiring probability
  std::uint64_t seed = 0;
};

// Deterministic: the same spec (seed included) yields the same graph.
//   ER: each unordered pair independently with probability er_p.
//   BA: clique seed on ba_m+1 vertices, then degree-proportional
//       attachment of ba_m distinct targets per new vertex.
//   WS: ring lattice with ws_k/2 neighbors per side; each clockwise
//       lattice edge rewired once with probability ws_p.
Graph generate(const GeneratorSpec& spec);

Graph erdos_renyi(VertexId n, double p, std::uint64_t seed);
Graph barabasi_albert(VertexId n, int m, std::uint64_t seed);
Graph watts_strogatz(VertexId n, int k, double p, std::uint64_t seed);

const char* model_name(Model m);
Model model_from_name(const std::string& name);

}  // namespace ksi
