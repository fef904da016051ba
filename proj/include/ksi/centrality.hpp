#pragma once

#include <cstdint>
#include <vector>

#include "ksi/graph.hpp"

namespace ksi {

struct KsiScores {
  VertexId n = 0;
  std::vector<std::int64_t> boundary_edges;  // |E(N(i), V\N(i))|
  std::vector<double> ksi;                   // boundary / d_i, 1 if d_i = 0
  std::vector<double> ksi_norm;              // boundary / (d_i (n - d_i)), 1/n if d_i = 0
};

// Number of edges with exactly one endpoint inside N(i), computed as
// sum over j in N(i) of (d_j - |N(j) ∩ N(i)|) with sorted-list merges.
std::int64_t boundary_edge_count(const Graph& g, VertexId i);

// Scores for every vertex. threads = 0 picks a worker count
// automatically; output is identical for any thread count.
KsiScores ksi_all(const Graph& g, int threads = 0);

double average_normalized_ksi(const KsiScores& scores);

// Dense integer-matrix route: numerator (A^2 Abar)_ii with
// Abar = ones - A, denominator (A^2)_ii = d_i. Quadratic memory,
// cubic time; test oracle only.
KsiScores ksi_all_dense_oracle(const Graph& g, VertexId max_n = 256);

// Worker count from KSI_THREADS (0 or unset = auto).
int threads_from_env();

}  // namespace ksi
