#include "ksi/centrality.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ksi {

namespace {

// |N(a) ∩ N(b)| by linear merge of two sorted lists.
std::int64_t intersection_size(std::span<const VertexId> a,
                               std::span<const VertexId> b) {
  std::int64_t count = 0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] < b[ib]) {
      ++ia;
    } else if (a[ia] > b[ib]) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

std::int64_t boundary_edge_count(const Graph& g, VertexId i) {
  auto ni = g.neighbors(i);
  std::int64_t total = 0;
  for (VertexId j : ni)
    total += g.degree(j) - intersection_size(g.neighbors(j), ni);
  return total;
}

int threads_from_env() {
  const char* env = std::getenv("KSI_THREADS");
  if (!env) return 0;
  return std::atoi(env);
}

KsiScores ksi_all(const Graph& g, int threads) {
  const VertexId n = g.num_vertices();
  KsiScores s;
  s.n = n;
  s.boundary_edges.resize(n);
  s.ksi.resize(n);
  s.ksi_norm.resize(n);

  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(std::clamp(hw, 1u, 8u));
  }
  threads = std::min<int>(threads, std::max<VertexId>(n, 1));

  // Integer numerators, one division per vertex at the end: the result
  // is bitwise identical for any partitioning.
  auto worker = [&](VertexId lo, VertexId hi) {
    for (VertexId i = lo; i < hi; ++i) {
      const VertexId d = g.degree(i);
      if (d == 0) {
        s.boundary_edges[i] = 0;
        s.ksi[i] = 1.0;
        s.ksi_norm[i] = 1.0 / n;
        continue;
      }
      const std::int64_t b = boundary_edge_count(g, i);
      s.boundary_edges[i] = b;
      s.ksi[i] = static_cast<double>(b) / d;
      s.ksi_norm[i] = static_cast<double>(b) /
                      (static_cast<double>(d) * (n - d));
    }
  };

  if (threads == 1) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    const VertexId chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      VertexId lo = t * chunk;
      VertexId hi = std::min<VertexId>(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return s;
}

double average_normalized_ksi(const KsiScores& scores) {
  if (scores.n == 0) throw GraphError("average over empty score set");
  double sum = 0.0;
  for (double v : scores.ksi_norm) sum += v;
  return sum / scores.n;
}

KsiScores ksi_all_dense_oracle(const Graph& g, VertexId max_n) {
  const VertexId n = g.num_vertices();
  if (n > max_n)
    throw GraphError("dense oracle capped at n = " + std::to_string(max_n));

  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j : g.neighbors(i)) a[i][j] = 1;

  KsiScores s;
  s.n = n;
  s.boundary_edges.resize(n);
  s.ksi.resize(n);
  s.ksi_norm.resize(n);
  for (VertexId i = 0; i < n; ++i) {
    // numerator = (A^2 Abar)_ii = sum_{j,k} a_ij a_jk (1 - a_ki)
    std::int64_t num = 0;
    std::int64_t den = 0;  // (A^2)_ii = d_i
    for (VertexId j = 0; j < n; ++j) {
      if (!a[i][j]) continue;
      den += a[j][i];
      for (VertexId k = 0; k < n; ++k) num += a[j][k] * (1 - a[k][i]);
    }
    if (den == 0) {
      s.boundary_edges[i] = 0;
      s.ksi[i] = 1.0;
      s.ksi_norm[i] = 1.0 / n;
    } else {
      s.boundary_edges[i] = num;
      s.ksi[i] = static_cast<double>(num) / den;
      s.ksi_norm[i] = static_cast<double>(num) /
                      (static_cast<double>(den) * (n - den));
    }
  }
  return s;
}

}  // namespace ksi
