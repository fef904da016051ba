#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksi/distribution.hpp"
#include "ksi/generators.hpp"

namespace ksi {

// BA sweeps run over m_values (one axis); WS sweeps over the
// k_values x p_values grid, row-major with k as the outer axis.
struct SweepSpec {
  Model model = Model::WS;
  VertexId n = 2000;
  std::vector<int> m_values;
  std::vector<int> k_values;
  std::vector<double> p_values;
  int replicates = 3;
  std::uint64_t base_seed = 0;
  int bins = 50;
};

struct SweepCell {
  double param1 = 0.0;  // m (BA) or k (WS)
  double param2 = 0.0;  // unused (BA) or p (WS)
  double mean_exp_rmse = 0.0;
  double mean_skewness = 0.0;
  Verdict majority_verdict = Verdict::degenerate;
  std::string error;  // nonempty if every replicate failed
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepCell> cells;  // row-major over (axis1, axis2)
};

SweepResult run_sweep(const SweepSpec& spec);

// param1,param2,mean_rmse,mean_skewness,verdict
std::string sweep_csv(const SweepResult& r);

// Matrix of mean exp_rmse, k values as header row, p values as first
// column (WS grids only).
std::string heatmap_csv(const SweepResult& r);

}  // namespace ksi
