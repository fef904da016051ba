#include "ksi/sweep.hpp"

#include <map>
#include <sstream>

#include "ksi/centrality.hpp"
#include "ksi/io.hpp"
#include "ksi/rng.hpp"

namespace ksi {

namespace {

SweepCell run_cell(const SweepSpec& spec, std::size_t cell_index,
                   double param1, double param2) {
  SweepCell cell;
  cell.param1 = param1;
  cell.param2 = param2;

  double sum_rmse = 0.0, sum_skew = 0.0;
  int ok = 0;
  std::map<Verdict, int> votes;
  std::string last_error;

  for (int rep = 0; rep < spec.replicates; ++rep) {
    try {
      GeneratorSpec gspec;
      gspec.model = spec.model;
      gspec.n = spec.n;
      gspec.seed = derive_seed(spec.base_seed, cell_index, rep);
      if (spec.model == Model::BA) {
        gspec.ba_m = static_cast<int>(param1);
      } else {
        gspec.ws_k = static_cast<int>(param1);
        gspec.ws_p = param2;
      }
      Graph g = generate(gspec);
      KsiScores scores = ksi_all(g);
      FitReport report = analyze(scores.ksi, spec.bins);
      sum_rmse += report.exp.rmse;
      sum_skew += report.skewness;
      ++votes[report.verdict];
      ++ok;
    } catch (const std::exception& e) {
      last_error = e.what();
    }
  }

  if (ok == 0) {
    cell.error = last_error;
    return cell;
  }
  cell.mean_exp_rmse = sum_rmse / ok;
  cell.mean_skewness = sum_skew / ok;
  int best = -1;
  for (auto [verdict, n] : votes) {
    if (n > best) {
      best = n;
      cell.majority_verdict = verdict;
    }
  }
  return cell;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.replicates < 1) throw std::invalid_argument("sweep: replicates >= 1");
  SweepResult result;
  result.spec = spec;

  if (spec.model == Model::BA) {
    if (spec.m_values.empty()) throw std::invalid_argument("sweep: empty m axis");
    std::size_t index = 0;
    for (int m : spec.m_values)
      result.cells.push_back(run_cell(spec, index++, m, 0.0));
  } else if (spec.model == Model::WS) {
    if (spec.k_values.empty() || spec.p_values.empty())
      throw std::invalid_argument("sweep: empty k or p axis");
    std::size_t index = 0;
    for (int k : spec.k_values)
      for (double p : spec.p_values)
        result.cells.push_back(run_cell(spec, index++, k, p));
  } else {
    throw std::invalid_argument("sweep: model must be ba or ws");
  }
  return result;
}

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream out;
  out << "param1,param2,mean_rmse,mean_skewness,verdict\n";
  for (const auto& cell : r.cells) {
    out << format_double(cell.param1) << ',' << format_double(cell.param2)
        << ',' << format_double(cell.mean_exp_rmse) << ','
        << format_double(cell.mean_skewness) << ','
        << (cell.error.empty() ? verdict_name(cell.majority_verdict) : "error")
        << '\n';
  }
  return out.str();
}

std::string heatmap_csv(const SweepResult& r) {
  if (r.spec.model != Model::WS)
    throw std::invalid_argument("heatmap requires a WS (k, p) grid sweep");
  const auto& ks = r.spec.k_values;
  const auto& ps = r.spec.p_values;

  std::ostringstream out;
  out << "p\\k";
  for (int k : ks) out << ',' << k;
  out << '\n';
  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    out << format_double(ps[pi]);
    for (std::size_t ki = 0; ki < ks.size(); ++ki)
      out << ',' << format_double(r.cells[ki * ps.size() + pi].mean_exp_rmse);
    out << '\n';
  }
  return out.str();
}

}  // namespace ksi
