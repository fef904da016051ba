#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ksi/graph.hpp"

namespace ksi {

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform bins over [min, max]. Bins are left-closed on the first bin
// and right-closed everywhere, so a value sitting on an interior edge
// counts toward the bin to its left.
struct Histogram {
  std::vector<double> edges;        // length bins + 1, strictly increasing
  std::vector<std::int64_t> counts; // length bins

  double center(std::size_t b) const { return 0.5 * (edges[b] + edges[b + 1]); }
  int nonzero_bins() const;
  std::int64_t total() const;
  // Center of the highest-count bin (lowest index on ties) as a
  // fraction of the full [min, max] range.
  double mode_position() const;
};

Histogram make_histogram(std::span<const double> values, int bins);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rmse = 0.0;  // in ln space, over the fitted bins
  double r2 = 1.0;
};

struct QuadFit {
  std::array<double, 3> coeffs{};  // a x^2 + b x + c, stored {a, b, c}
  double rmse = 0.0;
};

// OLS of ln(count) against bin center over nonzero bins. skip_bins
// drops that many leading bins before fitting (zero or not).
LinearFit fit_exponential(const Histogram& h, int skip_bins = 0);
QuadFit fit_gaussian_log(const Histogram& h, int skip_bins = 0);

double sample_skewness(std::span<const double> values);

enum class Verdict { exponential_ksi, bell_shaped, degenerate, ambiguous };

const char* verdict_name(Verdict v);

// Classification thresholds. The paper defines the exponential-ksi
// class by plot shape only; these cutoffs operationalize it and are
// deliberately kept in one tunable block.
struct ClassifyConfig {
  double min_exp_r2 = 0.90;
  double min_exp_skewness = 0.8;
  double mode_low_quartile = 0.25;   // exponential: mode in lowest quartile
  double bell_skewness_band = 0.5;   // bell: |skewness| < band
  double mode_edge_decile = 0.10;    // bell: mode away from either edge
  int min_bins = 4;                  // fewer nonzero bins => degenerate
};

struct FitReport {
  LinearFit exp;
  QuadFit gauss;
  double skewness = 0.0;
  double mode_position = 0.0;
  int bins_used = 0;
  Verdict verdict = Verdict::degenerate;
};

Verdict classify(const FitReport& report, const ClassifyConfig& cfg = {});

// histogram -> both fits -> classify, tolerating degenerate inputs.
FitReport analyze(std::span<const double> values, int bins, int skip_bins = 0,
                  const ClassifyConfig& cfg = {});

// ksi_all -> histogram -> exponential fit; returns the log-space RMSE.
double log_fit_deviation(const Graph& g, int bins);

std::string fit_report_json(const FitReport& report);

}  // namespace ksi
