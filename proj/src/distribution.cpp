#include "ksi/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "ksi/centrality.hpp"

namespace ksi {

int Histogram::nonzero_bins() const {
  int n = 0;
  for (auto c : counts) n += (c > 0);
  return n;
}

std::int64_t Histogram::total() const {
  std::int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

double Histogram::mode_position() const {
  std::size_t best = 0;
  for (std::size_t b = 1; b < counts.size(); ++b)
    if (counts[b] > counts[best]) best = b;
  const double span = edges.back() - edges.front();
  if (span <= 0.0) return 0.0;
  return (center(best) - edges.front()) / span;
}

Histogram make_histogram(std::span<const double> values, int bins) {
  if (values.empty()) throw FitError("histogram of empty input");
  if (bins < 1) throw FitError("histogram needs at least one bin");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (!std::isfinite(v)) throw FitError("non-finite value in histogram input");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1.0;  // constant input: everything in bin 0

  Histogram h;
  h.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b)
    h.edges[b] = lo + (hi - lo) * b / bins;
  h.edges[bins] = hi;
  h.counts.assign(bins, 0);

  // First bin closed on the left, all bins closed on the right: a value
  // on an interior edge belongs to the bin ending there.
  const double width = (hi - lo) / bins;
  for (double v : values) {
    int b = static_cast<int>(std::ceil((v - lo) / width)) - 1;
    b = std::clamp(b, 0, bins - 1);
    // Roundoff guard: bin b covers (edges[b], edges[b+1]].
    while (b + 1 < bins && v > h.edges[b + 1]) ++b;
    while (b > 0 && v <= h.edges[b]) --b;
    ++h.counts[b];
  }
  return h;
}

namespace {

struct LogPoints {
  std::vector<double> x;
  std::vector<double> y;  // ln(count)
};

LogPoints nonzero_log_points(const Histogram& h, int skip_bins) {
  LogPoints pts;
  for (std::size_t b = static_cast<std::size_t>(std::max(skip_bins, 0));
       b < h.counts.size(); ++b) {
    if (h.counts[b] <= 0) continue;
    pts.x.push_back(h.center(b));
    pts.y.push_back(std::log(static_cast<double>(h.counts[b])));
  }
  return pts;
}

double rmse_of(const std::vector<double>& residuals) {
  double ss = 0.0;
  for (double r : residuals) ss += r * r;
  return std::sqrt(ss / residuals.size());
}

}  // namespace

LinearFit fit_exponential(const Histogram& h, int skip_bins) {
  auto pts = nonzero_log_points(h, skip_bins);
  const std::size_t n = pts.x.size();
  if (n < 2) throw FitError("exponential fit needs at least 2 nonzero bins");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += pts.x[i];
    my += pts.y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = pts.x[i] - mx;
    sxx += dx * dx;
    sxy += dx * (pts.y[i] - my);
  }

  LinearFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;

  std::vector<double> res(n);
  double sst = 0.0, ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    res[i] = pts.y[i] - (fit.intercept + fit.slope * pts.x[i]);
    ssr += res[i] * res[i];
    sst += (pts.y[i] - my) * (pts.y[i] - my);
  }
  fit.rmse = rmse_of(res);
  fit.r2 = sst > 0.0 ? 1.0 - ssr / sst : 1.0;
  return fit;
}

QuadFit fit_gaussian_log(const Histogram& h, int skip_bins) {
  auto pts = nonzero_log_points(h, skip_bins);
  const std::size_t n = pts.x.size();
  if (n < 3) throw FitError("quadratic fit needs at least 3 nonzero bins");

  // Center x for conditioning, fit y = a u^2 + b u + c with u = x - mx.
  double mx = 0.0;
  for (double x : pts.x) mx += x;
  mx /= n;

  double s0 = static_cast<double>(n), s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  double t0 = 0, t1 = 0, t2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = pts.x[i] - mx;
    const double u2 = u * u;
    s1 += u;
    s2 += u2;
    s3 += u2 * u;
    s4 += u2 * u2;
    t0 += pts.y[i];
    t1 += u * pts.y[i];
    t2 += u2 * pts.y[i];
  }

  // Normal equations, 3x3 Gaussian elimination with partial pivoting.
  double m[3][4] = {{s4, s3, s2, t2}, {s3, s2, s1, t1}, {s2, s1, s0, t0}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    if (m[col][col] == 0.0) throw FitError("singular quadratic fit");
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  const double a = m[0][3] / m[0][0];
  const double b = m[1][3] / m[1][1];
  const double c = m[2][3] / m[2][2];

  QuadFit fit;
  // Shift back from u = x - mx to x.
  fit.coeffs = {a, b - 2.0 * a * mx, a * mx * mx - b * mx + c};

  std::vector<double> res(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = pts.x[i] - mx;
    res[i] = pts.y[i] - (a * u * u + b * u + c);
  }
  fit.rmse = rmse_of(res);
  return fit;
}

double sample_skewness(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  if (m2 <= 0.0) return 0.0;
  return m3 / std::pow(m2, 1.5);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::exponential_ksi: return "exponential_ksi";
    case Verdict::bell_shaped: return "bell_shaped";
    case Verdict::degenerate: return "degenerate";
    case Verdict::ambiguous: return "ambiguous";
  }
  return "?";
}

Verdict classify(const FitReport& report, const ClassifyConfig& cfg) {
  if (report.bins_used < cfg.min_bins) return Verdict::degenerate;
  if (report.exp.r2 >= cfg.min_exp_r2 &&
      report.skewness >= cfg.min_exp_skewness &&
      report.mode_position <= cfg.mode_low_quartile)
    return Verdict::exponential_ksi;
  if (std::abs(report.skewness) < cfg.bell_skewness_band &&
      report.mode_position > cfg.mode_edge_decile &&
      report.mode_position < 1.0 - cfg.mode_edge_decile)
    return Verdict::bell_shaped;
  return Verdict::ambiguous;
}

FitReport analyze(std::span<const double> values, int bins, int skip_bins,
                  const ClassifyConfig& cfg) {
  FitReport report;
  Histogram h = make_histogram(values, bins);

  int used = 0;
  for (std::size_t b = static_cast<std::size_t>(std::max(skip_bins, 0));
       b < h.counts.size(); ++b)
    used += (h.counts[b] > 0);
  report.bins_used = used;
  report.skewness = sample_skewness(values);
  report.mode_position = h.mode_position();
  if (used >= 2) report.exp = fit_exponential(h, skip_bins);
  if (used >= 3) report.gauss = fit_gaussian_log(h, skip_bins);
  report.verdict = classify(report, cfg);
  return report;
}

double log_fit_deviation(const Graph& g, int bins) {
  KsiScores scores = ksi_all(g);
  Histogram h = make_histogram(scores.ksi, bins);
  return fit_exponential(h).rmse;
}

std::string fit_report_json(const FitReport& report) {
  nlohmann::ordered_json j;
  j["exp_slope"] = report.exp.slope;
  j["exp_intercept"] = report.exp.intercept;
  j["exp_rmse"] = report.exp.rmse;
  j["exp_r2"] = report.exp.r2;
  j["gauss_coeffs"] = report.gauss.coeffs;
  j["gauss_rmse"] = report.gauss.rmse;
  j["skewness"] = report.skewness;
  j["mode_position"] = report.mode_position;
  j["bins_used"] = report.bins_used;
  j["verdict"] = verdict_name(report.verdict);
  return j.dump(2) + "\n";
}

}  // namespace ksi
