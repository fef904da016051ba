#include "ksi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ksi {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_histogram_svg(const Histogram& h, const PlotSpec& spec,
                                 const std::optional<LinearFit>& fit) {
  const double margin_left = 60, margin_right = 20, margin_top = 40,
               margin_bottom = 50;
  const double pw = spec.width - margin_left - margin_right;
  const double ph = spec.height - margin_top - margin_bottom;

  const double x_min = h.edges.front();
  const double x_max = h.edges.back();

  auto y_value = [&](double count) {
    return spec.log_y ? std::log(count) : count;
  };
  double y_max = 0.0;
  double y_min = spec.log_y ? 0.0 : 0.0;
  bool have = false;
  for (auto c : h.counts) {
    if (c <= 0) continue;
    const double y = y_value(static_cast<double>(c));
    y_max = have ? std::max(y_max, y) : y;
    if (spec.log_y) y_min = have ? std::min(y_min, y) : y;
    have = true;
  }
  if (!have) y_max = 1.0;
  if (spec.log_y && y_min > 0.0) y_min = 0.0;  // anchor log axis at count 1
  if (y_max <= y_min) y_max = y_min + 1.0;

  auto sx = [&](double x) {
    return margin_left + (x - x_min) / (x_max - x_min) * pw;
  };
  auto sy = [&](double y) {
    return margin_top + ph - (y - y_min) / (y_max - y_min) * ph;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << ' ' << spec.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (!spec.title.empty())
    svg << "<text x=\"" << num(spec.width / 2.0)
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << escape_xml(spec.title) << "</text>\n";

  // Axes
  svg << "<line x1=\"" << num(margin_left) << "\" y1=\"" << num(margin_top)
      << "\" x2=\"" << num(margin_left) << "\" y2=\""
      << num(margin_top + ph) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << num(margin_left) << "\" y1=\""
      << num(margin_top + ph) << "\" x2=\"" << num(margin_left + pw)
      << "\" y2=\"" << num(margin_top + ph) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << num(margin_left + pw / 2.0) << "\" y=\""
      << num(spec.height - 12.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">"
      << escape_xml(spec.x_label) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << num(margin_top + ph / 2.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 16 "
      << num(margin_top + ph / 2.0) << ")\">"
      << escape_xml(spec.y_label) << (spec.log_y ? " (log)" : "")
      << "</text>\n";

  // Bars; on a log axis zero-count bins are simply not drawn.
  svg << "<g fill=\"#4878cf\" class=\"bars\">\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    if (h.counts[b] <= 0) continue;
    const double x0 = sx(h.edges[b]);
    const double x1 = sx(h.edges[b + 1]);
    const double yt = sy(y_value(static_cast<double>(h.counts[b])));
    svg << "<rect x=\"" << num(x0) << "\" y=\"" << num(yt) << "\" width=\""
        << num(std::max(x1 - x0, 0.5)) << "\" height=\""
        << num(margin_top + ph - yt) << "\"/>\n";
  }
  svg << "</g>\n";

  // Fitted exponential overlay: ln(count) = intercept + slope * x.
  if (fit) {
    svg << "<path class=\"fit\" fill=\"none\" stroke=\"#d65f5f\" "
           "stroke-width=\"2\" d=\"";
    const int samples = 100;
    bool started = false;
    for (int i = 0; i <= samples; ++i) {
      const double x = x_min + (x_max - x_min) * i / samples;
      const double ln_c = fit->intercept + fit->slope * x;
      const double y = spec.log_y ? ln_c : std::exp(ln_c);
      if (y < y_min || y > y_max) {
        started = false;
        continue;
      }
      svg << (started ? 'L' : 'M') << num(sx(x)) << ' ' << num(sy(y));
      started = true;
    }
    svg << "\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ksi
