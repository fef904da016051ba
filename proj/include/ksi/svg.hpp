#pragma once

#include <optional>
#include <string>

#include "ksi/distribution.hpp"

namespace ksi {

struct PlotSpec {
  std::string title;
  std::string x_label = "ksi";
  std::string y_label = "vertices";
  bool log_y = false;  // log scale drops zero-count bins
  int width = 800;
  int height = 500;
};

// Self-contained SVG: histogram bars as <rect>, optional fitted
// exponential overlay as a <path>. Byte-deterministic for identical
// inputs.
std::string render_histogram_svg(const Histogram& h, const PlotSpec& spec,
                                 const std::optional<LinearFit>& fit = {});

}  // namespace ksi
