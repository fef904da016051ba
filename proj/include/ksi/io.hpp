#pragma once

#include <string>

#include "ksi/centrality.hpp"
#include "ksi/distribution.hpp"
#include "ksi/graph.hpp"

namespace ksi {

// Writes via a temp file in the same directory plus rename, so readers
// never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

// Shortest round-trippable form with up to 10 significant digits.
std::string format_double(double x);

// vertex,label,degree,boundary_edges,ksi,ksi_norm
std::string scores_csv(const Graph& g, const KsiScores& s);

// n, m, average normalized ksi coefficient, ksi range.
std::string summary_json(const Graph& g, const KsiScores& s);

// bin_left,bin_right,count
std::string histogram_csv(const Histogram& h);
Histogram read_histogram_csv(const std::string& path);

// One ksi value per data row; accepts a bare numeric column or a CSV
// with a header naming a "ksi" column.
std::vector<double> read_value_column(const std::string& path);

}  // namespace ksi
