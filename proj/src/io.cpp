#include "ksi/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ksi {

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename into place: " + path);
  }
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string scores_csv(const Graph& g, const KsiScores& s) {
  std::ostringstream out;
  out << "vertex,label,degree,boundary_edges,ksi,ksi_norm\n";
  for (VertexId i = 0; i < s.n; ++i) {
    out << i << ',' << g.label(i) << ',' << g.degree(i) << ','
        << s.boundary_edges[i] << ',' << format_double(s.ksi[i]) << ','
        << format_double(s.ksi_norm[i]) << '\n';
  }
  return out.str();
}

std::string summary_json(const Graph& g, const KsiScores& s) {
  double lo = s.ksi.empty() ? 0.0 : s.ksi[0];
  double hi = lo;
  for (double v : s.ksi) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  nlohmann::ordered_json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["avg_normalized_ksi"] = average_normalized_ksi(s);
  j["ksi_min"] = lo;
  j["ksi_max"] = hi;
  return j.dump(2) + "\n";
}

std::string histogram_csv(const Histogram& h) {
  std::ostringstream out;
  out << "bin_left,bin_right,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1])
        << ',' << h.counts[b] << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Histogram read_histogram_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Histogram h;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (first) {
      first = false;
      if (fields.size() >= 3 && fields[0] == "bin_left") continue;
    }
    if (fields.size() < 3)
      throw std::runtime_error("malformed histogram CSV: " + path);
    const double left = std::stod(fields[0]);
    const double right = std::stod(fields[1]);
    if (h.edges.empty()) h.edges.push_back(left);
    h.edges.push_back(right);
    h.counts.push_back(std::stoll(fields[2]));
  }
  if (h.counts.empty()) throw std::runtime_error("empty histogram CSV: " + path);
  return h;
}

std::vector<double> read_value_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<double> values;
  std::string line;
  int ksi_col = -1;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (first) {
      first = false;
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (fields[c] == "ksi") {
          ksi_col = static_cast<int>(c);
          break;
        }
      }
      if (ksi_col >= 0) continue;  // header row consumed
      ksi_col = 0;
    }
    if (static_cast<int>(fields.size()) <= ksi_col)
      throw std::runtime_error("short row in value file: " + path);
    values.push_back(std::stod(fields[ksi_col]));
  }
  if (values.empty()) throw std::runtime_error("no values in file: " + path);
  return values;
}

}  // namespace ksi
