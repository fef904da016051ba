#include "ksi/graph.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace ksi {

Graph Graph::from_edges(VertexId n,
                        std::vector<std::pair<VertexId, VertexId>> edges,
                        std::vector<std::string> labels,
                        bool drop_self_loops) {
  if (n <= 0) throw GraphError("empty graph");
  if (!labels.empty() && static_cast<VertexId>(labels.size()) != n)
    throw GraphError("label table size does not match vertex count");

  // Normalize to u < v, then dedupe.
  std::vector<std::pair<VertexId, VertexId>> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge endpoint out of range");
    if (u == v) {
      if (drop_self_loops) continue;
      throw GraphError("self-loop on vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    norm.emplace_back(u, v);
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<std::int64_t>(norm.size());
  std::vector<std::int64_t> deg(n, 0);
  for (auto [u, v] : norm) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  std::partial_sum(deg.begin(), deg.end(), g.offsets_.begin() + 1);
  g.adj_.resize(static_cast<std::size_t>(2 * g.m_));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : norm) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  // Edges arrive sorted by (u, v), so each list is already increasing
  // in its second endpoint only for the u side; sort per vertex.
  for (VertexId i = 0; i < n; ++i)
    std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);

  if (labels.empty()) {
    g.labels_.resize(n);
    for (VertexId i = 0; i < n; ++i) g.labels_[i] = std::to_string(i);
  } else {
    g.labels_ = std::move(labels);
  }
  return g;
}

bool Graph::has_edge(VertexId i, VertexId j) const {
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#' || c == '%';
  }
  return true;
}

// Tokens separated by runs of whitespace or single commas.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      if (!cur.empty()) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Graph build_from_lines(const std::vector<std::string>& lines,
                       const EdgeListOptions& opts) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::size_t lineno = 0;
  for (const auto& line : lines) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    auto tokens = tokenize(line);
    if (tokens.size() < 2)
      throw ParseError("malformed edge line: expected at least 2 tokens", lineno);
    VertexId u = intern(tokens[0]);
    VertexId v = intern(tokens[1]);
    edges.emplace_back(u, v);
    if (opts.symmetrize) edges.emplace_back(v, u);
  }
  if (labels.empty()) throw GraphError("empty graph: no edges in input");
  const VertexId n = static_cast<VertexId>(labels.size());
  return Graph::from_edges(n, std::move(edges), std::move(labels),
                           opts.drop_self_loops);
}

}  // namespace

Graph parse_edge_list(std::istream& in, const EdgeListOptions& opts) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return build_from_lines(lines, opts);
}

Graph load_edge_list(const std::string& path, const EdgeListOptions& opts) {
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    gzFile gz = gzopen(path.c_str(), "rb");
    if (!gz) throw GraphError("cannot open file: " + path);
    std::string content;
    char buf[1 << 16];
    int got;
    while ((got = gzread(gz, buf, sizeof buf)) > 0) content.append(buf, got);
    bool bad = got < 0;
    gzclose(gz);
    if (bad) throw GraphError("gzip read error: " + path);
    std::istringstream in(content);
    return parse_edge_list(in, opts);
  }
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open file: " + path);
  return parse_edge_list(in, opts);
}

Graph largest_connected_component(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> comp(n, -1);
  VertexId best_root = -1;
  std::int64_t best_size = 0;
  std::vector<VertexId> stack;

  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::int64_t size = 0;
    comp[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId v : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = s;
          stack.push_back(v);
        }
      }
    }
    // Roots are visited in increasing min-id order, so strict > keeps
    // the smallest-min-id component on ties.
    if (size > best_size) {
      best_size = size;
      best_root = s;
    }
  }

  std::vector<VertexId> remap(n, -1);
  std::vector<std::string> labels;
  VertexId next = 0;
  for (VertexId i = 0; i < n; ++i) {
    if (comp[i] == best_root) {
      remap[i] = next++;
      labels.push_back(g.label(i));
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    if (remap[i] == -1) continue;
    for (VertexId j : g.neighbors(i))
      if (i < j) edges.emplace_back(remap[i], remap[j]);
  }
  return Graph::from_edges(next, std::move(edges), std::move(labels));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (VertexId i = 0; i < g.num_vertices(); ++i)
    for (VertexId j : g.neighbors(i))
      if (i < j) out << g.label(i) << ' ' << g.label(j) << '\n';
}

}  // namespace ksi
