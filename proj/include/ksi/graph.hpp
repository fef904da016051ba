#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ksi {

using VertexId = std::int32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : GraphError(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Immutable undirected simple graph in compressed sparse form.
// Neighbor lists are strictly increasing; adjacency is symmetric;
// no self-loops or parallel edges.
class Graph {
 public:
  Graph() = default;

  // Edges may contain duplicates, both orientations, and (optionally
  // dropped) self-loops; they are normalized here. `labels`, when
  // nonempty, must have size n and carries the original vertex names.
  static Graph from_edges(VertexId n,
                          std::vector<std::pair<VertexId, VertexId>> edges,
                          std::vector<std::string> labels = {},
                          bool drop_self_loops = true);

  VertexId num_vertices() const { return n_; }
  std::int64_t num_edges() const { return m_; }

  VertexId degree(VertexId i) const {
    check_vertex(i);
    return static_cast<VertexId>(offsets_[i + 1] - offsets_[i]);
  }

  std::span<const VertexId> neighbors(VertexId i) const {
    check_vertex(i);
    return {adj_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }

  bool has_edge(VertexId i, VertexId j) const;

  const std::string& label(VertexId i) const {
    check_vertex(i);
    return labels_[i];
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && offsets_ == other.offsets_ && adj_ == other.adj_;
  }

 private:
  void check_vertex(VertexId i) const {
    if (i < 0 || i >= n_)
      throw GraphError("vertex id " + std::to_string(i) + " out of range");
  }

  VertexId n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<VertexId> adj_;
  std::vector<std::string> labels_;
};

struct EdgeListOptions {
  bool symmetrize = true;      // storage is undirected either way
  bool drop_self_loops = true;
};

// Whitespace- or comma-delimited edge list; '#' and '%' start comment
// lines; ".gz" paths are decompressed transparently. Raw labels map to
// dense 0-based ids in first-appearance order.
Graph load_edge_list(const std::string& path, const EdgeListOptions& opts = {});
Graph parse_edge_list(std::istream& in, const EdgeListOptions& opts = {});

// Induced subgraph on the largest component, ties broken by the
// component containing the smallest original vertex id. Original
// labels are retained; ids are re-packed densely preserving order.
Graph largest_connected_component(const Graph& g);

// One "u v" line per undirected edge, u < v, using original labels.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace ksi
