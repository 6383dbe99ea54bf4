// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational_matrix.hpp"

namespace gqm {

using VertexId = std::size_t;  // position in Graph::labels()
using EdgeId = std::size_t;    // position in Graph::edges()

struct Edge {
  VertexId tail;
  VertexId head;

  VertexId other(VertexId v) const { return v == tail ? head : tail; }
  bool touches(VertexId v) const { return v == tail || v == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class CellKind { vertex, edge };

struct Cell {
  CellKind kind;
  std::size_t index;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Finite oriented graph without self-loops. Parallel edges are allowed.
/// Vertex and edge order is fixed at construction and indexes every matrix.
class Graph {
 public:
  Graph() = default;
  /// Vertices are labelled 0..vertex_count-1.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);
  /// `labels[i]` is the external id of vertex i as written in input files.
  Graph(std::vector<std::uint64_t> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::uint64_t>& labels() const noexcept { return labels_; }
  std::uint64_t label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find_label(std::uint64_t label) const;

  /// Incident edges of v in edge order.
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }

  bool has_parallel_edges() const;
  bool is_valid_cell(const Cell& c) const;

 private:
  void build();

  std::vector<std::uint64_t> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Edge-list text: optional `vertices N` header, then `tail head` per line,
/// `#` starts a comment. Without a header vertices appear in first-use order.
Graph parse_graph(std::string_view text);
/// Writes the edge-list format with a `vertices N` header when the labels are
/// exactly 0..N-1, otherwise one line per edge.
std::string format_graph(const Graph& g);

RationalMatrix adjacency_matrix(const Graph& g);
RationalMatrix valence_matrix(const Graph& g);
RationalMatrix incidence_matrix(const Graph& g);

/// Vertex classes ordered by their smallest member; each class ascending.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
std::size_t cycle_rank(const Graph& g);

struct SpanningTree {
  VertexId root;
  std::vector<EdgeId> edges;                 // ascending
  std::vector<bool> in_tree;                 // per edge
  std::vector<std::optional<VertexId>> parent;
  std::vector<std::optional<EdgeId>> parent_edge;
  std::vector<std::size_t> depth;
};

/// BFS from `root`, scanning each vertex's incident edges in edge order.
/// Throws ContractError naming an unreached vertex when g is disconnected.
SpanningTree spanning_tree(const Graph& g, VertexId root);

}  // namespace gqm
