// SPDX-License-Identifier: Apache-2.0

#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"

namespace gqm {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : labels_(vertex_count), edges_(std::move(edges)) {
  std::iota(labels_.begin(), labels_.end(), std::uint64_t{0});
  build();
}

Graph::Graph(std::vector<std::uint64_t> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  build();
}

void Graph::build() {
  std::vector<std::uint64_t> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractError("duplicate vertex label");
  incident_.assign(labels_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.tail >= labels_.size() || ed.head >= labels_.size())
      throw ContractError("edge " + std::to_string(e) + " has an endpoint out of range");
    if (ed.tail == ed.head) throw ContractError("edge " + std::to_string(e) + " is a self-loop");
    incident_[ed.tail].push_back(e);
    incident_[ed.head].push_back(e);
  }
}

std::optional<VertexId> Graph::find_label(std::uint64_t label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

bool Graph::has_parallel_edges() const {
  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) keys.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

bool Graph::is_valid_cell(const Cell& c) const {
  return c.kind == CellKind::vertex ? c.index < vertex_count() : c.index < edge_count();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> parse_id(std::string_view tok) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::uint64_t> declared;
  std::vector<std::uint64_t> labels;
  std::unordered_map<std::uint64_t, VertexId> index;
  std::vector<Edge> edges;

  auto vertex_for = [&](std::uint64_t id, std::size_t line) -> VertexId {
    if (declared) {
      if (id >= *declared)
        throw ParseError(line, "unknown vertex id " + std::to_string(id) + " (header declares " +
                                   std::to_string(*declared) + " vertices)");
      return static_cast<VertexId>(id);
    }
    auto [it, inserted] = index.emplace(id, labels.size());
    if (inserted) labels.push_back(id);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0] == "vertices") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertices N'");
      if (declared) throw ParseError(line_no, "duplicate vertices header");
      if (!edges.empty() || !labels.empty()) throw ParseError(line_no, "vertices header must precede edges");
      declared = parse_id(tokens[1]);
      if (!declared) throw ParseError(line_no, "vertex count is not a non-negative integer");
    } else {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'tail_id head_id'");
      auto tail = parse_id(tokens[0]);
      auto head = parse_id(tokens[1]);
      if (!tail || !head) throw ParseError(line_no, "vertex ids must be non-negative integers");
      if (*tail == *head) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*tail));
      VertexId t = vertex_for(*tail, line_no);
      VertexId h = vertex_for(*head, line_no);
      edges.push_back({t, h});
    }
    if (end == text.size()) break;
  }

  if (declared) {
    std::vector<std::uint64_t> ids(*declared);
    std::iota(ids.begin(), ids.end(), std::uint64_t{0});
    return Graph(std::move(ids), std::move(edges));
  }
  return Graph(std::move(labels), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  bool canonical = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) canonical = canonical && g.label(v) == v;
  if (canonical) os << "vertices " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) os << g.label(e.tail) << " " << g.label(e.head) << "\n";
  return os.str();
}

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    a(e.tail, e.head) = 1;
    a(e.head, e.tail) = 1;
  }
  return a;
}

RationalMatrix valence_matrix(const Graph& g) {
  RationalMatrix d(g.vertex_count(), g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) d(v, v) = static_cast<unsigned long>(g.incident(v).size());
  return d;
}

RationalMatrix incidence_matrix(const Graph& g) {
  RationalMatrix m(g.vertex_count(), g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    m(g.edge(e).tail, e) = -1;
    m(g.edge(e).head, e) = 1;
  }
  return m;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t cycle_rank(const Graph& g) {
  return g.edge_count() + connected_components(g).size() - g.vertex_count();
}

SpanningTree spanning_tree(const Graph& g, VertexId root) {
  if (root >= g.vertex_count()) throw ContractError("root vertex out of range");
  const std::size_t n = g.vertex_count();
  SpanningTree t{root, {}, std::vector<bool>(g.edge_count(), false), std::vector<std::optional<VertexId>>(n),
                 std::vector<std::optional<EdgeId>>(n), std::vector<std::size_t>(n, 0)};
  std::vector<bool> seen(n, false);
  std::queue<VertexId> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.edge(e).other(v);
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      t.depth[w] = t.depth[v] + 1;
      t.in_tree[e] = true;
      t.edges.push_back(e);
      q.push(w);
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (!seen[v])
      throw ContractError("graph is disconnected: vertex " + std::to_string(g.label(v)) + " is unreachable from root " +
                          std::to_string(g.label(root)));
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

}  // namespace gqm
