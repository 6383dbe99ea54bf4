// SPDX-License-Identifier: Apache-2.0

#include "morse.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace gqm {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && blank(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !blank(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> parse_index(std::string_view tok) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

void check_shape(const Graph& g, const MorseFunction& f) {
  if (f.vertex_values.size() != g.vertex_count() || f.edge_values.size() != g.edge_count())
    throw ContractError("Morse function does not cover every cell of the graph");
}

std::string cell_name(const Graph& g, const Cell& c) {
  return c.kind == CellKind::vertex ? "vertex " + std::to_string(g.label(c.index)) : "edge " + std::to_string(c.index);
}

}  // namespace

MorseFunction parse_morse(const Graph& g, std::string_view text) {
  std::vector<std::optional<Rational>> vv(g.vertex_count()), ev(g.edge_count());
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens_of(line);
    if (!tok.empty()) {
      if (tok.size() != 3 || (tok[0] != "V" && tok[0] != "E"))
        throw ParseError(line_no, "expected 'V <vertex_id> <value>' or 'E <edge_index> <value>'");
      auto id = parse_index(tok[1]);
      if (!id) throw ParseError(line_no, "cell id must be a non-negative integer");
      Rational value;
      try {
        value = parse_rational(tok[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      std::optional<Rational>* slot = nullptr;
      if (tok[0] == "V") {
        auto v = g.find_label(*id);
        if (!v) throw ParseError(line_no, "unknown vertex id " + std::to_string(*id));
        slot = &vv[*v];
      } else {
        if (*id >= g.edge_count()) throw ParseError(line_no, "unknown edge index " + std::to_string(*id));
        slot = &ev[*id];
      }
      if (slot->has_value()) throw ParseError(line_no, "duplicate value for " + std::string(tok[0]) + " " + std::string(tok[1]));
      *slot = value;
    }
    if (end == text.size()) break;
  }
  MorseFunction f;
  for (VertexId v = 0; v < vv.size(); ++v) {
    if (!vv[v]) throw ParseError(0, "missing value for vertex " + std::to_string(g.label(v)));
    f.vertex_values.push_back(*vv[v]);
  }
  for (EdgeId e = 0; e < ev.size(); ++e) {
    if (!ev[e]) throw ParseError(0, "missing value for edge " + std::to_string(e));
    f.edge_values.push_back(*ev[e]);
  }
  return f;
}

std::string format_morse(const Graph& g, const MorseFunction& f) {
  check_shape(g, f);
  std::ostringstream os;
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "V " << g.label(v) << " " << to_string(f.vertex_values[v]) << "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) os << "E " << e << " " << to_string(f.edge_values[e]) << "\n";
  return os.str();
}

WitnessSets witness_sets(const Graph& g, const MorseFunction& f, const Cell& sigma) {
  check_shape(g, f);
  if (!g.is_valid_cell(sigma)) throw ContractError("cell out of range");
  WitnessSets w;
  if (sigma.kind == CellKind::vertex) {
    for (EdgeId e : g.incident(sigma.index))
      if (f.edge_values[e] <= f.vertex_values[sigma.index]) w.upper.push_back({CellKind::edge, e});
  } else {
    const Edge& e = g.edge(sigma.index);
    for (VertexId v : {e.tail, e.head})
      if (f.vertex_values[v] >= f.edge_values[sigma.index]) w.lower.push_back({CellKind::vertex, v});
  }
  return w;
}

MorseValidation validate_morse(const Graph& g, const MorseFunction& f) {
  check_shape(g, f);
  MorseValidation out;
  auto visit = [&](Cell c) {
    WitnessSets w = witness_sets(g, f, c);
    if (w.upper.size() > 1) out.violations.push_back({c, true, std::move(w.upper)});
    if (w.lower.size() > 1) out.violations.push_back({c, false, std::move(w.lower)});
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) visit({CellKind::vertex, v});
  for (EdgeId e = 0; e < g.edge_count(); ++e) visit({CellKind::edge, e});
  out.valid = out.violations.empty();
  return out;
}

void require_morse(const Graph& g, const MorseFunction& f) {
  MorseValidation r = validate_morse(g, f);
  if (r.valid) return;
  const MorseViolation& v = r.violations.front();
  throw InvalidMorseError("not a discrete Morse function: " + cell_name(g, v.cell) + " has " +
                          std::to_string(v.offending.size()) +
                          (v.upper_condition ? " cofaces with value <= its own" : " faces with value >= its own"));
}

bool exclusivity_holds(const Graph& g, const MorseFunction& f) {
  auto ok = [&](Cell c) {
    WitnessSets w = witness_sets(g, f, c);
    return w.upper.empty() || w.lower.empty();
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!ok({CellKind::vertex, v})) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!ok({CellKind::edge, e})) return false;
  return true;
}

CriticalCells critical_cells(const Graph& g, const MorseFunction& f) {
  require_morse(g, f);
  CriticalCells c;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    WitnessSets w = witness_sets(g, f, {CellKind::vertex, v});
    if (w.upper.empty() && w.lower.empty()) c.vertices.push_back(v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    WitnessSets w = witness_sets(g, f, {CellKind::edge, e});
    if (w.upper.empty() && w.lower.empty()) c.edges.push_back(e);
  }
  return c;
}

GradientField make_gradient_field(const Graph& g, std::vector<GradientPair> pairs) {
  GradientField field;
  field.vertex_partner.assign(g.vertex_count(), std::nullopt);
  field.edge_partner.assign(g.edge_count(), std::nullopt);
  for (const auto& p : pairs) {
    if (p.vertex >= g.vertex_count() || p.edge >= g.edge_count()) throw ContractError("gradient pair out of range");
    if (!g.edge(p.edge).touches(p.vertex)) throw ContractError("gradient pair joins a vertex to a non-incident edge");
    if (field.vertex_partner[p.vertex] || field.edge_partner[p.edge])
      throw ContractError("gradient pairs do not form a matching");
    field.vertex_partner[p.vertex] = p.edge;
    field.edge_partner[p.edge] = p.vertex;
  }
  std::sort(pairs.begin(), pairs.end(), [](auto& a, auto& b) { return a.vertex < b.vertex; });
  field.pairs = std::move(pairs);
  return field;
}

GradientField gradient_field(const Graph& g, const MorseFunction& f) {
  require_morse(g, f);
  std::vector<GradientPair> pairs;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (EdgeId e : g.incident(v))
      if (f.edge_values[e] <= f.vertex_values[v]) pairs.push_back({v, e});
  return make_gradient_field(g, std::move(pairs));
}

bool is_acyclic(const Graph& g, const GradientField& field) {
  // Each vertex has at most one outgoing step, so the flow is a functional graph.
  enum class Mark { fresh, active, done };
  std::vector<Mark> mark(g.vertex_count(), Mark::fresh);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    std::vector<VertexId> path;
    VertexId v = start;
    while (true) {
      if (mark[v] == Mark::active) return false;
      if (mark[v] == Mark::done) break;
      mark[v] = Mark::active;
      path.push_back(v);
      if (!field.vertex_partner[v]) break;
      v = g.edge(*field.vertex_partner[v]).other(v);
    }
    for (VertexId p : path) mark[p] = Mark::done;
  }
  return true;
}

CriticalCells critical_cells(const Graph& g, const GradientField& field) {
  CriticalCells c;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!field.vertex_partner[v]) c.vertices.push_back(v);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!field.edge_partner[e]) c.edges.push_back(e);
  return c;
}

VertexId flow_to_critical(const Graph& g, const GradientField& field, VertexId v) {
  if (v >= g.vertex_count()) throw ContractError("vertex out of range");
  for (std::size_t steps = 0; steps <= g.vertex_count(); ++steps) {
    if (!field.vertex_partner[v]) return v;
    v = g.edge(*field.vertex_partner[v]).other(v);
  }
  throw InvariantViolation("gradient flow from vertex did not terminate; the field has a closed path");
}

VertexId flow_to_critical(const Graph& g, const MorseFunction& f, VertexId v) {
  return flow_to_critical(g, gradient_field(g, f), v);
}

bool is_gradient_curve(const Graph& g, const MorseFunction& f, const GradientCurve& c) {
  if (c.vertices.size() != c.edges.size() + 1) return false;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (c.edges[i] >= g.edge_count()) return false;
    const Edge& e = g.edge(c.edges[i]);
    VertexId a = c.vertices[i], b = c.vertices[i + 1];
    if (!e.touches(a) || !e.touches(b) || a == b) return false;
    if (!(f.vertex_values[a] >= f.edge_values[c.edges[i]] && f.edge_values[c.edges[i]] > f.vertex_values[b])) return false;
  }
  return true;
}

namespace {

void extend_curves(const Graph& g, const MorseFunction& f, VertexId target, GradientCurve& cur,
                   std::vector<GradientCurve>& out) {
  VertexId at = cur.vertices.back();
  if (at == target) {
    out.push_back(cur);
    return;  // values strictly decrease, so the curve cannot come back to target
  }
  for (EdgeId e : g.incident(at)) {
    VertexId next = g.edge(e).other(at);
    if (f.vertex_values[at] >= f.edge_values[e] && f.edge_values[e] > f.vertex_values[next]) {
      cur.vertices.push_back(next);
      cur.edges.push_back(e);
      extend_curves(g, f, target, cur, out);
      cur.vertices.pop_back();
      cur.edges.pop_back();
    }
  }
}

}  // namespace

std::vector<GradientCurve> gradient_curves(const Graph& g, const MorseFunction& f, VertexId from, VertexId to) {
  require_morse(g, f);
  if (from >= g.vertex_count() || to >= g.vertex_count()) throw ContractError("vertex out of range");
  std::vector<GradientCurve> out;
  GradientCurve cur{{from}, {}};
  extend_curves(g, f, to, cur, out);
  return out;
}

int curve_multiplicity(const Graph& g, const GradientCurve& c) {
  if (c.vertices.size() != c.edges.size() + 1) throw ContractError("malformed gradient curve");
  int m = 1;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = g.edge(c.edges[i]);
    auto inc = [&](VertexId v) { return e.head == v ? 1 : (e.tail == v ? -1 : 0); };
    m *= -inc(c.vertices[i]) * inc(c.vertices[i + 1]);
  }
  return m;
}

MorseComplex morse_complex(const Graph& g, const MorseFunction& f) {
  MorseComplex mc;
  mc.critical = critical_cells(g, f);
  const GradientField field = gradient_field(g, f);
  const std::size_t c0 = mc.critical.c0(), c1 = mc.critical.c1();
  mc.differential = RationalMatrix(c0, c1);
  mc.boundary_map = RationalMatrix(c0, c1);

  std::vector<std::optional<std::size_t>> row_of(g.vertex_count());
  for (std::size_t r = 0; r < c0; ++r) row_of[mc.critical.vertices[r]] = r;

  for (std::size_t col = 0; col < c1; ++col) {
    const EdgeId tau = mc.critical.edges[col];
    const Edge& e = g.edge(tau);
    for (std::size_t r = 0; r < c0; ++r) {
      const VertexId sigma = mc.critical.vertices[r];
      Rational entry = 0;
      for (VertexId sigma1 : {e.tail, e.head}) {
        const int boundary_coeff = sigma1 == e.head ? 1 : -1;
        int signed_count = 0;
        for (const auto& curve : gradient_curves(g, f, sigma1, sigma)) signed_count += curve_multiplicity(g, curve);
        entry += boundary_coeff * signed_count;
      }
      mc.differential(r, col) = entry;
    }
    mc.boundary_map(*row_of[flow_to_critical(g, field, e.head)], col) += 1;
    mc.boundary_map(*row_of[flow_to_critical(g, field, e.tail)], col) -= 1;
  }
  mc.routes_agree = mc.differential == mc.boundary_map;
  const std::size_t r = rational_rank(mc.differential);
  mc.homology = {c0 - r, c1 - r};
  return mc;
}

MorseFunction height_function(const Graph& g, const SpanningTree& tree) {
  if (tree.depth.size() != g.vertex_count() || tree.in_tree.size() != g.edge_count())
    throw ContractError("spanning tree does not belong to this graph");
  MorseFunction h;
  for (VertexId v = 0; v < g.vertex_count(); ++v) h.vertex_values.emplace_back(static_cast<unsigned long>(tree.depth[v]));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::size_t m = std::max(tree.depth[g.edge(e).tail], tree.depth[g.edge(e).head]);
    h.edge_values.emplace_back(static_cast<unsigned long>(tree.in_tree[e] ? m : m + 1));
  }
  return h;
}

bool tree_boundary_zero_check(const Graph& g, const MorseFunction& f) {
  const GradientField field = gradient_field(g, f);
  for (EdgeId e : critical_cells(g, field).edges)
    if (flow_to_critical(g, field, g.edge(e).tail) != flow_to_critical(g, field, g.edge(e).head)) return false;
  return true;
}

namespace {

MorseFunction assign_flat(const Graph& g, const GradientField& field, const std::vector<Rational>& pair_value) {
  MorseFunction f;
  f.vertex_values.assign(g.vertex_count(), Rational(0));
  f.edge_values.assign(g.edge_count(), Rational(1));
  for (std::size_t i = 0; i < field.pairs.size(); ++i) {
    f.vertex_values[field.pairs[i].vertex] = pair_value[i];
    f.edge_values[field.pairs[i].edge] = pair_value[i];
  }
  return f;
}

bool realizes(const Graph& g, const MorseFunction& f, const GradientField& field) {
  if (!validate_morse(g, f).valid) return false;
  return gradient_field(g, f).pairs == field.pairs;
}

}  // namespace

MorseFunction flat_function(const Graph& g, const GradientField& field) {
  if (!is_acyclic(g, field)) throw ContractError("gradient field has a closed path; no Morse function realizes it");
  const std::size_t np = field.pairs.size();

  MorseFunction ones = assign_flat(g, field, std::vector<Rational>(np, Rational(1)));
  if (realizes(g, ones, field)) return ones;

  // Height of a pair = number of pairs downstream of it along the flow.
  std::vector<std::size_t> pair_of_vertex(g.vertex_count(), np);
  for (std::size_t i = 0; i < np; ++i) pair_of_vertex[field.pairs[i].vertex] = i;
  std::vector<std::size_t> height(np, 0);
  for (std::size_t i = 0; i < np; ++i) {
    VertexId v = field.pairs[i].vertex;
    std::size_t h = 0;
    while (true) {
      VertexId next = g.edge(*field.vertex_partner[v]).other(v);
      if (!field.vertex_partner[next]) break;
      ++h;
      v = next;
    }
    height[i] = h;
  }
  std::vector<std::size_t> order(np);
  for (std::size_t i = 0; i < np; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });
  std::vector<Rational> value(np);
  for (std::size_t pos = 0; pos < np; ++pos) {
    value[order[pos]] = Rational(static_cast<unsigned long>(pos + 1), static_cast<unsigned long>(np + 1));
    value[order[pos]].canonicalize();
  }
  MorseFunction f = assign_flat(g, field, value);
  if (!realizes(g, f, field)) throw InvariantViolation("flat assignment failed to realize the gradient field");
  return f;
}

MorseFunction flatten(const Graph& g, const MorseFunction& f) { return flat_function(g, gradient_field(g, f)); }

GradientField random_acyclic_matching(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GradientPair> incidences;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    incidences.push_back({g.edge(e).tail, e});
    incidences.push_back({g.edge(e).head, e});
  }
  std::shuffle(incidences.begin(), incidences.end(), rng);
  const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);

  std::vector<std::optional<EdgeId>> vpart(g.vertex_count());
  std::vector<bool> ematched(g.edge_count(), false);
  std::vector<GradientPair> kept;
  for (const auto& cand : incidences) {
    if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) >= density) continue;
    if (vpart[cand.vertex] || ematched[cand.edge]) continue;
    // cand.vertex is currently a sink; the pair closes a cycle iff the flow
    // from the far endpoint already reaches it.
    VertexId w = g.edge(cand.edge).other(cand.vertex);
    bool closes = false;
    for (std::size_t steps = 0; steps <= g.vertex_count(); ++steps) {
      if (w == cand.vertex) {
        closes = true;
        break;
      }
      if (!vpart[w]) break;
      w = g.edge(*vpart[w]).other(w);
    }
    if (closes) continue;
    vpart[cand.vertex] = cand.edge;
    ematched[cand.edge] = true;
    kept.push_back(cand);
  }
  return make_gradient_field(g, std::move(kept));
}

MorseFunction random_morse(const Graph& g, std::uint64_t seed) { return flat_function(g, random_acyclic_matching(g, seed)); }

}  // namespace gqm
