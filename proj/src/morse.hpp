// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "spectral.hpp"

namespace gqm {

/// Rational value on every vertex and every edge.
struct MorseFunction {
  std::vector<Rational> vertex_values;
  std::vector<Rational> edge_values;

  const Rational& value(const Cell& c) const {
    return c.kind == CellKind::vertex ? vertex_values.at(c.index) : edge_values.at(c.index);
  }
  friend bool operator==(const MorseFunction&, const MorseFunction&) = default;
};

/// Lines `V <vertex_id> <rational>` / `E <edge_index> <rational>`, `#`
/// comments. Vertex ids are the graph's labels; edge indices are 0-based
/// positions in the edge list. Every cell must receive exactly one value.
MorseFunction parse_morse(const Graph& g, std::string_view text);
std::string format_morse(const Graph& g, const MorseFunction& f);

/// For a cell sigma: `upper` = {tau > sigma : f(tau) <= f(sigma)},
/// `lower` = {tau < sigma : f(tau) >= f(sigma)}.
struct WitnessSets {
  std::vector<Cell> upper;
  std::vector<Cell> lower;
};
WitnessSets witness_sets(const Graph& g, const MorseFunction& f, const Cell& sigma);

struct MorseViolation {
  Cell cell;
  bool upper_condition;  // true: too many cofaces at or below; false: too many faces at or above
  std::vector<Cell> offending;
};

struct MorseValidation {
  bool valid = true;
  std::vector<MorseViolation> violations;
};

/// Throws ContractError when the value tables do not match the graph.
MorseValidation validate_morse(const Graph& g, const MorseFunction& f);
/// Throws InvalidMorseError describing the first violation.
void require_morse(const Graph& g, const MorseFunction& f);
/// At most one of the two witness sets is nonempty at every cell.
bool exclusivity_holds(const Graph& g, const MorseFunction& f);

struct CriticalCells {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::size_t c0() const { return vertices.size(); }
  std::size_t c1() const { return edges.size(); }
};
CriticalCells critical_cells(const Graph& g, const MorseFunction& f);

struct GradientPair {
  VertexId vertex;
  EdgeId edge;
  friend bool operator==(const GradientPair&, const GradientPair&) = default;
};

/// A matching of vertex-edge incidences, indexed both ways.
struct GradientField {
  std::vector<GradientPair> pairs;  // sorted by vertex
  std::vector<std::optional<EdgeId>> vertex_partner;
  std::vector<std::optional<VertexId>> edge_partner;
};

/// Builds the index and checks the matching property; throws ContractError.
GradientField make_gradient_field(const Graph& g, std::vector<GradientPair> pairs);
/// Pairs (v, e) with v an endpoint of e and f(e) <= f(v).
GradientField gradient_field(const Graph& g, const MorseFunction& f);
/// No closed path v_0, e_0, v_1, ... along the pairs.
bool is_acyclic(const Graph& g, const GradientField& field);
CriticalCells critical_cells(const Graph& g, const GradientField& field);

/// Follows pairs until an unpaired vertex. Throws InvariantViolation if the
/// walk exceeds |V| steps.
VertexId flow_to_critical(const Graph& g, const GradientField& field, VertexId v);
VertexId flow_to_critical(const Graph& g, const MorseFunction& f, VertexId v);

struct GradientCurve {
  std::vector<VertexId> vertices;  // sigma_0 .. sigma_k
  std::vector<EdgeId> edges;       // tau_0 .. tau_{k-1}
  std::size_t length() const { return edges.size(); }
  friend bool operator==(const GradientCurve&, const GradientCurve&) = default;
};

bool is_gradient_curve(const Graph& g, const MorseFunction& f, const GradientCurve& c);
/// Every curve from `from` to `to`, depth first in incident-edge order.
std::vector<GradientCurve> gradient_curves(const Graph& g, const MorseFunction& f, VertexId from, VertexId to);
/// prod_i -I(sigma_i, tau_i) * I(sigma_{i+1}, tau_i); +1 for every valid curve.
int curve_multiplicity(const Graph& g, const GradientCurve& c);

struct MorseComplex {
  CriticalCells critical;
  RationalMatrix differential;  // c0 x c1, from signed gradient-curve counts
  RationalMatrix boundary_map;  // c0 x c1, tau -> head(tau)' - tail(tau)'
  bool routes_agree = false;
  BettiNumbers homology;
};

MorseComplex morse_complex(const Graph& g, const MorseFunction& f);

/// h(v) = depth, h(e) = max endpoint depth, plus one off the tree.
MorseFunction height_function(const Graph& g, const SpanningTree& tree);
/// Both endpoints of every critical edge flow to the same critical vertex.
bool tree_boundary_zero_check(const Graph& g, const MorseFunction& f);

/// Flat function with the given matching: critical cells get their dimension,
/// paired cells share a value. All pairs get 1 when that is Morse; otherwise
/// pairs get distinct values k/(P+1), decreasing along the flow.
MorseFunction flat_function(const Graph& g, const GradientField& field);
/// Flat function with the same critical cells and pairs as f.
MorseFunction flatten(const Graph& g, const MorseFunction& f);

/// Random acyclic matching: incidences are visited in shuffled order and kept
/// with a per-call density unless they close a cycle.
GradientField random_acyclic_matching(const Graph& g, std::uint64_t seed);
MorseFunction random_morse(const Graph& g, std::uint64_t seed);

}  // namespace gqm
