// SPDX-License-Identifier: Apache-2.0

// Conversions between library types and the plain oracle representations.

#pragma once

#include <string>

#include "graph.hpp"
#include "morse.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::PlainGraph plain(const gqm::Graph& g) {
  oracle::PlainGraph p;
  p.n = g.vertex_count();
  for (const auto& e : g.edges()) p.edges.emplace_back(e.tail, e.head);
  return p;
}

inline gqm::Graph graph(const oracle::PlainGraph& p) {
  std::vector<gqm::Edge> edges;
  for (auto [t, h] : p.edges) edges.push_back({t, h});
  return gqm::Graph(p.n, edges);
}

inline oracle::PlainFunction plain(const gqm::MorseFunction& f) { return {f.vertex_values, f.edge_values}; }

inline oracle::Table table(const gqm::RationalMatrix& m) {
  oracle::Table t(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m(i, j);
  return t;
}

inline gqm::RationalMatrix matrix(const oracle::Table& t, std::size_t cols) {
  gqm::RationalMatrix m(t.size(), cols);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = t[i][j];
  return m;
}

inline gqm::Rational q(long p, long d = 1) { return gqm::make_rational(p, d); }

inline std::string data_file(const std::string& name) { return std::string(GQM_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path);

}  // namespace support
