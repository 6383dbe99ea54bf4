// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "fuzz.hpp"
#include "morse.hpp"
#include "witten.hpp"

namespace gqm {

inline constexpr const char* kReportSchema = "gqm-report/1";

/// Outcome classes shared with the C API status codes and CLI exit codes.
enum class ReportStatus { ok = 0, invalid_morse = 2, invariant_violation = 3 };

struct Report {
  nlohmann::json body;
  ReportStatus status = ReportStatus::ok;
};

/// Rounds to 12 significant digits; -0 becomes 0.
double round_float(double x);

nlohmann::json rational_matrix_json(const RationalMatrix& m);
nlohmann::json exppoly_json(const ExpPoly& p);
nlohmann::json exppoly_matrix_json(const ExpPolyMatrix& m);

Report hodge_report(const Graph& g);

struct MorseReportOptions {
  bool witten = false;
  bool flatten = false;
  std::vector<double> s_grid;
  std::optional<double> cutoff;
};
Report morse_report(const Graph& g, const MorseFunction& f, const MorseReportOptions& options);

Report tree_report(const Graph& g, VertexId root);
Report walks_report(const Graph& g, unsigned k, bool odd, bool oracle);
Report fuzz_report(const FuzzOptions& options);

}  // namespace gqm
