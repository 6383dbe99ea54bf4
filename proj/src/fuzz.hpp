// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gqm {

/// Random oriented graph with 1..max_vertices vertices and at most max_edges
/// edges. Without `allow_parallel` the result is simple.
Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges, bool allow_parallel);

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct InstanceResult {
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;
};

/// Runs every module invariant on one graph plus the Morse function
/// random_morse(g, morse_seed). `inject_fault` corrupts the even Laplacian
/// fed to the Hodge checks; it exists to exercise the failure path.
InstanceResult check_instance(const Graph& g, std::uint64_t morse_seed, bool inject_fault = false);

/// Removes edges, then vertices, while `check` keeps failing.
Graph minimize_failure(const Graph& g, std::uint64_t morse_seed, const std::string& check, bool inject_fault);

struct FuzzOptions {
  std::size_t graphs = 100;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 15;
  std::string artifact_dir = ".";
  bool inject_fault = false;
};

struct FuzzViolation {
  std::size_t instance = 0;
  std::uint64_t morse_seed = 0;
  std::string check;
  std::string detail;
  std::string graph_file;
  std::string morse_file;
};

struct FuzzSummary {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<FuzzViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Reproducers for failing instances are written to options.artifact_dir.
FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace gqm
