// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Every subcommand builds its report through the C
// API, writes it verbatim with --json and renders a table from it.

#include <gqm/gqm.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInvariant = 3;

struct GraphDeleter {
  void operator()(gqm_graph* g) const { gqm_graph_free(g); }
};
struct MorseDeleter {
  void operator()(gqm_morse* f) const { gqm_morse_free(f); }
};
using GraphHandle = std::unique_ptr<gqm_graph, GraphDeleter>;
using MorseHandle = std::unique_ptr<gqm_morse, MorseDeleter>;

struct CliFailure {
  int code;
  std::string message;
};

int exit_code(gqm_status s) {
  switch (s) {
    case GQM_OK: return 0;
    case GQM_ERR_PARSE:
    case GQM_ERR_ARGUMENT:
    case GQM_ERR_OVERFLOW: return kExitIo;
    case GQM_ERR_INVALID_MORSE: return 2;
    default: return kExitInvariant;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(gqm_status s, const std::string& context) {
  if (s != GQM_OK) throw CliFailure{exit_code(s), context + ": " + gqm_last_error()};
}

GraphHandle load_graph(const std::string& path) {
  gqm_graph* g = nullptr;
  check(gqm_graph_parse(read_file(path).c_str(), &g), path);
  return GraphHandle(g);
}

MorseHandle load_morse(const gqm_graph* g, const std::string& path) {
  gqm_morse* f = nullptr;
  check(gqm_morse_parse(g, read_file(path).c_str(), &f), path);
  return MorseHandle(f);
}

// Takes ownership of the report text; a null report means the call failed outright.
json finish(gqm_status s, char* text, const std::string& json_path) {
  if (!text) throw CliFailure{exit_code(s), gqm_last_error()};
  std::string body(text);
  gqm_string_free(text);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw CliFailure{kExitIo, "cannot write " + json_path};
    out << body;
    if (!out) throw CliFailure{kExitIo, "cannot write " + json_path};
  }
  return json::parse(body);
}

std::string cell(const json& c) { return (c["kind"] == "vertex" ? "v" : "e") + c["id"].dump(); }

std::string list(const json& a, const std::string& prefix = "") {
  std::string out;
  for (const auto& x : a) {
    if (!out.empty()) out += ", ";
    out += prefix + (x.is_string() ? x.get<std::string>() : x.dump());
  }
  return "{" + out + "}";
}

void print_matrix(const std::string& name, const json& rows) {
  std::cout << name << (rows.empty() ? " (empty)\n" : "\n");
  std::size_t width = 1;
  for (const auto& r : rows)
    for (const auto& x : r) width = std::max(width, x.get<std::string>().size());
  for (const auto& r : rows) {
    std::cout << "  [";
    bool first = true;
    for (const auto& x : r) {
      std::string s = x.get<std::string>();
      std::cout << (first ? "" : "  ") << std::string(width - s.size(), ' ') << s;
      first = false;
    }
    std::cout << "]\n";
  }
}

std::string floats(const json& a) {
  std::string out;
  for (const auto& x : a) out += (out.empty() ? "" : " ") + (x.is_null() ? std::string("nan") : x.dump());
  return "[" + out + "]";
}

void print_graph(const json& g) {
  std::cout << "graph: " << g["vertices"] << " vertices, " << g["edges"] << " edges"
            << (g["simple"].get<bool>() ? "" : " (parallel edges)") << "\n";
}

void print_betti(const std::string& name, const json& b) {
  std::cout << name << ": h0 = " << b["h0"] << ", h1 = " << b["h1"] << "\n";
}

void print_violations(const json& r) {
  for (const auto& v : r["violations"]) std::cerr << "violation: " << v.get<std::string>() << "\n";
}

void print_critical(const json& c) {
  std::cout << "critical vertices: " << list(c["vertices"], "v") << "  (c0 = " << c["c0"] << ")\n";
  std::cout << "critical edges:    " << list(c["edges"], "e") << "  (c1 = " << c["c1"] << ")\n";
}

void print_inequalities(const json& q) {
  auto yes = [](const json& b) { return b.get<bool>() ? "yes" : "NO"; };
  std::cout << "Morse inequalities: h0<=c0 " << yes(q["h0_le_c0"]) << ", h1<=c1 " << yes(q["h1_le_c1"])
            << ", tight " << yes(q["tight"]) << ", c0-c1=|V|-|E| " << yes(q["euler_identity"]) << "\n";
}

void print_complex(const json& mc) {
  print_matrix("Morse differential (critical vertices x critical edges)", mc["differential"]);
  std::cout << "curve count equals boundary map: " << (mc["routes_agree"].get<bool>() ? "yes" : "NO") << "\n";
  print_betti("Morse homology", mc["homology"]);
}

void render_hodge(const json& r) {
  print_graph(r["graph"]);
  const json& m = r["matrices"];
  print_matrix("incidence I", m["incidence"]);
  print_matrix("even Laplacian (val - A)", m["even_laplacian"]);
  print_matrix("odd Laplacian (I^T I)", m["odd_laplacian"]);
  std::cout << "val - A equals I I^T: " << (r["laplacian_forms_agree"].get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("spectra")) {
    std::cout << "even spectrum: " << floats(r["spectra"]["even"]) << "\n";
    std::cout << "odd spectrum:  " << floats(r["spectra"]["odd"]) << "\n";
  }
  std::cout << "components: " << r["components"].size() << ", cycle rank: " << r["cycle_rank"] << "\n";
  print_betti("Betti numbers", r["betti"]);
}

void render_morse(const json& r) {
  print_graph(r["graph"]);
  const json& val = r["validation"];
  std::cout << "Morse function: " << (val["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
  for (const auto& v : val["violations"]) {
    std::cout << "  " << v["condition"].get<std::string>() << " violated at " << cell(v["cell"]) << " by ";
    std::string sep;
    for (const auto& o : v["offending"]) {
      std::cout << sep << cell(o);
      sep = ", ";
    }
    std::cout << "\n";
  }
  if (!val["valid"].get<bool>()) return;
  print_critical(r["critical"]);
  std::cout << "gradient pairs:";
  for (const auto& p : r["gradient_field"]) std::cout << " (v" << p["vertex"] << ", e" << p["edge"] << ")";
  std::cout << "\n";
  print_complex(r["morse_complex"]);
  print_betti("Betti numbers", r["betti"]);
  print_inequalities(r["inequalities"]);
  if (r.contains("witten")) {
    const json& w = r["witten"];
    std::cout << "Witten deformation (" << w["function"].get<std::string>() << " function)\n";
    print_matrix("even Laplacian d_s d_s*", w["even_laplacian_s"]["display"]);
    print_matrix("odd Laplacian d_s* d_s", w["odd_laplacian_s"]["display"]);
    const json& lim = w["limit"];
    if (lim["converged"].get<bool>()) {
      print_matrix("even limit s -> inf", lim["even"]);
      print_matrix("odd limit s -> inf", lim["odd"]);
    } else {
      std::cout << "limit s -> inf diverges at";
      for (const auto& d : lim["divergences"])
        std::cout << " " << d["laplacian"].get<std::string>() << "(" << cell(d["row"]) << "," << cell(d["col"])
                  << ")";
      std::cout << "\n";
    }
    if (w.contains("kernels"))
      std::cout << "limit kernel dims: " << w["kernels"]["even"]["dimension"] << ", "
                << w["kernels"]["odd"]["dimension"] << "\n";
  }
  if (r.contains("spectral_flow")) {
    std::cout << "spectral flow\n";
    for (const auto& row : r["spectral_flow"]["rows"])
      std::cout << "  s = " << row["s"] << "  even " << floats(row["even"]) << "  odd " << floats(row["odd"]) << "\n";
  }
  if (r.contains("cutoff")) {
    const json& c = r["cutoff"];
    std::cout << "energy cutoff a = " << c["a"] << ": undeformed (" << c["undeformed"]["h0"] << ", "
              << c["undeformed"]["h1"] << ")";
    for (const auto& d : c["deformed"]) std::cout << ", s=" << d["s"] << " (" << d["h0"] << ", " << d["h1"] << ")";
    std::cout << "\n";
  }
}

void render_tree(const json& r) {
  print_graph(r["graph"]);
  std::cout << "root: v" << r["root"] << "\n";
  std::cout << "tree edges: " << list(r["tree"]["edges"], "e") << "\n";
  std::cout << "height function:\n" << r["height_function"]["text"].get<std::string>();
  std::cout << "valid Morse function: " << (r["valid"].get<bool>() ? "yes" : "NO") << "\n";
  print_critical(r["critical"]);
  std::cout << "boundary vanishes on critical edges: " << (r["boundary_zero"].get<bool>() ? "yes" : "NO") << "\n";
  print_complex(r["morse_complex"]);
  print_inequalities(r["inequalities"]);
}

void render_walks(const json& r) {
  print_graph(r["graph"]);
  const bool odd = r["kind"] == "odd";
  print_matrix(std::string(odd ? "odd walk counts (Delta_-)^" : "generalized walk counts (-Delta_+)^") +
                   r["k"].dump(),
               r["counts"]);
  if (r.contains("oracle")) {
    print_matrix("brute-force counts", r["oracle"]["counts"]);
    std::cout << r["oracle"]["verdict"].get<std::string>() << "\n";
  }
}

void render_fuzz(const json& r) {
  std::cout << "instances: " << r["instances"] << ", checks: " << r["checks"] << ", failures: "
            << r["failures"].size() << "\n";
  for (const auto& f : r["failures"])
    std::cout << "  instance " << f["instance"] << " " << f["check"].get<std::string>() << ": "
              << f["detail"].get<std::string>() << "\n    reproducer: " << f["graph_file"].get<std::string>()
              << " " << f["morse_file"].get<std::string>() << "\n";
  std::cout << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int report_exit(gqm_status s, const json& r) {
  print_violations(r);
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph Laplacians, Hodge theory and discrete Morse theory"};
  app.set_version_flag("--version", std::string(gqm_version()));
  app.require_subcommand(1);

  std::string json_path;
  std::string graph_path, morse_path;

  auto* hodge = app.add_subcommand("hodge", "Laplacians, spectra and Betti numbers of a graph");
  hodge->add_option("graph", graph_path, "edge-list file")->required();
  hodge->add_option("--json", json_path, "write the JSON report to PATH");

  bool witten = false, flatten = false;
  std::vector<double> s_grid;
  std::optional<double> cutoff;
  auto* morse = app.add_subcommand("morse", "analyse a discrete Morse function");
  morse->add_option("graph", graph_path, "edge-list file")->required();
  morse->add_option("function", morse_path, "Morse-function file")->required();
  morse->add_flag("--witten", witten, "deformed Laplacians and their s -> infinity limits");
  morse->add_flag("--flatten", flatten, "deform the flattened function");
  morse->add_option("--s-grid", s_grid, "ascending s values for the spectral flow table")->delimiter(',');
  morse->add_option("--cutoff", cutoff, "energy cutoff a")->check(CLI::NonNegativeNumber);
  morse->add_option("--json", json_path, "write the JSON report to PATH");

  std::optional<std::uint64_t> root;
  auto* tree = app.add_subcommand("tree", "height function of a BFS spanning tree");
  tree->add_option("graph", graph_path, "edge-list file")->required();
  tree->add_option("--root", root, "root vertex id (default: first vertex)");
  tree->add_option("--json", json_path, "write the JSON report to PATH");

  unsigned k = 1;
  bool odd = false, oracle = false;
  auto* walks = app.add_subcommand("walks", "signed walk counts");
  walks->add_option("graph", graph_path, "edge-list file")->required();
  walks->add_option("--k", k, "walk length")->check(CLI::Range(0u, 64u));
  walks->add_flag("--odd", odd, "edge-to-edge walks (Delta_-)^k");
  walks->add_flag("--oracle", oracle, "compare with brute-force enumeration");
  walks->add_option("--json", json_path, "write the JSON report to PATH");

  gqm_fuzz_options fz;
  gqm_fuzz_options_init(&fz);
  std::string artifacts = ".";
  bool inject = false;
  auto* fuzz = app.add_subcommand("fuzz", "run the invariant suite on random instances");
  fuzz->add_option("--graphs", fz.graphs, "number of random graphs");
  fuzz->add_option("--seed", fz.seed, "random seed");
  fuzz->add_option("--max-vertices", fz.max_vertices, "vertex bound")->check(CLI::Range(1u, 64u));
  fuzz->add_option("--max-edges", fz.max_edges, "edge bound")->check(CLI::Range(0u, 128u));
  fuzz->add_option("--artifacts", artifacts, "directory for reproducer files");
  fuzz->add_flag("--inject-fault", inject, "corrupt the even Laplacian (test mode)");
  fuzz->add_option("--json", json_path, "write the JSON report to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitIo;
  }

  try {
    char* text = nullptr;
    if (*hodge) {
      GraphHandle g = load_graph(graph_path);
      gqm_status s = gqm_report_hodge(g.get(), &text);
      json r = finish(s, text, json_path);
      render_hodge(r);
      return report_exit(s, r);
    }
    if (*morse) {
      GraphHandle g = load_graph(graph_path);
      MorseHandle f = load_morse(g.get(), morse_path);
      gqm_morse_options o;
      gqm_morse_options_init(&o);
      o.witten = witten;
      o.flatten = flatten;
      o.s_grid = s_grid.data();
      o.s_grid_length = s_grid.size();
      o.has_cutoff = cutoff.has_value();
      o.cutoff = cutoff.value_or(0.0);
      gqm_status s = gqm_report_morse(g.get(), f.get(), &o, &text);
      json r = finish(s, text, json_path);
      render_morse(r);
      return report_exit(s, r);
    }
    if (*tree) {
      GraphHandle g = load_graph(graph_path);
      std::size_t index = 0;
      if (root) check(gqm_graph_vertex_index(g.get(), *root, &index), "--root");
      gqm_status s = gqm_report_tree(g.get(), index, &text);
      json r = finish(s, text, json_path);
      render_tree(r);
      return report_exit(s, r);
    }
    if (*walks) {
      GraphHandle g = load_graph(graph_path);
      gqm_status s = gqm_report_walks(g.get(), k, odd, oracle, &text);
      json r = finish(s, text, json_path);
      render_walks(r);
      if (r.contains("oracle") && r["oracle"]["verdict"] == "MISMATCH") return kExitInvariant;
      return report_exit(s, r);
    }
    if (*fuzz) {
      fz.artifact_dir = artifacts.c_str();
      fz.inject_fault = inject;
      gqm_status s = gqm_report_fuzz(&fz, &text);
      json r = finish(s, text, json_path);
      render_fuzz(r);
      if (!r["passed"].get<bool>()) return kExitInvariant;
      return report_exit(s, r);
    }
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
