// SPDX-License-Identifier: Apache-2.0

#include "gqm/gqm.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "errors.hpp"
#include "report.hpp"

struct gqm_graph {
  gqm::Graph graph;
};

struct gqm_morse {
  gqm::MorseFunction function;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gqm_status fail(gqm_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class Body>
gqm_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const gqm::ParseError& e) {
    return fail(GQM_ERR_PARSE, e.what());
  } catch (const gqm::InvalidMorseError& e) {
    return fail(GQM_ERR_INVALID_MORSE, e.what());
  } catch (const gqm::InvariantViolation& e) {
    return fail(GQM_ERR_INVARIANT, e.what());
  } catch (const gqm::DivergenceError& e) {
    return fail(GQM_ERR_DIVERGENT, e.what());
  } catch (const gqm::ContractError& e) {
    return fail(GQM_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GQM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GQM_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw gqm::ContractError(what);
}

void check_pair(const gqm_graph* g, const gqm_morse* f) {
  require(g && f, "null handle");
  require(f->function.vertex_values.size() == g->graph.vertex_count() &&
              f->function.edge_values.size() == g->graph.edge_count(),
          "Morse function belongs to a different graph");
}

gqm_status emit(const gqm::Report& r, char** json_out) {
  *json_out = duplicate(r.body.dump(2));
  if (!*json_out) return fail(GQM_ERR_INTERNAL, "out of memory");
  switch (r.status) {
    case gqm::ReportStatus::ok: return GQM_OK;
    case gqm::ReportStatus::invalid_morse: return fail(GQM_ERR_INVALID_MORSE, "not a discrete Morse function");
    case gqm::ReportStatus::invariant_violation:
      return fail(GQM_ERR_INVARIANT, r.body["violations"].empty() ? "invariant violation"
                                                                   : r.body["violations"][0].get<std::string>());
  }
  return GQM_ERR_INTERNAL;
}

int64_t to_int64(const gqm::Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("walk count does not fit in 64 bits");
  return static_cast<int64_t>(z.get_si());
}

}  // namespace

extern "C" {

const char* gqm_version(void) { return "1.0.0"; }

const char* gqm_last_error(void) { return last_error.c_str(); }

const char* gqm_status_name(gqm_status status) {
  switch (status) {
    case GQM_OK: return "ok";
    case GQM_ERR_PARSE: return "parse error";
    case GQM_ERR_INVALID_MORSE: return "invalid Morse function";
    case GQM_ERR_INVARIANT: return "invariant violation";
    case GQM_ERR_ARGUMENT: return "invalid argument";
    case GQM_ERR_DIVERGENT: return "divergent limit";
    case GQM_ERR_OVERFLOW: return "overflow";
    case GQM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gqm_string_free(char* s) { std::free(s); }

gqm_status gqm_graph_parse(const char* text, gqm_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = nullptr;
    *out = new gqm_graph{gqm::parse_graph(text)};
    return GQM_OK;
  });
}

gqm_status gqm_graph_create(size_t vertex_count, const size_t* tails, const size_t* heads, size_t edge_count,
                            gqm_graph** out) {
  return guarded([&] {
    require(out && (edge_count == 0 || (tails && heads)), "null argument");
    *out = nullptr;
    std::vector<gqm::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({tails[i], heads[i]});
    *out = new gqm_graph{gqm::Graph(vertex_count, std::move(edges))};
    return GQM_OK;
  });
}

void gqm_graph_free(gqm_graph* g) { delete g; }

size_t gqm_graph_vertex_count(const gqm_graph* g) { return g ? g->graph.vertex_count() : 0; }
size_t gqm_graph_edge_count(const gqm_graph* g) { return g ? g->graph.edge_count() : 0; }

gqm_status gqm_graph_vertex_index(const gqm_graph* g, uint64_t label, size_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    auto v = g->graph.find_label(label);
    if (!v) throw gqm::ContractError("no vertex with id " + std::to_string(label));
    *out = *v;
    return GQM_OK;
  });
}

gqm_status gqm_graph_vertex_label(const gqm_graph* g, size_t index, uint64_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    require(index < g->graph.vertex_count(), "vertex index out of range");
    *out = g->graph.label(index);
    return GQM_OK;
  });
}

gqm_status gqm_graph_betti(const gqm_graph* g, size_t* h0, size_t* h1) {
  return guarded([&] {
    require(g && h0 && h1, "null argument");
    auto b = gqm::betti_numbers(g->graph);
    *h0 = b.h0;
    *h1 = b.h1;
    return GQM_OK;
  });
}

gqm_status gqm_graph_cutoff_cohomology(const gqm_graph* g, double a, size_t* h0, size_t* h1) {
  return guarded([&] {
    require(g && h0 && h1, "null argument");
    auto b = gqm::cutoff_cohomology(gqm::cutoff_complex(g->graph, a));
    *h0 = b.h0;
    *h1 = b.h1;
    return GQM_OK;
  });
}

gqm_status gqm_graph_walk_count(const gqm_graph* g, unsigned k, size_t i, size_t j, int64_t* out) {
  return guarded([&]() -> gqm_status {
    require(g && out, "null argument");
    try {
      *out = to_int64(gqm::generalized_walk_count(g->graph, k, i, j));
    } catch (const std::overflow_error& e) {
      return fail(GQM_ERR_OVERFLOW, e.what());
    }
    return GQM_OK;
  });
}

gqm_status gqm_graph_odd_walk_count(const gqm_graph* g, unsigned k, size_t a, size_t b, int64_t* out) {
  return guarded([&]() -> gqm_status {
    require(g && out, "null argument");
    try {
      *out = to_int64(gqm::odd_walk_count(g->graph, k, a, b));
    } catch (const std::overflow_error& e) {
      return fail(GQM_ERR_OVERFLOW, e.what());
    }
    return GQM_OK;
  });
}

gqm_status gqm_morse_parse(const gqm_graph* g, const char* text, gqm_morse** out) {
  return guarded([&] {
    require(g && text && out, "null argument");
    *out = nullptr;
    *out = new gqm_morse{gqm::parse_morse(g->graph, text)};
    return GQM_OK;
  });
}

gqm_status gqm_morse_random(const gqm_graph* g, uint64_t seed, gqm_morse** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = nullptr;
    *out = new gqm_morse{gqm::random_morse(g->graph, seed)};
    return GQM_OK;
  });
}

gqm_status gqm_morse_height(const gqm_graph* g, size_t root, gqm_morse** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = nullptr;
    *out = new gqm_morse{gqm::height_function(g->graph, gqm::spanning_tree(g->graph, root))};
    return GQM_OK;
  });
}

gqm_status gqm_morse_flatten(const gqm_graph* g, const gqm_morse* f, gqm_morse** out) {
  return guarded([&] {
    check_pair(g, f);
    require(out, "null argument");
    *out = nullptr;
    *out = new gqm_morse{gqm::flatten(g->graph, f->function)};
    return GQM_OK;
  });
}

void gqm_morse_free(gqm_morse* f) { delete f; }

gqm_status gqm_morse_to_text(const gqm_graph* g, const gqm_morse* f, char** out) {
  return guarded([&] {
    check_pair(g, f);
    require(out, "null argument");
    *out = duplicate(gqm::format_morse(g->graph, f->function));
    return *out ? GQM_OK : fail(GQM_ERR_INTERNAL, "out of memory");
  });
}

gqm_status gqm_morse_is_valid(const gqm_graph* g, const gqm_morse* f, int* valid) {
  return guarded([&] {
    check_pair(g, f);
    require(valid, "null argument");
    *valid = gqm::validate_morse(g->graph, f->function).valid ? 1 : 0;
    return GQM_OK;
  });
}

gqm_status gqm_morse_critical_counts(const gqm_graph* g, const gqm_morse* f, size_t* c0, size_t* c1) {
  return guarded([&] {
    check_pair(g, f);
    require(c0 && c1, "null argument");
    auto c = gqm::critical_cells(g->graph, f->function);
    *c0 = c.c0();
    *c1 = c.c1();
    return GQM_OK;
  });
}

gqm_status gqm_morse_homology(const gqm_graph* g, const gqm_morse* f, size_t* h0, size_t* h1) {
  return guarded([&] {
    check_pair(g, f);
    require(h0 && h1, "null argument");
    auto mc = gqm::morse_complex(g->graph, f->function);
    *h0 = mc.homology.h0;
    *h1 = mc.homology.h1;
    return GQM_OK;
  });
}

gqm_status gqm_morse_limit_kernel_dims(const gqm_graph* g, const gqm_morse* f, size_t* even, size_t* odd) {
  return guarded([&] {
    check_pair(g, f);
    require(even && odd, "null argument");
    auto k = gqm::limit_kernels(g->graph, f->function);
    *even = k.dim_even();
    *odd = k.dim_odd();
    return GQM_OK;
  });
}

gqm_status gqm_morse_deformed_kernel_dims(const gqm_graph* g, const gqm_morse* f, int64_t base_num, int64_t base_den,
                                          size_t* h0, size_t* h1) {
  return guarded([&] {
    check_pair(g, f);
    require(h0 && h1, "null argument");
    require(base_den != 0, "zero denominator");
    gqm::Rational base(gqm::Integer(static_cast<long>(base_num)), gqm::Integer(static_cast<long>(base_den)));
    base.canonicalize();
    auto b = gqm::deformed_kernel_dims(g->graph, f->function, base);
    *h0 = b.h0;
    *h1 = b.h1;
    return GQM_OK;
  });
}

void gqm_morse_options_init(gqm_morse_options* options) {
  if (options) *options = gqm_morse_options{0, 0, nullptr, 0, 0, 0.0};
}

void gqm_fuzz_options_init(gqm_fuzz_options* options) {
  if (options) *options = gqm_fuzz_options{100, 1, 8, 15, nullptr, 0};
}

gqm_status gqm_report_hodge(const gqm_graph* g, char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&] {
    require(g && json_out, "null argument");
    return emit(gqm::hodge_report(g->graph), json_out);
  });
}

gqm_status gqm_report_morse(const gqm_graph* g, const gqm_morse* f, const gqm_morse_options* options,
                            char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&] {
    check_pair(g, f);
    require(json_out, "null argument");
    gqm::MorseReportOptions o;
    if (options) {
      require(options->s_grid_length == 0 || options->s_grid, "null s grid");
      o.witten = options->witten != 0;
      o.flatten = options->flatten != 0;
      o.s_grid.assign(options->s_grid, options->s_grid + options->s_grid_length);
      if (options->has_cutoff) o.cutoff = options->cutoff;
    }
    return emit(gqm::morse_report(g->graph, f->function, o), json_out);
  });
}

gqm_status gqm_report_tree(const gqm_graph* g, size_t root, char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&] {
    require(g && json_out, "null argument");
    return emit(gqm::tree_report(g->graph, root), json_out);
  });
}

gqm_status gqm_report_walks(const gqm_graph* g, unsigned k, int odd, int oracle, char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&] {
    require(g && json_out, "null argument");
    return emit(gqm::walks_report(g->graph, k, odd != 0, oracle != 0), json_out);
  });
}

gqm_status gqm_report_fuzz(const gqm_fuzz_options* options, char** json_out) {
  if (json_out) *json_out = nullptr;
  return guarded([&] {
    require(json_out, "null argument");
    gqm::FuzzOptions o;
    if (options) {
      o.graphs = options->graphs;
      o.seed = options->seed;
      o.max_vertices = options->max_vertices;
      o.max_edges = options->max_edges;
      if (options->artifact_dir) o.artifact_dir = options->artifact_dir;
      o.inject_fault = options->inject_fault != 0;
    }
    return emit(gqm::fuzz_report(o), json_out);
  });
}

}  // extern "C"
