#include "circ/circ.h"

#include <cstring>
#include <string>

#include "classifier.hpp"
#include "connectivity.hpp"
#include "dirac.hpp"
#include "family.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "oracles.hpp"

struct circ_graph {
  circ::Graph g;
};

struct circ_verdict {
  circ::Verdict v;
};

struct circ_enum {
  circ::LabeledGraphEnumerator en;
};

namespace {

thread_local std::string t_last_error;

circ_status map_status(circ::Status s) {
  using circ::Status;
  switch (s) {
    case Status::ok: return CIRC_OK;
    case Status::null_argument: return CIRC_ERR_NULL_ARGUMENT;
    case Status::loop_edge: return CIRC_ERR_LOOP_EDGE;
    case Status::vertex_out_of_range: return CIRC_ERR_VERTEX_OUT_OF_RANGE;
    case Status::malformed_header: return CIRC_ERR_MALFORMED_HEADER;
    case Status::truncated_bits: return CIRC_ERR_TRUNCATED_BITS;
    case Status::non_ascii_byte: return CIRC_ERR_NON_ASCII_BYTE;
    case Status::too_large: return CIRC_ERR_TOO_LARGE;
    case Status::empty_graph: return CIRC_ERR_EMPTY_GRAPH;
    case Status::bad_parameters: return CIRC_ERR_BAD_PARAMETERS;
    case Status::budget_exceeded: return CIRC_ERR_BUDGET_EXCEEDED;
    case Status::disconnected: return CIRC_ERR_DISCONNECTED;
    case Status::not_two_connected: return CIRC_ERR_NOT_TWO_CONNECTED;
    case Status::no_fan: return CIRC_ERR_NO_FAN;
    case Status::not_on_path: return CIRC_ERR_NOT_ON_PATH;
    case Status::order_violation: return CIRC_ERR_ORDER_VIOLATION;
    case Status::theorem_violation: return CIRC_ERR_THEOREM_VIOLATION;
    case Status::buffer_too_small: return CIRC_ERR_BUFFER_TOO_SMALL;
  }
  return CIRC_ERR_UNKNOWN;
}

template <typename Fn>
circ_status guarded(Fn&& fn) {
  try {
    t_last_error.clear();
    return fn();
  } catch (const circ::Error& e) {
    t_last_error = e.what();
    return map_status(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CIRC_ERR_UNKNOWN;
  }
}

circ_status fill_ids(const std::vector<int>& ids, int32_t* buffer,
                     size_t capacity, size_t* length_out) {
  if (!length_out) return CIRC_ERR_NULL_ARGUMENT;
  *length_out = ids.size();
  if (ids.empty()) return CIRC_OK;
  // null buffer with zero capacity is the size-probing idiom
  if (capacity < ids.size()) return CIRC_ERR_BUFFER_TOO_SMALL;
  if (!buffer) return CIRC_ERR_NULL_ARGUMENT;
  for (size_t i = 0; i < ids.size(); ++i)
    buffer[i] = static_cast<int32_t>(ids[i]);
  return CIRC_OK;
}

circ_status fill_cycle(const std::optional<circ::Cycle>& c, int32_t* buffer,
                       size_t capacity, size_t* length_out) {
  static const std::vector<int> none;
  return fill_ids(c ? c->vertices : none, buffer, capacity, length_out);
}

}  // namespace

extern "C" {

const char* circ_status_name(circ_status status) {
  switch (status) {
    case CIRC_OK: return "ok";
    case CIRC_ERR_NULL_ARGUMENT: return "null_argument";
    case CIRC_ERR_LOOP_EDGE: return "loop_edge";
    case CIRC_ERR_VERTEX_OUT_OF_RANGE: return "vertex_out_of_range";
    case CIRC_ERR_MALFORMED_HEADER: return "malformed_header";
    case CIRC_ERR_TRUNCATED_BITS: return "truncated_bits";
    case CIRC_ERR_NON_ASCII_BYTE: return "non_ascii_byte";
    case CIRC_ERR_TOO_LARGE: return "too_large";
    case CIRC_ERR_EMPTY_GRAPH: return "empty_graph";
    case CIRC_ERR_BAD_PARAMETERS: return "bad_parameters";
    case CIRC_ERR_BUDGET_EXCEEDED: return "budget_exceeded";
    case CIRC_ERR_DISCONNECTED: return "disconnected";
    case CIRC_ERR_NOT_TWO_CONNECTED: return "not_two_connected";
    case CIRC_ERR_NO_FAN: return "no_fan";
    case CIRC_ERR_NOT_ON_PATH: return "not_on_path";
    case CIRC_ERR_ORDER_VIOLATION: return "order_violation";
    case CIRC_ERR_THEOREM_VIOLATION: return "theorem_violation";
    case CIRC_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case CIRC_ERR_UNKNOWN: return "unknown";
  }
  return "unknown";
}

const char* circ_version(void) { return "0.1.0"; }

const char* circ_last_error(void) { return t_last_error.c_str(); }

circ_status circ_graph_parse_g6(const char* line, circ_graph** out) {
  if (!line || !out) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *out = new circ_graph{circ::parse_graph6(line)};
    return CIRC_OK;
  });
}

circ_status circ_graph_from_edges(int32_t order, const int32_t* endpoints,
                                  int32_t edge_count, circ_graph** out) {
  if (!out || (edge_count > 0 && !endpoints)) return CIRC_ERR_NULL_ARGUMENT;
  if (edge_count < 0) return CIRC_ERR_BAD_PARAMETERS;
  return guarded([&] {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(edge_count));
    for (int32_t i = 0; i < edge_count; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new circ_graph{circ::Graph::from_edge_list(order, edges)};
    return CIRC_OK;
  });
}

circ_status circ_graph_join_family(int32_t delta, int32_t m,
                                   const char* inner_policy, uint64_t seed,
                                   circ_graph** out) {
  if (!out || !inner_policy) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&]() -> circ_status {
    circ::InnerPolicy policy;
    if (std::strcmp(inner_policy, "empty") == 0)
      policy = circ::InnerPolicy::empty;
    else if (std::strcmp(inner_policy, "complete") == 0)
      policy = circ::InnerPolicy::complete;
    else if (std::strcmp(inner_policy, "random") == 0)
      policy = circ::InnerPolicy::random;
    else
      return CIRC_ERR_BAD_PARAMETERS;
    *out = new circ_graph{circ::gen_join_family(delta, m, policy, seed)};
    return CIRC_OK;
  });
}

void circ_graph_free(circ_graph* g) { delete g; }

int32_t circ_graph_order(const circ_graph* g) {
  return g ? g->g.order() : -1;
}

int32_t circ_graph_edge_count(const circ_graph* g) {
  return g ? g->g.edge_count() : -1;
}

int32_t circ_graph_degree(const circ_graph* g, int32_t v) {
  if (!g || v < 0 || v >= g->g.order()) return -1;
  return g->g.degree(v);
}

int32_t circ_graph_min_degree(const circ_graph* g) {
  if (!g || g->g.order() == 0) return -1;
  return g->g.min_degree();
}

int32_t circ_graph_has_edge(const circ_graph* g, int32_t u, int32_t v) {
  if (!g || u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order())
    return -1;
  return g->g.has_edge(u, v) ? 1 : 0;
}

int32_t circ_graph_is_two_connected(const circ_graph* g) {
  return g ? (circ::is_two_connected(g->g) ? 1 : 0) : -1;
}

circ_status circ_graph_encode_g6(const circ_graph* g, char* buffer,
                                 size_t capacity, size_t* length_out) {
  if (!g || !length_out) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&]() -> circ_status {
    std::string line = circ::encode_graph6(g->g);
    *length_out = line.size();
    if (!buffer || capacity < line.size() + 1)
      return CIRC_ERR_BUFFER_TOO_SMALL;
    std::memcpy(buffer, line.c_str(), line.size() + 1);
    return CIRC_OK;
  });
}

circ_status circ_longest_cycle(const circ_graph* g, int32_t* cycle,
                               size_t capacity, size_t* length_out) {
  if (!g) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    return fill_cycle(circ::longest_cycle_exact(g->g), cycle, capacity,
                      length_out);
  });
}

circ_status circ_hamilton_cycle(const circ_graph* g, int32_t* cycle,
                                size_t capacity, size_t* length_out) {
  if (!g) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    return fill_cycle(circ::hamilton_cycle_exact(g->g), cycle, capacity,
                      length_out);
  });
}

circ_status circ_dirac_cycle(const circ_graph* g, int32_t* cycle,
                             size_t capacity, size_t* length_out) {
  if (!g) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    return fill_ids(circ::dirac_cycle(g->g).vertices, cycle, capacity,
                    length_out);
  });
}

circ_status circ_classify(const circ_graph* g, circ_engine engine,
                          circ_verdict** out) {
  return circ_classify_with_budget(g, engine, 0, out);
}

circ_status circ_classify_with_budget(const circ_graph* g, circ_engine engine,
                                      int64_t search_budget,
                                      circ_verdict** out) {
  if (!g || !out) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    circ::EngineOptions opts;
    if (search_budget > 0) opts.search_budget = search_budget;
    circ::Verdict v = engine == CIRC_ENGINE_PROOF
                          ? circ::classify_via_proof(g->g, opts)
                          : circ::classify(g->g);
    *out = new circ_verdict{std::move(v)};
    return CIRC_OK;
  });
}

void circ_verdict_free(circ_verdict* v) { delete v; }

circ_verdict_tag circ_verdict_kind(const circ_verdict* v) {
  switch (v->v.tag) {
    case circ::VerdictTag::hamiltonian: return CIRC_VERDICT_HAMILTONIAN;
    case circ::VerdictTag::long_cycle: return CIRC_VERDICT_LONG_CYCLE;
    case circ::VerdictTag::join_structure: return CIRC_VERDICT_JOIN_STRUCTURE;
  }
  return CIRC_VERDICT_HAMILTONIAN;
}

circ_engine circ_verdict_engine(const circ_verdict* v) {
  return v->v.engine == circ::EngineKind::proof ? CIRC_ENGINE_PROOF
                                                : CIRC_ENGINE_ORACLE;
}

circ_status circ_verdict_cycle(const circ_verdict* v, int32_t* buffer,
                               size_t capacity, size_t* length_out) {
  if (!v) return CIRC_ERR_NULL_ARGUMENT;
  return fill_cycle(v->v.cycle, buffer, capacity, length_out);
}

circ_status circ_verdict_hub(const circ_verdict* v, int32_t* buffer,
                             size_t capacity, size_t* length_out) {
  if (!v) return CIRC_ERR_NULL_ARGUMENT;
  static const std::vector<int> none;
  return fill_ids(v->v.certificate ? v->v.certificate->hub : none, buffer,
                  capacity, length_out);
}

circ_status circ_verdict_independent(const circ_verdict* v, int32_t* buffer,
                                     size_t capacity, size_t* length_out) {
  if (!v) return CIRC_ERR_NULL_ARGUMENT;
  static const std::vector<int> none;
  return fill_ids(v->v.certificate ? v->v.certificate->independent : none,
                  buffer, capacity, length_out);
}

int32_t circ_verify_verdict(const circ_graph* g, const circ_verdict* v) {
  if (!g || !v) return -1;
  return circ::verify_verdict(g->g, v->v) ? 1 : 0;
}

circ_status circ_check_characterization(const circ_graph* g,
                                        int32_t* holds_out) {
  if (!g || !holds_out) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *holds_out = circ::check_characterization(g->g) ? 1 : 0;
    return CIRC_OK;
  });
}

circ_status circ_enum_total(int32_t order, uint64_t* total_out) {
  if (!total_out) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *total_out = circ::LabeledGraphEnumerator::total(order);
    return CIRC_OK;
  });
}

circ_status circ_enum_new(int32_t order, uint64_t begin, uint64_t end,
                          circ_enum** out) {
  if (!out) return CIRC_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *out = new circ_enum{circ::LabeledGraphEnumerator(order, begin, end)};
    return CIRC_OK;
  });
}

int32_t circ_enum_next(circ_enum* e, circ_graph** out) {
  if (!e || !out) return -1;
  try {
    circ::Graph g;
    if (!e->en.next(g)) return 0;
    *out = new circ_graph{std::move(g)};
    return 1;
  } catch (const std::exception& ex) {
    t_last_error = ex.what();
    return -1;
  }
}

void circ_enum_free(circ_enum* e) { delete e; }

}  // extern "C"
