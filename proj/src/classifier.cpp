#include "classifier.hpp"

#include <algorithm>

#include "connectivity.hpp"
#include "dirac.hpp"
#include "graph6.hpp"
#include "oracles.hpp"

namespace circ {

const char* verdict_tag_name(VerdictTag t) {
  switch (t) {
    case VerdictTag::hamiltonian: return "hamiltonian";
    case VerdictTag::long_cycle: return "long_cycle";
    case VerdictTag::join_structure: return "join_structure";
  }
  return "unknown";
}

const char* engine_kind_name(EngineKind e) {
  return e == EngineKind::oracle ? "oracle" : "proof";
}

std::optional<JoinCertificate> recognize_join(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  int delta = g.min_degree();
  JoinCertificate cert;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > delta)
      cert.hub.push_back(v);
    else
      cert.independent.push_back(v);
  }
  if (cert.hub_size() != delta) return std::nullopt;
  if (!cert.validate(g)) return std::nullopt;
  return cert;
}

StructureOutcome improve_or_structure(const Graph& g, const Cycle& c,
                                      const EngineOptions& opts) {
  if (!c.validate(g))
    fail(Status::bad_parameters, "improve_or_structure needs a valid cycle");
  if (c.length() != 2 * g.min_degree())
    fail(Status::bad_parameters,
         "improve_or_structure expects a cycle of length exactly 2*delta");
  EngineOutcome round = engine_round(g, c, /*allow_structure=*/true, opts);
  StructureOutcome out;
  out.longer = std::move(round.improved);
  out.certificate = std::move(round.certificate);
  out.frame = std::move(round.frame);
  out.oracle_assisted = round.oracle_assisted;
  return out;
}

namespace {

void require_two_connected(const Graph& g) {
  if (!is_two_connected(g))
    fail(Status::not_two_connected,
         "classification is defined for 2-connected graphs on >= 3 vertices");
}

Verdict hamiltonian_verdict(Cycle c, EngineKind engine) {
  c.canonicalize();
  Verdict v;
  v.tag = VerdictTag::hamiltonian;
  v.cycle = std::move(c);
  v.engine = engine;
  return v;
}

Verdict long_cycle_verdict(Cycle c, EngineKind engine) {
  c.canonicalize();
  Verdict v;
  v.tag = VerdictTag::long_cycle;
  v.cycle = std::move(c);
  v.engine = engine;
  return v;
}

Verdict join_verdict(JoinCertificate cert, EngineKind engine) {
  Verdict v;
  v.tag = VerdictTag::join_structure;
  v.certificate = std::move(cert);
  v.engine = engine;
  return v;
}

[[noreturn]] void report_violation(const Graph& g, const char* what) {
  fail(Status::theorem_violation,
       std::string(what) + " [graph6 " + encode_graph6(g) + "]");
}

}  // namespace

Verdict classify(const Graph& g) {
  require_two_connected(g);
  if (auto h = hamilton_cycle_exact(g))
    return hamiltonian_verdict(std::move(*h), EngineKind::oracle);
  std::optional<Cycle> c = longest_cycle_exact(g);
  if (!c) report_violation(g, "2-connected graph came back acyclic");
  int delta = g.min_degree();
  if (c->length() >= 2 * delta + 1)
    return long_cycle_verdict(std::move(*c), EngineKind::oracle);
  if (g.order() < 2 * delta + 1)
    report_violation(g, "non-Hamiltonian graph on fewer than 2*delta+1 vertices");
  if (auto cert = recognize_join(g))
    return join_verdict(std::move(*cert), EngineKind::oracle);
  report_violation(g, "short circumference but no join structure");
}

Verdict classify_via_proof(const Graph& g, const EngineOptions& opts) {
  require_two_connected(g);
  if (auto h = hamilton_cycle_exact(g))
    return hamiltonian_verdict(std::move(*h), EngineKind::proof);
  int delta = g.min_degree();
  try {
    Cycle c = dirac_cycle(g, opts);
    bool assisted = false;
    while (c.length() <= 2 * delta) {
      if (c.length() < 2 * delta)
        report_violation(g, "degree-bound cycle shorter than 2*delta");
      StructureOutcome step = improve_or_structure(g, c, opts);
      assisted = assisted || step.oracle_assisted;
      if (step.certificate)
        return join_verdict(std::move(*step.certificate),
                            assisted ? EngineKind::oracle : EngineKind::proof);
      c = std::move(*step.longer);
    }
    return long_cycle_verdict(std::move(c),
                              assisted ? EngineKind::oracle : EngineKind::proof);
  } catch (const Error& e) {
    if (e.code() != Status::budget_exceeded) throw;
    Verdict v = classify(g);  // search budget ran out; the oracles decide
    v.engine = EngineKind::oracle;
    return v;
  }
}

bool verify_verdict(const Graph& g, const Verdict& v) {
  switch (v.tag) {
    case VerdictTag::hamiltonian:
      return v.cycle && v.cycle->validate(g) &&
             v.cycle->length() == g.order();
    case VerdictTag::long_cycle:
      return v.cycle && g.order() > 0 && v.cycle->validate(g) &&
             v.cycle->length() >= 2 * g.min_degree() + 1;
    case VerdictTag::join_structure:
      return v.certificate && v.certificate->validate(g);
  }
  return false;
}

bool check_characterization(const Graph& g) {
  require_two_connected(g);
  int delta = g.min_degree();
  if (g.order() < 2 * delta + 1)
    fail(Status::bad_parameters,
         "the biconditional needs n >= 2*delta + 1");
  std::optional<Cycle> c = longest_cycle_exact(g);
  bool short_circumference = !c || c->length() <= 2 * delta;
  return short_circumference == recognize_join(g).has_value();
}

}  // namespace circ
