#pragma once

#include <optional>

#include "engine.hpp"
#include "graph.hpp"
#include "paths.hpp"

namespace circ {

enum class VerdictTag { hamiltonian, long_cycle, join_structure };
enum class EngineKind { oracle, proof };

const char* verdict_tag_name(VerdictTag t);
const char* engine_kind_name(EngineKind e);

/// One of: a spanning cycle, a cycle of length >= 2*min_degree + 1, or
/// a join certificate. The engine field records how it was derived.
struct Verdict {
  VerdictTag tag = VerdictTag::hamiltonian;
  std::optional<Cycle> cycle;
  std::optional<JoinCertificate> certificate;
  EngineKind engine = EngineKind::oracle;
};

/// Degree-split recognizer: hub = vertices of degree above the minimum,
/// independent = vertices at the minimum. Returns the certificate only
/// when every certificate condition holds; total, never throws.
std::optional<JoinCertificate> recognize_join(const Graph& g);

struct StructureOutcome {
  std::optional<Cycle> longer;
  std::optional<JoinCertificate> certificate;
  std::optional<AttachmentFrame> frame;
  bool oracle_assisted = false;
};

/// One engine round on a cycle of length exactly 2*min_degree of a
/// 2-connected non-Hamiltonian graph: either a strictly longer cycle or
/// the extremal join structure with its witnessing frame.
StructureOutcome improve_or_structure(const Graph& g, const Cycle& c,
                                      const EngineOptions& opts = {});

/// Oracle-backed classification: Hamilton DP, then the exact longest
/// cycle, then the join recognizer. Precedence is fixed in that order.
Verdict classify(const Graph& g);

/// Proof-driven classification: Hamilton check, then the constructive
/// degree-bound cycle, then improve-or-structure rounds. Falls back to
/// classify (and says so in the engine field) if the path search
/// budget runs out.
Verdict classify_via_proof(const Graph& g, const EngineOptions& opts = {});

/// Independent certificate check using only adjacency queries.
bool verify_verdict(const Graph& g, const Verdict& v);

/// The biconditional: circumference <= 2*min_degree holds exactly when
/// the join recognizer succeeds. Requires 2-connectivity and
/// n >= 2*min_degree + 1.
bool check_characterization(const Graph& g);

}  // namespace circ
