// circ: batch classification, theorem sweeps, instance generation and
// oracle queries over graph6 corpora. Talks to the library through the
// public C API only; all output is JSONL (or one JSON report).

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "circ/circ.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolation = 2;

struct GraphHandle {
  circ_graph* g = nullptr;
  GraphHandle() = default;
  explicit GraphHandle(circ_graph* g) : g(g) {}
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  GraphHandle(GraphHandle&& o) noexcept : g(o.g) { o.g = nullptr; }
  ~GraphHandle() { circ_graph_free(g); }
  explicit operator bool() const { return g != nullptr; }
};

struct VerdictHandle {
  circ_verdict* v = nullptr;
  ~VerdictHandle() { circ_verdict_free(v); }
};

struct InputLine {
  std::size_t number = 0;
  std::string text;
};

// Keeps original line numbers; drops blank lines and the optional
// ">>graph6<<" file marker.
std::vector<InputLine> read_graph_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<InputLine> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string marker = ">>graph6<<";
    if (line.rfind(marker, 0) == 0) line = line.substr(marker.size());
    if (line.empty()) continue;
    lines.push_back({number, line});
  }
  return lines;
}

void write_lines(const std::vector<std::string>& lines,
                 const std::string& path) {
  if (path.empty() || path == "-") {
    for (const auto& l : lines) std::cout << l << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  for (const auto& l : lines) out << l << '\n';
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  int spawn = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(jobs), count));
  workers.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn; ++t)
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  for (auto& w : workers) w.join();
}

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string encode_handle(const circ_graph* g) {
  char buf[80];
  std::size_t len = 0;
  if (circ_graph_encode_g6(g, buf, sizeof buf, &len) != CIRC_OK) return {};
  return std::string(buf, len);
}

json cycle_payload(const circ_verdict* v) {
  int32_t buf[64];
  std::size_t len = 0;
  circ_verdict_cycle(v, buf, 64, &len);
  json cycle = json::array();
  for (std::size_t i = 0; i < len; ++i) cycle.push_back(buf[i]);
  return json{{"cycle", cycle}};
}

json join_payload(const circ_verdict* v) {
  int32_t buf[64];
  std::size_t len = 0;
  json hub = json::array();
  circ_verdict_hub(v, buf, 64, &len);
  for (std::size_t i = 0; i < len; ++i) hub.push_back(buf[i]);
  json ind = json::array();
  circ_verdict_independent(v, buf, 64, &len);
  for (std::size_t i = 0; i < len; ++i) ind.push_back(buf[i]);
  return json{{"hub", hub}, {"independent", ind}};
}

const char* tag_name(circ_verdict_tag t) {
  switch (t) {
    case CIRC_VERDICT_HAMILTONIAN: return "hamiltonian";
    case CIRC_VERDICT_LONG_CYCLE: return "long_cycle";
    case CIRC_VERDICT_JOIN_STRUCTURE: return "join_structure";
  }
  return "unknown";
}

// ---- classify -----------------------------------------------------

int run_classify(const std::string& input, const std::string& engine_name,
                 std::int64_t search_budget, const std::string& output,
                 int jobs) {
  circ_engine engine =
      engine_name == "proof" ? CIRC_ENGINE_PROOF : CIRC_ENGINE_ORACLE;
  std::vector<InputLine> lines = read_graph_lines(input);
  std::vector<std::string> records(lines.size());
  std::atomic<int> severity{kExitOk};

  parallel_for(lines.size(), jobs, [&](std::size_t i) {
    const std::string& line = lines[i].text;
    json rec;
    rec["line"] = lines[i].number;
    rec["graph6"] = line;
    circ_graph* raw = nullptr;
    circ_status st = circ_graph_parse_g6(line.c_str(), &raw);
    GraphHandle g(raw);
    if (st != CIRC_OK) {
      rec["error"] = circ_status_name(st);
      severity.store(std::max(severity.load(), kExitInputError));
      records[i] = rec.dump();
      return;
    }
    rec["n"] = circ_graph_order(g.g);
    rec["delta"] = circ_graph_min_degree(g.g);
    VerdictHandle v;
    st = circ_classify_with_budget(g.g, engine, search_budget, &v.v);
    if (st != CIRC_OK) {
      rec["error"] = circ_status_name(st);
      int sev = st == CIRC_ERR_THEOREM_VIOLATION ? kExitViolation
                                                 : kExitInputError;
      severity.store(std::max(severity.load(), sev));
      records[i] = rec.dump();
      return;
    }
    circ_verdict_tag tag = circ_verdict_kind(v.v);
    rec["verdict"] = tag_name(tag);
    rec["certificate"] = tag == CIRC_VERDICT_JOIN_STRUCTURE
                             ? join_payload(v.v)
                             : cycle_payload(v.v);
    int verified = circ_verify_verdict(g.g, v.v);
    rec["verified"] = verified == 1;
    rec["engine"] =
        circ_verdict_engine(v.v) == CIRC_ENGINE_PROOF ? "proof" : "oracle";
    if (verified != 1)
      severity.store(std::max(severity.load(), kExitViolation));
    records[i] = rec.dump();
  });

  write_lines(records, output);
  return severity.load();
}

// ---- verify-theorem ------------------------------------------------

struct SweepStats {
  std::uint64_t graphs = 0;
  std::uint64_t two_connected = 0;
  std::map<std::string, std::uint64_t> verdicts;
  std::vector<json> counterexamples;

  void merge(const SweepStats& o) {
    graphs += o.graphs;
    two_connected += o.two_connected;
    for (auto& [k, n] : o.verdicts) verdicts[k] += n;
    for (auto& c : o.counterexamples)
      if (counterexamples.size() < 32) counterexamples.push_back(c);
  }
};

// The full per-graph battery: classify with both engines, independent
// re-verification, tag agreement, the non-Hamiltonian implication, and
// the biconditional where it applies.
void check_graph(const circ_graph* g, SweepStats& stats) {
  stats.two_connected += 1;
  std::string code = encode_handle(g);
  auto blame = [&](const char* why) {
    json c;
    c["graph6"] = code;
    c["reason"] = why;
    if (stats.counterexamples.size() < 32)
      stats.counterexamples.push_back(c);
  };

  VerdictHandle oracle;
  if (circ_classify(g, CIRC_ENGINE_ORACLE, &oracle.v) != CIRC_OK) {
    blame("oracle classification failed");
    return;
  }
  if (circ_verify_verdict(g, oracle.v) != 1) {
    blame("oracle certificate failed verification");
    return;
  }
  VerdictHandle proof;
  if (circ_classify(g, CIRC_ENGINE_PROOF, &proof.v) != CIRC_OK) {
    blame("proof classification failed");
    return;
  }
  if (circ_verify_verdict(g, proof.v) != 1) {
    blame("proof certificate failed verification");
    return;
  }
  if (circ_verdict_kind(oracle.v) != circ_verdict_kind(proof.v)) {
    blame("engine verdicts disagree");
    return;
  }

  int32_t buf[64];
  std::size_t ham_len = 0;
  if (circ_hamilton_cycle(g, buf, 64, &ham_len) != CIRC_OK) {
    blame("hamilton oracle failed");
    return;
  }
  int delta = circ_graph_min_degree(g);
  if (ham_len == 0) {
    std::size_t circ_len = 0;
    if (circ_longest_cycle(g, buf, 64, &circ_len) != CIRC_OK) {
      blame("longest-cycle oracle failed");
      return;
    }
    if (circ_len <= static_cast<std::size_t>(2 * delta) &&
        circ_verdict_kind(oracle.v) != CIRC_VERDICT_JOIN_STRUCTURE) {
      blame("short circumference without join structure");
      return;
    }
    if (circ_graph_order(g) < 2 * delta + 1) {
      blame("non-Hamiltonian graph below 2*delta+1 vertices");
      return;
    }
  }
  if (circ_graph_order(g) >= 2 * delta + 1) {
    int32_t holds = 0;
    if (circ_check_characterization(g, &holds) != CIRC_OK || holds != 1) {
      blame("biconditional failed");
      return;
    }
  }
  stats.verdicts[tag_name(circ_verdict_kind(oracle.v))] += 1;
}

int run_verify_theorem(int max_n, const std::string& source,
                       const std::string& input, const std::string& report,
                       int jobs) {
  SweepStats total;
  std::mutex merge_mu;

  if (source == "enumerate") {
    for (int n = 3; n <= max_n; ++n) {
      std::uint64_t space = 0;
      if (circ_enum_total(n, &space) != CIRC_OK)
        throw std::runtime_error("enumeration budget exceeded");
      std::uint64_t chunks =
          std::min<std::uint64_t>(space, static_cast<std::uint64_t>(
                                             std::max(jobs, 1) * 8));
      std::uint64_t step = (space + chunks - 1) / chunks;
      parallel_for(static_cast<std::size_t>(chunks), jobs,
                   [&](std::size_t idx) {
                     std::uint64_t begin = idx * step;
                     std::uint64_t end = std::min(space, begin + step);
                     if (begin >= end) return;
                     SweepStats local;
                     circ_enum* e = nullptr;
                     if (circ_enum_new(n, begin, end, &e) != CIRC_OK) return;
                     circ_graph* raw = nullptr;
                     while (circ_enum_next(e, &raw) == 1) {
                       GraphHandle g(raw);
                       local.graphs += 1;
                       if (circ_graph_is_two_connected(g.g) == 1)
                         check_graph(g.g, local);
                     }
                     circ_enum_free(e);
                     std::lock_guard<std::mutex> lock(merge_mu);
                     total.merge(local);
                   });
    }
  } else {
    std::vector<InputLine> lines = read_graph_lines(input);
    std::vector<SweepStats> locals(lines.size());
    parallel_for(lines.size(), jobs, [&](std::size_t i) {
      circ_graph* raw = nullptr;
      if (circ_graph_parse_g6(lines[i].text.c_str(), &raw) != CIRC_OK) {
        json c;
        c["graph6"] = lines[i].text;
        c["reason"] = "parse error";
        locals[i].counterexamples.push_back(c);
        return;
      }
      GraphHandle g(raw);
      locals[i].graphs += 1;
      if (circ_graph_is_two_connected(g.g) == 1) check_graph(g.g, locals[i]);
    });
    for (auto& l : locals) total.merge(l);
  }

  json rep;
  rep["source"] = source;
  rep["max_n"] = max_n;
  rep["graphs_seen"] = total.graphs;
  rep["two_connected"] = total.two_connected;
  json verdicts = json::object();
  for (auto& [k, v] : total.verdicts) verdicts[k] = v;
  rep["verdicts"] = verdicts;
  rep["violations"] = total.counterexamples.size();
  rep["counterexamples"] = total.counterexamples;
  write_lines({rep.dump(2)}, report);
  return total.counterexamples.empty() ? kExitOk : kExitViolation;
}

// ---- generate -------------------------------------------------------

int run_generate(const std::string& family, int delta, int m,
                 const std::string& inner, int count, std::uint64_t seed,
                 const std::string& output) {
  if (family != "join") {
    std::cerr << "unknown family: " << family << "\n";
    return kExitInputError;
  }
  std::vector<std::string> lines;
  for (int i = 0; i < count; ++i) {
    circ_graph* raw = nullptr;
    circ_status st = circ_graph_join_family(delta, m, inner.c_str(),
                                            seed + static_cast<std::uint64_t>(i),
                                            &raw);
    if (st != CIRC_OK) {
      std::cerr << "generate failed: " << circ_status_name(st) << "\n";
      return kExitInputError;
    }
    GraphHandle g(raw);
    lines.push_back(encode_handle(g.g));
  }
  write_lines(lines, output);
  return kExitOk;
}

// ---- oracle ---------------------------------------------------------

int run_oracle(const std::string& input, const std::string& query,
               const std::string& output, int jobs) {
  std::vector<InputLine> lines = read_graph_lines(input);
  std::vector<std::string> records(lines.size());
  std::atomic<int> severity{kExitOk};

  parallel_for(lines.size(), jobs, [&](std::size_t i) {
    const std::string& line = lines[i].text;
    json rec;
    rec["line"] = lines[i].number;
    rec["graph6"] = line;
    circ_graph* raw = nullptr;
    circ_status st = circ_graph_parse_g6(line.c_str(), &raw);
    GraphHandle g(raw);
    if (st != CIRC_OK) {
      rec["error"] = circ_status_name(st);
      severity.store(std::max(severity.load(), kExitInputError));
      records[i] = rec.dump();
      return;
    }
    rec["n"] = circ_graph_order(g.g);
    rec["query"] = query;
    int32_t buf[64];
    std::size_t len = 0;
    if (query == "circumference")
      st = circ_longest_cycle(g.g, buf, 64, &len);
    else if (query == "hamilton")
      st = circ_hamilton_cycle(g.g, buf, 64, &len);
    else
      st = circ_dirac_cycle(g.g, buf, 64, &len);
    if (st != CIRC_OK) {
      rec["error"] = circ_status_name(st);
      severity.store(std::max(severity.load(), kExitInputError));
      records[i] = rec.dump();
      return;
    }
    rec["length"] = len;
    json cycle = json::array();
    for (std::size_t k = 0; k < len; ++k) cycle.push_back(buf[k]);
    rec["cycle"] = cycle;
    records[i] = rec.dump();
  });

  write_lines(records, output);
  return severity.load();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certifying circumference classifier"};
  app.set_version_flag("--version", circ_version());
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (default: cores)")
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "classify graph6 lines");
  std::string cls_input, cls_engine = "oracle", cls_output;
  std::int64_t cls_budget = 0;
  classify->add_option("input", cls_input, "graph6 file, one line per graph")
      ->required();
  classify->add_option("--engine", cls_engine, "oracle | proof")
      ->check(CLI::IsMember({"oracle", "proof"}));
  classify->add_option("--search-budget", cls_budget,
                       "proof-engine path search nodes (0 = default)");
  classify->add_option("--output", cls_output, "JSONL output path (default stdout)");

  auto* verify = app.add_subcommand(
      "verify-theorem", "sweep graphs and check every classification claim");
  int max_n = 7;
  std::string src = "enumerate", vt_input, vt_report;
  verify->add_option("--max-n", max_n, "largest order to enumerate (<= 7)");
  verify->add_option("--source", src, "enumerate | file")
      ->check(CLI::IsMember({"enumerate", "file"}));
  verify->add_option("--input", vt_input, "graph6 file when --source file");
  verify->add_option("--report", vt_report, "JSON report path (default stdout)");

  auto* generate = app.add_subcommand("generate", "emit join-family instances");
  std::string family = "join", inner = "empty", gen_output;
  int delta = 2, m = 3, count = 1;
  std::uint64_t seed = 0;
  generate->add_option("--family", family, "instance family (join)");
  generate->add_option("--delta", delta, "hub size")->required();
  generate->add_option("--m", m, "independent part size")->required();
  generate->add_option("--inner", inner, "hub edges: empty | complete | random")
      ->check(CLI::IsMember({"empty", "complete", "random"}));
  generate->add_option("--count", count, "instances to emit");
  generate->add_option("--seed", seed, "seed for random hub edges");
  generate->add_option("--output", gen_output, "output path (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "exact cycle queries");
  std::string orc_input, orc_query = "circumference", orc_output;
  oracle->add_option("input", orc_input, "graph6 file")->required();
  oracle->add_option("--query", orc_query, "circumference | hamilton | dirac")
      ->check(CLI::IsMember({"circumference", "hamilton", "dirac"}));
  oracle->add_option("--output", orc_output, "JSONL output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed())
      return run_classify(cls_input, cls_engine, cls_budget, cls_output, jobs);
    if (verify->parsed()) {
      if (src == "file" && vt_input.empty()) {
        std::cerr << "--source file needs --input\n";
        return kExitInputError;
      }
      if (src == "enumerate" && (max_n < 3 || max_n > 7)) {
        std::cerr << "--max-n must be in [3, 7]\n";
        return kExitInputError;
      }
      return run_verify_theorem(max_n, src, vt_input, vt_report, jobs);
    }
    if (generate->parsed())
      return run_generate(family, delta, m, inner, count, seed, gen_output);
    if (oracle->parsed())
      return run_oracle(orc_input, orc_query, orc_output, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
