// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [fixtures-dir]

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "classifier.hpp"
#include "connectivity.hpp"
#include "dirac.hpp"
#include "family.hpp"
#include "graph6.hpp"
#include "naive_oracles.hpp"
#include "oracles.hpp"

using namespace circ;

namespace {

int g_failures = 0;
int g_index = 0;

void report(const std::string& name, bool pass, const std::string& details) {
  ++g_index;
  std::printf("[%d/9] %-38s %s  (%s)\n", g_index, name.c_str(),
              pass ? "PASS" : "FAIL", details.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Fn>
void parallel_chunks(std::uint64_t space, Fn&& fn) {
  int workers = worker_count();
  std::uint64_t chunks = std::min<std::uint64_t>(
      space, static_cast<std::uint64_t>(workers) * 8);
  if (chunks == 0) return;
  std::uint64_t step = (space + chunks - 1) / chunks;
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::uint64_t i; (i = next.fetch_add(1)) < chunks;) {
        std::uint64_t begin = i * step;
        std::uint64_t end = std::min(space, begin + step);
        if (begin < end) fn(begin, end);
      }
    });
  for (auto& th : pool) th.join();
}

struct SweepTally {
  std::uint64_t two_connected = 0;
  std::uint64_t hamiltonian = 0;
  std::uint64_t long_cycle = 0;
  std::uint64_t join_structure = 0;
  std::uint64_t verdict_failures = 0;
  std::uint64_t join_misses = 0;
  std::uint64_t bound_failures = 0;
  std::uint64_t corollary_failures = 0;
  std::uint64_t corollary_checked = 0;
  std::uint64_t tag_disagreements = 0;
  std::vector<std::string> examples;

  void merge(const SweepTally& o) {
    two_connected += o.two_connected;
    hamiltonian += o.hamiltonian;
    long_cycle += o.long_cycle;
    join_structure += o.join_structure;
    verdict_failures += o.verdict_failures;
    join_misses += o.join_misses;
    bound_failures += o.bound_failures;
    corollary_failures += o.corollary_failures;
    corollary_checked += o.corollary_checked;
    tag_disagreements += o.tag_disagreements;
    for (const auto& e : o.examples)
      if (examples.size() < 8) examples.push_back(e);
  }
};

void sweep_graph(const Graph& g, SweepTally& t) {
  t.two_connected += 1;
  int delta = g.min_degree();
  auto blame = [&](const char* why) {
    if (t.examples.size() < 8)
      t.examples.push_back(encode_graph6(g) + ": " + why);
  };

  Verdict via_oracle;
  try {
    via_oracle = classify(g);
  } catch (const Error& e) {
    t.verdict_failures += 1;
    blame(e.what());
    return;
  }
  switch (via_oracle.tag) {
    case VerdictTag::hamiltonian: t.hamiltonian += 1; break;
    case VerdictTag::long_cycle: t.long_cycle += 1; break;
    case VerdictTag::join_structure: t.join_structure += 1; break;
  }
  if (!verify_verdict(g, via_oracle)) {
    t.verdict_failures += 1;
    blame("certificate failed independent verification");
  }

  auto ham = hamilton_cycle_exact(g);
  if (!ham) {
    auto longest = longest_cycle_exact(g);
    if (longest && longest->length() <= 2 * delta &&
        (via_oracle.tag != VerdictTag::join_structure ||
         !via_oracle.certificate ||
         via_oracle.certificate->independent_size() <= delta)) {
      t.join_misses += 1;
      blame("short circumference without a join certificate");
    }
  }

  try {
    Verdict via_proof = classify_via_proof(g);
    if (via_proof.tag != via_oracle.tag) {
      t.tag_disagreements += 1;
      blame("engines disagree on the verdict tag");
    } else if (!verify_verdict(g, via_proof)) {
      t.verdict_failures += 1;
      blame("proof-engine certificate failed verification");
    }
  } catch (const Error& e) {
    t.tag_disagreements += 1;
    blame(e.what());
  }

  try {
    Cycle d = dirac_cycle(g);
    if (!d.validate(g) ||
        d.length() < std::min(g.order(), 2 * delta))
      t.bound_failures += 1;
  } catch (const Error&) {
    t.bound_failures += 1;
    blame("degree-bound construction threw");
  }

  if (g.order() >= 2 * delta + 1) {
    t.corollary_checked += 1;
    try {
      if (!check_characterization(g)) {
        t.corollary_failures += 1;
        blame("biconditional failed");
      }
    } catch (const Error&) {
      t.corollary_failures += 1;
    }
  }
}

SweepTally run_sweep(int max_n) {
  SweepTally total;
  std::mutex mu;
  for (int n = 3; n <= max_n; ++n) {
    std::uint64_t space = LabeledGraphEnumerator::total(n);
    parallel_chunks(space, [&](std::uint64_t begin, std::uint64_t end) {
      SweepTally local;
      LabeledGraphEnumerator en(n, begin, end);
      Graph g;
      while (en.next(g))
        if (is_two_connected(g)) sweep_graph(g, local);
      std::lock_guard<std::mutex> lock(mu);
      total.merge(local);
    });
  }
  return total;
}

std::vector<Graph> load_fixture(const std::string& path,
                                std::string& problem) {
  std::vector<Graph> graphs;
  std::ifstream in(path);
  if (!in) {
    problem = "cannot open " + path;
    return graphs;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Error& e) {
      problem = path + ": " + e.what();
      return graphs;
    }
  }
  return graphs;
}

// --- criteria ------------------------------------------------------

void criterion_theorem2(const SweepTally& t) {
  bool pass = t.verdict_failures == 0 && t.join_misses == 0;
  std::ostringstream d;
  d << t.two_connected << " graphs, ham " << t.hamiltonian << ", long "
    << t.long_cycle << ", join " << t.join_structure;
  if (!pass && !t.examples.empty()) d << "; e.g. " << t.examples.front();
  report("exhaustive classification sweep n<=7", pass, d.str());
}

void criterion_dirac(const SweepTally& t, const std::string& fixtures) {
  std::uint64_t failures = t.bound_failures;
  std::uint64_t fixture_count = 0;
  std::string problem;
  for (const char* name : {"two_connected_n8.g6", "two_connected_n9.g6"}) {
    auto graphs = load_fixture(fixtures + "/" + name, problem);
    if (!problem.empty()) break;
    for (const Graph& g : graphs) {
      ++fixture_count;
      try {
        Cycle c = dirac_cycle(g);
        if (!c.validate(g) ||
            c.length() < std::min(g.order(), 2 * g.min_degree()))
          ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  bool pass = failures == 0 && problem.empty() && fixture_count > 0;
  std::ostringstream d;
  d << t.two_connected << " enumerated + " << fixture_count
    << " fixture graphs, " << failures << " bound failures";
  if (!problem.empty()) d << "; " << problem;
  report("degree-bound cycle construction", pass, d.str());
}

void criterion_corollary(const SweepTally& t) {
  std::ostringstream d;
  d << t.corollary_checked << " graphs with n >= 2*delta+1, "
    << t.corollary_failures << " failures";
  report("biconditional n<=7", t.corollary_failures == 0, d.str());
}

void criterion_tightness() {
  int checked = 0, failures = 0;
  InnerPolicy policies[3] = {InnerPolicy::empty, InnerPolicy::complete,
                             InnerPolicy::random};
  for (int i = 0; i < 100; ++i) {
    int delta = 2 + i % 3;
    int m = delta + 1 + (i / 3) % 4;
    Graph g = gen_join_family(delta, m, policies[i % 3],
                              static_cast<std::uint64_t>(i));
    ++checked;
    auto c = longest_cycle_exact(g);
    if (!c || c->length() != 2 * delta) {
      ++failures;
      continue;
    }
    Verdict v = classify(g);
    if (v.tag != VerdictTag::join_structure || !verify_verdict(g, v))
      ++failures;
  }
  std::ostringstream d;
  d << checked << " seeded instances, " << failures << " failures";
  report("extremal family tightness", failures == 0, d.str());
}

void criterion_engine_agreement(const SweepTally& t) {
  std::ostringstream d;
  d << t.two_connected << " graphs, " << t.tag_disagreements
    << " disagreements";
  report("proof/oracle verdict agreement", t.tag_disagreements == 0, d.str());
}

void criterion_oracle_cross_validation() {
  std::uint64_t checked = 0, mismatches = 0;
  for (int n = 0; n <= 6; ++n) {
    LabeledGraphEnumerator en(n);
    Graph g;
    while (en.next(g)) {
      ++checked;
      int naive = circ_test::naive_circumference(g);
      auto dp = longest_cycle_exact(g);
      int got = dp ? dp->length() : 0;
      if (got != naive) ++mismatches;
      bool ham = hamilton_cycle_exact(g).has_value();
      if (ham != (n >= 3 && got == n)) ++mismatches;
      if (dp && !dp->validate(g)) ++mismatches;
    }
  }
  std::ostringstream d;
  d << checked << " graphs n<=6, " << mismatches << " mismatches";
  report("oracle cross-validation", mismatches == 0, d.str());
}

Graph theta_graph(int a, int b, int c) {
  // two hubs joined by three internally disjoint paths of the given lengths
  std::vector<std::pair<int, int>> edges;
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i + 1 < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::from_edge_list(next, edges);
}

void criterion_mutations() {
  // corpus of verified verdicts across all three tags
  std::vector<std::pair<Graph, Verdict>> corpus;
  for (int delta = 2; delta <= 4; ++delta)
    for (int m = delta + 1; m <= delta + 4; ++m)
      for (InnerPolicy pol :
           {InnerPolicy::empty, InnerPolicy::complete, InnerPolicy::random}) {
        Graph g = gen_join_family(delta, m, pol, 77);
        corpus.emplace_back(g, classify(g));
      }
  for (int n = 5; n <= 10; ++n) {
    Graph g = cycle_graph(n);
    corpus.emplace_back(g, classify(g));
  }
  corpus.emplace_back(petersen_graph(), classify(petersen_graph()));
  for (auto [a, b, c] : {std::tuple{3, 3, 3}, {3, 3, 4}, {3, 4, 4}}) {
    Graph g = theta_graph(a, b, c);
    corpus.emplace_back(g, classify(g));
  }
  for (auto& [g, v] : corpus)
    if (!verify_verdict(g, v)) {
      report("certificate mutation rejection", false,
             "corpus verdict failed to verify");
      return;
    }

  std::mt19937_64 rng(20250811);
  int rejected = 0, accepted = 0;
  for (int round = 0; round < 1000; ++round) {
    auto& [g, v] = corpus[round % corpus.size()];
    Graph host = g;
    Verdict mutant = v;
    switch (v.tag) {
      case VerdictTag::hamiltonian: {
        // chop off the tail: the cycle no longer covers the graph
        int cut = 1 + static_cast<int>(rng() % (g.order() - 3));
        mutant.cycle->vertices.resize(
            mutant.cycle->vertices.size() - static_cast<size_t>(cut));
        break;
      }
      case VerdictTag::long_cycle: {
        // truncate to 2*delta vertices: below the certified threshold
        mutant.cycle->vertices.resize(
            static_cast<size_t>(2 * g.min_degree()));
        break;
      }
      case VerdictTag::join_structure: {
        auto& cert = *mutant.certificate;
        switch (rng() % 4) {
          case 0:  // drop a hub vertex
            cert.hub.erase(cert.hub.begin() +
                           static_cast<long>(rng() % cert.hub.size()));
            break;
          case 1: {  // move an independent vertex into the hub
            size_t i = rng() % cert.independent.size();
            cert.hub.push_back(cert.independent[i]);
            cert.independent.erase(cert.independent.begin() +
                                   static_cast<long>(i));
            break;
          }
          case 2: {  // add an edge inside the independent part
            size_t i = rng() % cert.independent.size();
            size_t j = rng() % cert.independent.size();
            if (i == j) j = (j + 1) % cert.independent.size();
            auto rows = g.rows();
            rows[static_cast<size_t>(cert.independent[i])] |=
                bit(cert.independent[j]);
            rows[static_cast<size_t>(cert.independent[j])] |=
                bit(cert.independent[i]);
            host = Graph::from_adjacency(g.order(), rows);
            break;
          }
          default: {  // delete one hub-to-independent edge
            int h = cert.hub[rng() % cert.hub.size()];
            int u = cert.independent[rng() % cert.independent.size()];
            auto rows = g.rows();
            rows[static_cast<size_t>(h)] &= ~bit(u);
            rows[static_cast<size_t>(u)] &= ~bit(h);
            host = Graph::from_adjacency(g.order(), rows);
            break;
          }
        }
        break;
      }
    }
    if (verify_verdict(host, mutant))
      ++accepted;
    else
      ++rejected;
  }
  std::ostringstream d;
  d << rejected << "/1000 rejected, " << accepted << " false accepts";
  report("certificate mutation rejection", accepted == 0, d.str());
}

void criterion_spot_checks() {
  int failures = 0;
  std::ostringstream d;

  Verdict pet = classify(petersen_graph());
  if (pet.tag != VerdictTag::long_cycle || !pet.cycle ||
      pet.cycle->length() != 9 || !verify_verdict(petersen_graph(), pet))
    ++failures;

  Verdict k23 = classify(complete_bipartite(2, 3));
  if (k23.tag != VerdictTag::join_structure || !k23.certificate ||
      k23.certificate->hub_size() != 2 ||
      k23.certificate->independent_size() != 3 ||
      !verify_verdict(complete_bipartite(2, 3), k23))
    ++failures;

  for (int n = 3; n <= 12; ++n) {
    Graph g = cycle_graph(n);
    Verdict v = classify(g);
    if (v.tag != VerdictTag::hamiltonian || !verify_verdict(g, v)) ++failures;
  }
  d << "petersen, k23, rings n=3..12; " << failures << " failures";
  report("known-instance spot checks", failures == 0, d.str());
}

void criterion_graph6_roundtrip() {
  std::mt19937_64 rng(424242);
  int failures = 0;
  for (int round = 0; round < 10000; ++round) {
    int n = static_cast<int>(rng() % 21);
    int threshold = static_cast<int>(rng() % 101);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng() % 100) < threshold)
          edges.emplace_back(u, v);
    Graph g = Graph::from_edge_list(n, edges);
    std::string line = encode_graph6(g);
    Graph back = parse_graph6(line);
    if (back != g || encode_graph6(back) != line) ++failures;
  }
  std::ostringstream d;
  d << "10000 graphs n<=20, " << failures << " mismatches";
  report("graph6 round-trip", failures == 0, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixtures = argc > 1 ? argv[1] : "tests/fixtures";

  SweepTally sweep = run_sweep(7);
  criterion_theorem2(sweep);
  criterion_dirac(sweep, fixtures);
  criterion_corollary(sweep);
  criterion_tightness();
  criterion_engine_agreement(sweep);
  criterion_oracle_cross_validation();
  criterion_mutations();
  criterion_spot_checks();
  criterion_graph6_roundtrip();

  if (g_failures == 0)
    std::printf("ACCEPTANCE: 9/9 PASS\n");
  else
    std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
