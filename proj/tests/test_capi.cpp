#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "circ/circ.h"

namespace {

struct Freed {
  circ_graph* g = nullptr;
  ~Freed() { circ_graph_free(g); }
};

circ_graph* must_parse(const char* line) {
  circ_graph* g = nullptr;
  REQUIRE(circ_graph_parse_g6(line, &g) == CIRC_OK);
  REQUIRE(g != nullptr);
  return g;
}

}  // namespace

TEST_CASE("c api: version and status names") {
  CHECK(std::strlen(circ_version()) > 0);
  CHECK(std::string(circ_status_name(CIRC_OK)) == "ok");
  CHECK(std::string(circ_status_name(CIRC_ERR_NOT_TWO_CONNECTED)) ==
        "not_two_connected");
  CHECK(std::string(circ_status_name(CIRC_ERR_TRUNCATED_BITS)) ==
        "truncated_bits");
}

TEST_CASE("c api: graph lifecycle and queries") {
  Freed g{must_parse("D]o")};  // K_{2,3}
  CHECK(circ_graph_order(g.g) == 5);
  CHECK(circ_graph_edge_count(g.g) == 6);
  CHECK(circ_graph_min_degree(g.g) == 2);
  CHECK(circ_graph_degree(g.g, 0) == 3);
  CHECK(circ_graph_has_edge(g.g, 0, 2) == 1);
  CHECK(circ_graph_has_edge(g.g, 0, 1) == 0);
  CHECK(circ_graph_has_edge(g.g, 0, 9) == -1);
  CHECK(circ_graph_is_two_connected(g.g) == 1);

  char buf[80];
  size_t len = 0;
  REQUIRE(circ_graph_encode_g6(g.g, buf, sizeof buf, &len) == CIRC_OK);
  CHECK(std::string(buf, len) == "D]o");

  char tiny[2];
  CHECK(circ_graph_encode_g6(g.g, tiny, sizeof tiny, &len) ==
        CIRC_ERR_BUFFER_TOO_SMALL);
  CHECK(len == 3);
}

TEST_CASE("c api: parse failures set codes and messages") {
  circ_graph* g = nullptr;
  CHECK(circ_graph_parse_g6("D?", &g) == CIRC_ERR_TRUNCATED_BITS);
  CHECK(g == nullptr);
  CHECK(std::strlen(circ_last_error()) > 0);
  CHECK(circ_graph_parse_g6("D?\x10", &g) == CIRC_ERR_NON_ASCII_BYTE);
  CHECK(circ_graph_parse_g6(nullptr, &g) == CIRC_ERR_NULL_ARGUMENT);

  int32_t loop[2] = {1, 1};
  CHECK(circ_graph_from_edges(3, loop, 1, &g) == CIRC_ERR_LOOP_EDGE);
  int32_t range[2] = {0, 7};
  CHECK(circ_graph_from_edges(3, range, 1, &g) ==
        CIRC_ERR_VERTEX_OUT_OF_RANGE);
}

TEST_CASE("c api: edge list and join family constructors") {
  int32_t square[8] = {0, 1, 1, 2, 2, 3, 3, 0};
  circ_graph* g = nullptr;
  REQUIRE(circ_graph_from_edges(4, square, 4, &g) == CIRC_OK);
  Freed owned{g};
  CHECK(circ_graph_min_degree(g) == 2);

  circ_graph* fam = nullptr;
  REQUIRE(circ_graph_join_family(3, 4, "complete", 0, &fam) == CIRC_OK);
  Freed fam_owner{fam};
  CHECK(circ_graph_order(fam) == 7);
  CHECK(circ_graph_min_degree(fam) == 3);

  circ_graph* bad = nullptr;
  CHECK(circ_graph_join_family(3, 3, "empty", 0, &bad) ==
        CIRC_ERR_BAD_PARAMETERS);
  CHECK(circ_graph_join_family(3, 4, "sparse", 0, &bad) ==
        CIRC_ERR_BAD_PARAMETERS);
}

TEST_CASE("c api: oracles and witnesses") {
  Freed pet{must_parse("IheA@GUAo")};  // Petersen
  int32_t cycle[64];
  size_t len = 0;
  REQUIRE(circ_longest_cycle(pet.g, cycle, 64, &len) == CIRC_OK);
  CHECK(len == 9);
  REQUIRE(circ_hamilton_cycle(pet.g, cycle, 64, &len) == CIRC_OK);
  CHECK(len == 0);
  REQUIRE(circ_dirac_cycle(pet.g, cycle, 64, &len) == CIRC_OK);
  CHECK(len >= 6);

  Freed c5{must_parse("Dhc")};
  REQUIRE(circ_hamilton_cycle(c5.g, cycle, 64, &len) == CIRC_OK);
  CHECK(len == 5);

  // buffer probing: too-small capacity reports the needed length
  CHECK(circ_longest_cycle(pet.g, cycle, 4, &len) ==
        CIRC_ERR_BUFFER_TOO_SMALL);
  CHECK(len == 9);
}

TEST_CASE("c api: classification round trip") {
  Freed k23{must_parse("D]o")};
  for (circ_engine engine : {CIRC_ENGINE_ORACLE, CIRC_ENGINE_PROOF}) {
    circ_verdict* v = nullptr;
    REQUIRE(circ_classify(k23.g, engine, &v) == CIRC_OK);
    CHECK(circ_verdict_kind(v) == CIRC_VERDICT_JOIN_STRUCTURE);
    CHECK(circ_verdict_engine(v) == engine);
    int32_t hub[64], ind[64];
    size_t hub_len = 0, ind_len = 0;
    REQUIRE(circ_verdict_hub(v, hub, 64, &hub_len) == CIRC_OK);
    REQUIRE(circ_verdict_independent(v, ind, 64, &ind_len) == CIRC_OK);
    CHECK(hub_len == 2);
    CHECK(ind_len == 3);
    CHECK(circ_verify_verdict(k23.g, v) == 1);
    size_t cycle_len = 7;
    REQUIRE(circ_verdict_cycle(v, nullptr, 0, &cycle_len) == CIRC_OK);
    CHECK(cycle_len == 0);  // join verdicts carry no cycle
    circ_verdict_free(v);
  }

  Freed p4{must_parse("Ch")};  // path on 4 vertices
  circ_verdict* v = nullptr;
  CHECK(circ_classify(p4.g, CIRC_ENGINE_ORACLE, &v) ==
        CIRC_ERR_NOT_TWO_CONNECTED);
  CHECK(std::strlen(circ_last_error()) > 0);
}

TEST_CASE("c api: starved proof engine falls back to the oracles") {
  circ_graph* fam = nullptr;
  REQUIRE(circ_graph_join_family(3, 4, "empty", 0, &fam) == CIRC_OK);
  Freed owner{fam};
  circ_verdict* v = nullptr;
  REQUIRE(circ_classify_with_budget(fam, CIRC_ENGINE_PROOF, 1, &v) == CIRC_OK);
  CHECK(circ_verdict_kind(v) == CIRC_VERDICT_JOIN_STRUCTURE);
  CHECK(circ_verdict_engine(v) == CIRC_ENGINE_ORACLE);  // fallback happened
  CHECK(circ_verify_verdict(fam, v) == 1);
  circ_verdict_free(v);
}

TEST_CASE("c api: characterization check") {
  Freed pet{must_parse("IheA@GUAo")};
  int32_t holds = 0;
  REQUIRE(circ_check_characterization(pet.g, &holds) == CIRC_OK);
  CHECK(holds == 1);

  circ_graph* fam = nullptr;
  REQUIRE(circ_graph_join_family(2, 4, "empty", 0, &fam) == CIRC_OK);
  Freed fam_owner{fam};
  REQUIRE(circ_check_characterization(fam, &holds) == CIRC_OK);
  CHECK(holds == 1);
}

TEST_CASE("c api: enumeration stream") {
  uint64_t total = 0;
  REQUIRE(circ_enum_total(4, &total) == CIRC_OK);
  CHECK(total == 64);
  CHECK(circ_enum_total(9, &total) == CIRC_ERR_BUDGET_EXCEEDED);

  circ_enum* e = nullptr;
  REQUIRE(circ_enum_new(4, 0, 64, &e) == CIRC_OK);
  int count = 0, two_connected = 0;
  circ_graph* g = nullptr;
  while (circ_enum_next(e, &g) == 1) {
    ++count;
    if (circ_graph_is_two_connected(g) == 1) ++two_connected;
    circ_graph_free(g);
  }
  circ_enum_free(e);
  CHECK(count == 64);
  CHECK(two_connected == 10);  // labeled 2-connected graphs on 4 vertices

  // split ranges cover the same space
  circ_enum* left = nullptr;
  circ_enum* right = nullptr;
  REQUIRE(circ_enum_new(4, 0, 32, &left) == CIRC_OK);
  REQUIRE(circ_enum_new(4, 32, 64, &right) == CIRC_OK);
  int split = 0;
  while (circ_enum_next(left, &g) == 1) {
    ++split;
    circ_graph_free(g);
  }
  while (circ_enum_next(right, &g) == 1) {
    ++split;
    circ_graph_free(g);
  }
  circ_enum_free(left);
  circ_enum_free(right);
  CHECK(split == 64);
}
