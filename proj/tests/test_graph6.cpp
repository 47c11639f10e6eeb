#include "doctest.h"

#include <random>

#include "family.hpp"
#include "graph.hpp"
#include "graph6.hpp"

using namespace circ;

TEST_CASE("known encodings") {
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");

  Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.degree(4) == 4);
  for (int v = 0; v < 4; ++v) CHECK(star.degree(v) == 1);
  CHECK(encode_graph6(star) == "D?{");

  // lines produced by an unrelated encoder
  CHECK(encode_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(encode_graph6(complete_bipartite(2, 3)) == "D]o");
  for (const char* line : {"HKC@MfP", "H?e`FO?", "HS\\QBXg"})
    CHECK(encode_graph6(parse_graph6(line)) == line);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("D?"), Error);       // truncated payload
  CHECK_THROWS_AS(parse_graph6("D?{?"), Error);     // trailing byte
  CHECK_THROWS_AS(parse_graph6("D?\x19"), Error);   // below payload range
  CHECK_THROWS_AS(parse_graph6("\x7f"), Error);     // above payload range
  CHECK_THROWS_AS(parse_graph6("~??"), Error);      // truncated long header

  // long-form header decodes, oversize order is rejected
  CHECK_THROWS_AS(parse_graph6("~?B?"), Error);  // order 192 > 62
  CHECK(parse_graph6("~??A_") == complete_graph(2));

  // padding bits must be zero
  CHECK_THROWS_AS(parse_graph6("B@"), Error);
}

TEST_CASE("round trips") {
  Graph k2 = complete_graph(2);
  CHECK(parse_graph6(encode_graph6(k2)) == k2);
  Graph pet = petersen_graph();
  CHECK(parse_graph6(encode_graph6(pet)) == pet);

  std::mt19937_64 rng(9);
  for (int round = 0; round < 200; ++round) {
    int n = static_cast<int>(rng() % 10);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1u) edges.emplace_back(u, v);
    Graph g = Graph::from_edge_list(n, edges);
    std::string line = encode_graph6(g);
    CHECK(parse_graph6(line) == g);
    CHECK(encode_graph6(parse_graph6(line)) == line);
  }
}

TEST_CASE("trailing newline tolerated") {
  CHECK(parse_graph6("C~\n") == complete_graph(4));
}
