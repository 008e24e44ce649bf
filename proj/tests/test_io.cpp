#include "doctest.h"
#include "shellforge/erasure.hpp"
#include "shellforge/io.hpp"

#include <random>

using namespace shellforge;

TEST_CASE("graph format") {
  Graph g = io::parse_graph("# comment\n\ngraph 4\n0 1  # an edge\n2 3\n");
  CHECK(g == Graph(4, {{0, 1}, {2, 3}}));
  CHECK(io::format_graph(g) == "graph 4\n0 1\n2 3\n");
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](auto&& fn) {
    try {
      fn();
    } catch (const io::ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of([] { io::parse_graph("graph 3\n0 1\n0 7\n"); }) == 3);
  CHECK(line_of([] { io::parse_graph("graph 3\n0 x\n"); }) == 2);
  CHECK(line_of([] { io::parse_graph("grph 3\n"); }) == 1);
  CHECK(line_of([] { io::parse_graph(""); }) == 1);
  CHECK(line_of([] { io::parse_graph("graph 3\n1 1\n"); }) == 2);
  CHECK(line_of([] { io::parse_graph("graph 3\n0 1\n1 0\n"); }) == 1);
  CHECK(line_of([] { io::parse_complex("complex 4 3\n0 1 2\n0 1\n"); }) == 3);
  CHECK(line_of([] { io::parse_complex("complex 4 3\n0 1 1\n"); }) == 2);
  CHECK(line_of([] { io::parse_complex("complex 4 5\n"); }) == 1);
  CHECK(line_of([] { io::parse_certificate("shelling 4 3\n0 1 2\nverdict maybe\n"); }) == 3);
  CHECK(line_of([] { io::parse_certificate("shelling 4 3\n0 1 2\n"); }) == 2);
}

TEST_CASE("complex, shelling and certificate formats") {
  Clutter c = io::parse_complex("complex 4 3\n1 2 3\n0 1 2\n");
  CHECK(io::format_complex(c) == "complex 4 3\n0 1 2\n1 2 3\n");
  io::ShellingFile s = io::parse_shelling("shelling 4 3\n1 2 3\n0 1 2\n");
  CHECK(s.order == ShellingOrder{0b1110, 0b0111});
  CHECK(io::format_shelling(4, 3, s.order) == "shelling 4 3\n1 2 3\n0 1 2\n");
  ExtendabilityCertificate cert{Verdict::Stuck, s.order, 9};
  const std::string text = io::format_certificate(4, 3, cert);
  CHECK(text == "shelling 4 3\n1 2 3\n0 1 2\nverdict stuck\n");
  io::CertificateFile back = io::parse_certificate(text);
  CHECK(back.verdict == Verdict::Stuck);
  CHECK(back.shelling.order == s.order);
}

TEST_CASE("erasure format") {
  ErasureSequence seq = erasure_from_complete(Graph::path(4));
  const std::string text = io::format_erasure(seq);
  io::ErasureFile back = io::parse_erasure(text);
  CHECK(back.n == 4);
  CHECK(back.edges == seq.edges);
}

TEST_CASE("round trips through text") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = Graph::from_edge_bits(8, rng() & low_bits(28));
    CHECK(io::parse_graph(io::format_graph(g)) == g);
    std::vector<Face> facets;
    for (Face f = 0; f < 64; ++f) {
      if (popcount(f) == 3 && rng() % 3 == 0) facets.push_back(f);
    }
    Clutter c(6, 3, facets);
    CHECK(io::parse_complex(io::format_complex(c)) == c);
  }
}

TEST_CASE("report and digest") {
  io::Report r;
  r.set("command", "x");
  r.set("count", std::uint64_t{3});
  r.set("command", "y");
  CHECK(r.format() == "command=y\ncount=3\n");
  CHECK(r.get("count") == "3");
  CHECK_FALSE(r.get("missing"));
  // FNV-1a reference values.
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == "af63dc4c8601ec8c");
}
