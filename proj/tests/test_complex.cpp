#include "doctest.h"
#include "oracles.hpp"
#include "shellforge/complex.hpp"
#include "shellforge/errors.hpp"
#include "shellforge/erasure.hpp"

#include <random>

using namespace shellforge;

namespace {

Face face(std::initializer_list<int> vs) {
  Face f = 0;
  for (int v : vs) f |= bit(v);
  return f;
}

std::vector<Face> k_subsets(int n, int k) {
  std::vector<Face> out;
  for (Face f = 0; f < (Face{1} << n); ++f) {
    if (popcount(f) == k) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("Clutter validation") {
  CHECK_THROWS_AS(Clutter(4, 3, {face({0, 1})}), ArgumentError);
  CHECK_THROWS_AS(Clutter(4, 2, {face({0, 5})}), ArgumentError);
  CHECK_THROWS_AS(Clutter(4, 2, {face({0, 1}), face({1, 0})}), ArgumentError);
  Clutter c(4, 2, {face({2, 3}), face({0, 1})});
  CHECK(c.facets()[0] == face({0, 1}));
  CHECK(c.index_of(face({2, 3})) == 1);
  CHECK(c.index_of(face({1, 3})) == -1);
}

TEST_CASE("generated_complex_contains") {
  CHECK(generated_complex_contains(Clutter(4, 4, {face({0, 1, 2, 3})}), face({0, 2, 3})));
  CHECK_FALSE(generated_complex_contains(Clutter(5, 3, {face({0, 1, 2}), face({2, 3, 4})}),
                                         face({0, 1, 3})));
  CHECK_FALSE(generated_complex_contains(Clutter(4, 2, {}), 0));
  CHECK(generated_complex_contains(Clutter(4, 2, {face({0, 1})}), 0));
}

TEST_CASE("is_shelling_step examples") {
  const Clutter tri(5, 3, {face({0, 1, 2})});
  auto step = is_shelling_step(tri, face({0, 1, 3}));
  REQUIRE(step);
  CHECK(*step == face({3}));
  CHECK(shelling_step_by_enumeration(tri, face({0, 1, 3})) == face({3}));

  CHECK_FALSE(is_shelling_step(tri, face({0, 3, 4})));
  CHECK_FALSE(shelling_step_by_enumeration(tri, face({0, 3, 4})));

  const Clutter edge(4, 2, {face({2, 3})});
  CHECK_FALSE(is_shelling_step(edge, face({0, 1})));

  CHECK_THROWS_AS(is_shelling_step(tri, face({0, 1, 2})), ArgumentError);
  CHECK_THROWS_AS(is_shelling_step(Clutter(5, 3, {}), face({0, 1, 2})), ArgumentError);
  CHECK_THROWS_AS(is_shelling_step(tri, face({0, 1})), ArgumentError);
}

TEST_CASE("shelling-step routes agree exhaustively for n <= 5") {
  // Every clutter on up to 5 vertices with facet size k <= 4, every
  // candidate: fast route, interval enumeration, purity and the literal
  // definition all agree.
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      const auto pool = k_subsets(n, k);
      if (pool.size() > 10) continue;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        std::vector<Face> facets;
        for_each_bit(mask, [&](int i) { facets.push_back(pool[static_cast<std::size_t>(i)]); });
        const Clutter c(n, k, facets);
        for (Face e : pool) {
          if (c.has_facet(e)) continue;
          auto fast = is_shelling_step(c, e);
          REQUIRE(fast == shelling_step_by_enumeration(c, e));
          REQUIRE(fast.has_value() == shelling_step_is_pure(c, e));
          REQUIRE(fast.has_value() == oracle::step_by_definition(facets, e));
        }
      }
    }
  }
}

TEST_CASE("shelling-step routes agree on random clutters with n = 6, k = 3 and k = 4") {
  std::mt19937_64 rng(99);
  for (int k : {3, 4}) {
    const auto pool = k_subsets(6, k);
    for (int trial = 0; trial < 3000; ++trial) {
      const std::uint64_t mask = rng() & low_bits(static_cast<int>(pool.size()));
      if (mask == 0) continue;
      std::vector<Face> facets;
      for_each_bit(mask, [&](int i) { facets.push_back(pool[static_cast<std::size_t>(i)]); });
      const Clutter c(6, k, facets);
      for (Face e : pool) {
        if (c.has_facet(e)) continue;
        auto fast = is_shelling_step(c, e);
        REQUIRE(fast == shelling_step_by_enumeration(c, e));
        REQUIRE(fast.has_value() == shelling_step_is_pure(c, e));
      }
    }
  }
}

TEST_CASE("restricted_set examples") {
  const std::vector<Face> one{face({0, 1, 2})};
  RestrictedSet r = restricted_set(one, face({0, 1, 3}));
  CHECK(r.ridges == std::vector<Face>{face({0, 1})});

  const std::vector<Face> two{face({0, 1, 2}), face({0, 1, 3})};
  r = restricted_set(two, face({0, 2, 3}));
  CHECK(r.ridges == std::vector<Face>{face({0, 2}), face({0, 3})});

  CHECK(restricted_set({}, face({1, 2, 3})).ridges.empty());
}

TEST_CASE("is_shelling_order examples") {
  const std::vector<Face> tetra{face({0, 1, 2}), face({0, 1, 3}), face({0, 2, 3}), face({1, 2, 3})};
  CHECK(is_shelling_order(tetra, 4, 3));
  const std::vector<Face> bad{face({0, 1, 2}), face({0, 3, 4}), face({0, 1, 3})};
  CHECK_FALSE(is_shelling_order(bad, 5, 3));
  CHECK(is_shelling_order(std::vector<Face>{face({2, 3, 4})}, 5, 3));
  CHECK_FALSE(is_shelling_order(std::vector<Face>{face({0, 1}), face({0, 1})}, 3, 2));
}

TEST_CASE("any order of facets on k+1 vertices is a shelling") {
  std::vector<Face> tetra{face({0, 1, 2}), face({0, 1, 3}), face({0, 2, 3}), face({1, 2, 3})};
  std::sort(tetra.begin(), tetra.end());
  do {
    CHECK(is_shelling_order(tetra, 4, 3));
  } while (std::next_permutation(tetra.begin(), tetra.end()));
}

TEST_CASE("graph and clutter correspondence") {
  Clutter from_k4 = clutter_from_graph(Graph::complete(4));
  CHECK(from_k4.facet_size() == 2);
  CHECK(from_k4.size() == 6);
  Clutter single = clutter_from_graph(Graph(4, {{0, 1}}));
  CHECK(single == Clutter(4, 2, {face({2, 3})}));
  CHECK_THROWS_AS(clutter_from_graph(Graph::path(2)), ArgumentError);
  CHECK_THROWS_AS(graph_from_clutter(Clutter(5, 2, {})), ArgumentError);

  for (std::uint64_t bits = 0; bits < (1U << 10); ++bits) {
    Graph g = Graph::from_edge_bits(5, bits);
    REQUIRE(graph_from_clutter(clutter_from_graph(g)) == g);
  }
}

TEST_CASE("transport_removals examples") {
  auto steps = transport_removals(4, std::vector<Edge>{Edge(0, 1)});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].facet == face({2, 3}));
  CHECK(steps[0].shelling_step);
  CHECK(steps[0].exposure == ExposureStatus::ProperlyExposed);
  CHECK(steps[0].restricted_size == 0);

  steps = transport_removals(4, std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
  CHECK_FALSE(steps[1].shelling_step);
  CHECK(steps[1].exposure == ExposureStatus::NotExposed);

  for (std::uint64_t bits = 0; bits < (1U << 10); ++bits) {
    Graph h = Graph::from_edge_bits(5, bits);
    if (!is_chordal(h)) continue;
    auto seq = erasure_from_complete(h).edges;
    for (const TransportStep& s : transport_removals(5, seq)) REQUIRE(s.shelling_step);
  }
  CHECK_THROWS_AS(transport_removals(4, std::vector<Edge>{Edge(0, 1), Edge(0, 1)}), ArgumentError);
}

TEST_CASE("restricted set sizes stay within [0, k]") {
  std::mt19937_64 rng(17);
  const auto pool = k_subsets(6, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Face> order = pool;
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(1 + rng() % pool.size());
    CHECK(restricted_set(std::span(order).first(0), order[0]).ridges.empty());
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto r = restricted_set(std::span(order).first(i), order[i]);
      CHECK(r.ridges.size() <= 3);
    }
  }
}
