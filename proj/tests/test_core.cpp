#include <doctest.h>

#include <sstream>

#include "onefact/coloring.hpp"
#include "oracles.hpp"

using namespace onefact;

TEST_CASE("edge_index and edge_at are inverse") {
  for (int n = 2; n <= 14; n += 2) {
    std::size_t expected = 0;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b, ++expected) {
        CHECK(edge_index(n, a, b) == expected);
        CHECK(edge_index(n, b, a) == expected);
        CHECK(edge_at(n, expected) == Edge{a, b});
      }
    }
    CHECK(expected == num_edges(n));
  }
}

TEST_CASE("odd or tiny orders are rejected") {
  CHECK_THROWS_WITH_AS(check_order(7), "n must be even", std::invalid_argument);
  CHECK_THROWS_AS(check_order(0), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::monochromatic(5), std::invalid_argument);
  CHECK_NOTHROW(check_order(2));
}

TEST_CASE("potentials agree with the pair-counting oracle") {
  Rng rng(11);
  for (int n : {2, 4, 6, 8, 12}) {
    for (int rep = 0; rep < 20; ++rep) {
      const Coloring c = Coloring::random(n, rng);
      CHECK(c.psi() == oracle::psi(c));
      CHECK(c.phi() == 2 * (c.psi() + choose2(n)));
      CHECK(potential(c) == Potential{c.phi(), c.psi()});
      CHECK(c.is_one_factorization() == oracle::is_of(c));
    }
  }
}

TEST_CASE("monochromatic coloring") {
  const Coloring c = Coloring::monochromatic(6);
  // each vertex carries 5 edges of color 1: C(5,2) pairs per vertex
  CHECK(c.psi() == 6 * 10);
  CHECK(c.psi() == oracle::psi(c));
  CHECK(missing_colors(c, 0) == std::vector<Color>{2, 3, 4, 5});
}

TEST_CASE("delta_psi predicts the recolor exactly") {
  Rng rng(5);
  for (int n : {4, 6, 10}) {
    Coloring c = Coloring::random(n, rng);
    for (int step = 0; step < 500; ++step) {
      const Vertex a = rng.below(n);
      Vertex b = rng.below(n - 1);
      if (b >= a) ++b;
      Color to = 1 + rng.below(n - 1);
      if (to == c.color(a, b)) continue;
      const auto before = oracle::psi(c);
      const auto d = c.delta_psi(a, b, to);
      CHECK(d == oracle::psi(oracle::with_edge(c, a, b, to)) - before);
      c.recolor(a, b, to);
      CHECK(c.psi() == before + d);
      CHECK(c.profile() == Coloring::from_colors(n, {c.colors().begin(), c.colors().end()}).profile());
    }
  }
}

TEST_CASE("recolor argument checks") {
  Coloring c = Coloring::monochromatic(4);
  CHECK_THROWS_AS(c.delta_psi(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c.delta_psi(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(c.recolor(0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::from_colors(4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::from_colors(4, {1, 2, 3, 3, 2, 9}), std::invalid_argument);
}

TEST_CASE("structure finds Vees and IV colorings") {
  const Coloring of = parse_coloring("n 4\n1: 1-2 3-4\n2: 1-3 2-4\n3: 1-4 2-3\n");
  const Structure s_of = structure(of);
  CHECK(s_of.is_of);
  CHECK(s_of.is_iv);
  CHECK(s_of.vees.empty());

  // One recolor of an OF joins two matching edges into a 3-edge path.
  Coloring c = of;
  c.recolor(2, 3, 2);
  CHECK_FALSE(structure(c).is_iv);
  CHECK_FALSE(oracle::is_iv(c));

  // Three Vees: 2-1-3 in color 1, 1-4-3 in color 2, 3-2-4 in color 3.
  const Coloring iv = parse_coloring("n 4\n1: 1-2 1-3\n2: 1-4 3-4\n3: 2-3 2-4\n");
  const Structure s = structure(iv);
  CHECK(s.is_iv);
  CHECK(iv.psi() == 3);
  REQUIRE(s.vees.size() == 3);
  CHECK(s.vees[0].center == 0);
  CHECK(s.vees[0].color == 1);
  CHECK(s.vees[0].missing_at_center == std::vector<Color>{3});
  CHECK(s.vees[1].center == 1);
  CHECK(s.vees[2].center == 3);
}

TEST_CASE("Vee census and IV flag agree with the oracles on random colorings") {
  Rng rng(3);
  for (int n : {4, 6, 8}) {
    for (int rep = 0; rep < 200; ++rep) {
      const Coloring c = Coloring::random(n, rng);
      const Structure s = structure(c);
      CHECK(s.vees.size() == static_cast<std::size_t>(oracle::vee_count(c)));
      CHECK(s.is_iv == oracle::is_iv(c));
      CHECK(s.is_of == oracle::is_of(c));
      for (const Vee& v : s.vees) {
        CHECK(c.color(v.center, v.end1) == v.color);
        CHECK(c.color(v.center, v.end2) == v.color);
        CHECK(v.missing_at_center == missing_colors(c, v.center));
      }
    }
  }
}

TEST_CASE("text format round trip") {
  Rng rng(2);
  for (int n : {2, 4, 8, 10}) {
    const Coloring c = Coloring::random(n, rng);
    CHECK(parse_coloring(to_text(c)) == c);
    std::stringstream s;
    write_text(s, c);
    CHECK(read_coloring(s) == c);
  }
  CHECK(to_text(Coloring::from_colors(2, {1})) == "n 2\n1: 1-2\n");
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_coloring(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("").first == 1);
  CHECK(error_at("m 4\n").first == 1);
  CHECK(error_at("n 5\n").first == 1);
  // duplicated edge
  CHECK(error_at("n 4\n1: 1-2 3-4\n2: 1-3 2-4 1-2\n3: 1-4 2-3\n").first == 3);
  // edge missing altogether
  CHECK(error_at("n 4\n1: 1-2 3-4\n2: 1-3 2-4\n3: 1-4\n").first != 0);
  // truncated
  CHECK(error_at("n 4\n1: 1-2 3-4\n").first != 0);
  // vertex out of range
  CHECK(error_at("n 4\n1: 1-5 3-4\n2: 1-3 2-4\n3: 1-4 2-3\n").first == 2);
  // a valid but improper coloring parses fine
  const Coloring c = parse_coloring("n 4\n1: 1-2 1-3 1-4 2-3 2-4 3-4\n2:\n3:\n");
  CHECK(c.psi() == 12);
}
