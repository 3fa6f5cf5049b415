#include <doctest.h>

#include <set>

#include "onefact/heuristics.hpp"
#include "oracles.hpp"

using namespace onefact;

namespace {

std::int64_t uncolored(const PartialColoring& s) {
  std::int64_t k = 0;
  for (Vertex a = 0; a < s.order(); ++a) {
    for (Vertex b = a + 1; b < s.order(); ++b) k += s.color(a, b) == 0;
  }
  return k;
}

// Edges of K_n covered by no matching, counted from the mates.
std::int64_t uncovered(const MatchingFamily& m) {
  const int n = m.order();
  std::set<std::pair<int, int>> covered;
  for (Color a = 1; a < n; ++a) {
    for (Vertex x = 0; x < n; ++x) covered.insert({std::min(x, m.mate(a, x)), std::max(x, m.mate(a, x))});
  }
  return choose2(n) - static_cast<std::int64_t>(covered.size());
}

std::int64_t column_pairs(const RowLatinArray& a) {
  std::int64_t k = 0;
  for (int col = 0; col < a.order(); ++col) {
    for (int r1 = 0; r1 < a.order(); ++r1) {
      for (int r2 = r1 + 1; r2 < a.order(); ++r2) k += a.at(r1, col) == a.at(r2, col);
    }
  }
  return k;
}

}  // namespace

TEST_CASE("partial colorings stay proper") {
  PartialColoring s(4);
  CHECK(s.psi() == 6);
  s.set(0, 1, 1);
  CHECK_THROWS_AS(s.set(0, 2, 1), std::logic_error);
  CHECK(s.partner(0, 1) == 1);
  CHECK(s.missing(2, 1));
  s.set(0, 1, 0);
  CHECK(s.psi() == 6);
  CHECK(s.is_proper());
}

TEST_CASE("ds move 1 completes a single gap") {
  // OF of K_4 minus edge 3-4 (color 1): the only (x, i) pairs are (3,1) and (4,1).
  PartialColoring s(4);
  s.set(0, 1, 1);
  s.set(0, 2, 2);
  s.set(1, 3, 2);
  s.set(0, 3, 3);
  s.set(1, 2, 3);
  CHECK(s.psi() == 1);
  Rng rng(1);
  ds_step1(s, rng);
  CHECK(s.psi() == 0);
  CHECK(s.color(2, 3) == 1);
  CHECK(oracle::is_of(s.to_coloring()));
  CHECK_THROWS_AS(ds_step1(s, rng), std::logic_error);
  CHECK_THROWS_AS(ds_step2(s, rng), std::logic_error);
}

TEST_CASE("ds moves keep properness and never raise psi") {
  Rng rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    PartialColoring s(8);
    for (int step = 0; step < 2000 && s.psi() > 0; ++step) {
      const auto before = s.psi();
      if (rng.bernoulli(0.7)) {
        ds_step1(s, rng);
      } else {
        ds_step2(s, rng);
      }
      CHECK(s.is_proper());
      CHECK(s.psi() == uncolored(s));
      CHECK(s.psi() <= before);
      CHECK(s.psi() >= before - 1);
    }
  }
}

TEST_CASE("ds_run") {
  Rng rng(3);
  const HeuristicOutcome two = ds_run(2, DsPolicy{}, 10, rng);
  CHECK(two.success);
  int wins = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const HeuristicOutcome out = ds_run(8, DsPolicy{}, 50 * 512, rng);
    if (out.success) {
      ++wins;
      CHECK(oracle::is_of(out.result));
    }
  }
  CHECK(wins >= 190);
  const HeuristicOutcome only1 = ds_run(8, DsPolicy{1.0}, 50 * 512, rng);
  CHECK(only1.steps > 0);
}

TEST_CASE("four-switch: the reducing case, involution, invariants") {
  MatchingFamily m = MatchingFamily::repeated(4);
  CHECK(m.psi() == 4);
  CHECK(m.psi() == uncovered(m));
  // 1-2 and 3-4 (0-based 0-1, 2-3) have multiplicity 3; 2-3 and 1-4 are unused.
  CHECK(m.switch_delta(1, 0, 1, 2, 3) == -2);
  const MatchingFamily before = m;
  m.apply_switch(1, 0, 1, 2, 3);
  CHECK(m.psi() == 2);
  CHECK(m.is_valid());
  CHECK(m.mate(1, 1) == 2);
  CHECK(m.mate(1, 0) == 3);
  // switching x2x3, x1x4 back with the roles exchanged restores the family
  m.apply_switch(1, 1, 2, 3, 0);
  CHECK(m == before);

  Rng rng(4);
  MatchingFamily r = MatchingFamily::repeated(10);
  for (int step = 0; step < 2000; ++step) {
    const auto psi = r.psi();
    if (!four_switch_step(r, rng)) break;
    CHECK(r.is_valid());
    CHECK(r.psi() <= psi);
    CHECK(r.psi() == uncovered(r));
  }
  std::int64_t total = 0;
  for (Vertex a = 0; a < 10; ++a) {
    for (Vertex b = a + 1; b < 10; ++b) total += r.multiplicity(a, b);
  }
  CHECK(total == 9 * 5);
}

TEST_CASE("four-switch run at n = 8") {
  Rng rng(5);
  int wins = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const HeuristicOutcome out = four_switch_run(8, 100'000, rng);
    if (out.success) {
      ++wins;
      CHECK(oracle::is_of(out.result));
    }
  }
  MESSAGE("four-switch successes: " << wins << "/100");
  CHECK(wins >= 90);
  const Coloring of = parse_coloring("n 4\n1: 1-2 3-4\n2: 1-3 2-4\n3: 1-4 2-3\n");
  CHECK(MatchingFamily::from_coloring(of).to_coloring() == of);
}

TEST_CASE("row-Latin arrays") {
  const RowLatinArray id = RowLatinArray::identity_rows(4);
  CHECK(id.psi() == 24);
  CHECK(id.psi() == column_pairs(id));
  CHECK(to_text(id) == "1 2 3 4\n1 2 3 4\n1 2 3 4\n1 2 3 4\n");

  RowLatinArray latin = RowLatinArray::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(latin.is_latin());
  Rng rng(6);
  CHECK_FALSE(latin_step(latin, rng));
  CHECK_THROWS_AS(RowLatinArray::from_rows({{0, 0, 1}, {1, 2, 0}, {2, 0, 1}}), std::invalid_argument);

  RowLatinArray a = RowLatinArray::random(7, rng);
  for (int step = 0; step < 500; ++step) {
    const int row = rng.below(7), c1 = rng.below(7), c2 = rng.below(7);
    if (c1 == c2) continue;
    const auto d = a.swap_delta(row, c1, c2);
    const auto before = a.psi();
    a.swap_entries(row, c1, c2);
    CHECK(a.psi() == before + d);
    CHECK(a.psi() == a.recompute_psi());
    CHECK(a.psi() == column_pairs(a));
    CHECK(a.rows_are_permutations());
  }
}

TEST_CASE("strict Latin walk") {
  Rng rng(7);
  int latin = 0, stuck = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const LatinOutcome out = latin_strict_walk(6, 100'000, rng);
    CHECK(out.array.rows_are_permutations());
    CHECK(out.array.psi() == column_pairs(out.array));
    if (out.status == LatinStatus::Latin) {
      ++latin;
      CHECK(out.array.psi() == 0);
    } else if (out.status == LatinStatus::Stuck) {
      ++stuck;
      RowLatinArray copy = out.array;
      CHECK_FALSE(latin_step(copy, rng));
    }
  }
  MESSAGE("n = 6 strict Latin walk: " << latin << " Latin, " << stuck << " stuck of 100");
  CHECK(latin + stuck == 100);
}
