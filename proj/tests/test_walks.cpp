#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "onefact/sampling.hpp"
#include "onefact/walks.hpp"
#include "oracles.hpp"

using namespace onefact;

namespace {

using MoveKey = std::tuple<Vertex, Vertex, Color>;

// Every single-edge recoloring, judged by recomputing psi from scratch.
std::set<MoveKey> brute_moves(const Coloring& c, WalkMode mode) {
  std::set<MoveKey> out;
  const int n = c.order();
  const auto base = oracle::psi(c);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Color to = 1; to < n; ++to) {
        if (to == c.color(a, b)) continue;
        const auto d = oracle::psi(oracle::with_edge(c, a, b, to)) - base;
        if (d < 0 || (mode == WalkMode::Mild && d == 0)) out.insert({a, b, to});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("qualifying moves match brute force") {
  Rng rng(17);
  for (int n : {4, 6, 8}) {
    for (int rep = 0; rep < 30; ++rep) {
      Coloring c = Coloring::random(n, rng);
      // also look at states deeper in a descent
      for (int k = 0; k < rep; ++k) walk_step(c, WalkMode::Strict, rng);
      for (WalkMode mode : {WalkMode::Strict, WalkMode::Mild}) {
        std::set<MoveKey> got;
        for (const auto& m : qualifying_moves(c, mode)) {
          got.insert({m.u, m.v, m.to});
          CHECK(m.from == c.color(m.u, m.v));
          CHECK(m.delta_psi == c.delta_psi(m.u, m.v, m.to));
        }
        CHECK(got == brute_moves(c, mode));
        CHECK(count_qualifying_moves(c, mode) == got.size());
      }
    }
  }
}

TEST_CASE("walk_step samples qualifying moves uniformly") {
  // Chi-squared test against the uniform law on the qualifying set, at a
  // state with few moves (enumeration path) and at a random start
  // (rejection path).
  Rng rng(99);
  Coloring sparse = Coloring::random(8, rng);
  while (count_qualifying_moves(sparse, WalkMode::Strict) > 12) walk_step(sparse, WalkMode::Strict, rng);
  const Coloring dense = Coloring::random(4, rng);

  for (const Coloring* start : {static_cast<const Coloring*>(&sparse), &dense}) {
    for (WalkMode mode : {WalkMode::Strict, WalkMode::Mild}) {
      const auto moves = qualifying_moves(*start, mode);
      if (moves.size() < 2) continue;
      std::map<MoveKey, int> tally;
      const int draws = 20'000;
      for (int i = 0; i < draws; ++i) {
        Coloring c = *start;
        const auto m = walk_step(c, mode, rng);
        REQUIRE(m.has_value());
        ++tally[{m->u, m->v, m->to}];
      }
      CHECK(tally.size() == moves.size());
      const double expected = static_cast<double>(draws) / static_cast<double>(moves.size());
      double chi2 = 0;
      for (const auto& [key, count] : tally) chi2 += (count - expected) * (count - expected) / expected;
      const double df = static_cast<double>(moves.size() - 1);
      // mean df, sd sqrt(2 df): six standard deviations is far beyond chance
      CHECK(chi2 < df + 6 * std::sqrt(2 * df));
    }
  }
}

TEST_CASE("strict walks stop only at IV colorings with psi Vees") {
  Rng rng(4);
  for (int n : {6, 8, 12}) {
    for (int rep = 0; rep < 100; ++rep) {
      const WalkOutcome out = run_walk(Coloring::random(n, rng), WalkMode::Strict, 1'000'000, rng);
      CHECK(out.status != WalkStatus::StepLimit);
      if (out.status == WalkStatus::ReachedOf) {
        CHECK(oracle::is_of(out.terminal));
        continue;
      }
      CHECK(brute_moves(out.terminal, WalkMode::Strict).empty());
      CHECK(oracle::is_iv(out.terminal));
      CHECK(oracle::vee_count(out.terminal) == out.terminal.psi());
    }
  }
}

TEST_CASE("strict local optima of K_4 are IV with one Vee per conflict") {
  // All 729 colorings: a state with no strictly improving recolor is IV and
  // has exactly psi Vees.
  int optima = 0;
  for (std::size_t i = 0; i < state_count(4); ++i) {
    const Coloring c = state_at(4, i);
    CHECK(state_index(c) == i);
    if (count_qualifying_moves(c, WalkMode::Strict) > 0) continue;
    ++optima;
    CHECK(structure(c).is_iv);
    CHECK(static_cast<std::int64_t>(structure(c).vees.size()) == c.psi());
  }
  CHECK(optima >= 6);  // at least the six OFs
}

TEST_CASE("mild walks reach a one-factorization and traces replay") {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const Coloring start = Coloring::random(8, rng);
    const WalkOutcome out = run_walk(start, WalkMode::Mild, 10'000'000, rng, true);
    REQUIRE(out.status == WalkStatus::ReachedOf);
    REQUIRE(out.trace.has_value());
    CHECK(out.trace->size() == static_cast<std::size_t>(out.steps));
    CHECK(out.trace->steps_strictly_increasing());
    CHECK(out.trace->max_excess(start.psi()) == 0);
    const auto replayed = replay(start, *out.trace);
    REQUIRE(replayed.has_value());
    CHECK(*replayed == out.terminal);
  }
}

TEST_CASE("step limit and trivial orders") {
  Rng rng(1);
  const WalkOutcome capped = run_walk(Coloring::monochromatic(10), WalkMode::Mild, 3, rng);
  CHECK(capped.status == WalkStatus::StepLimit);
  CHECK(capped.steps == 3);
  const WalkOutcome two = run_walk(Coloring::monochromatic(2), WalkMode::Strict, 10, rng);
  CHECK(two.status == WalkStatus::ReachedOf);
  CHECK(two.steps == 0);
  CHECK(to_string(WalkStatus::StuckLocalOpt) == "stuck");
}

TEST_CASE("walks are reproducible under a fixed seed") {
  Rng a(123), b(123);
  const Coloring s1 = Coloring::random(10, a);
  const Coloring s2 = Coloring::random(10, b);
  const WalkOutcome x = run_walk(s1, WalkMode::Mild, 1'000'000, a);
  const WalkOutcome y = run_walk(s2, WalkMode::Mild, 1'000'000, b);
  CHECK(x.terminal == y.terminal);
  CHECK(x.steps == y.steps);
}
