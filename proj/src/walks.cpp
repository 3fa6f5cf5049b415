#include "onefact/walks.hpp"

#include <algorithm>

namespace onefact {

std::string_view to_string(WalkMode mode) { return mode == WalkMode::Strict ? "strict" : "mild"; }

std::string_view to_string(WalkStatus status) {
  switch (status) {
    case WalkStatus::ReachedOf:
      return "reached_of";
    case WalkStatus::StuckLocalOpt:
      return "stuck";
    case WalkStatus::StepLimit:
      return "step_limit";
  }
  return "?";
}

namespace {

// Largest admissible delta for the mode.
constexpr std::int64_t bound_for(WalkMode mode) { return mode == WalkMode::Strict ? -1 : 0; }

// Visits qualifying moves in a fixed order. An edge whose endpoints carry its
// color only once each (s == 2) can qualify only in mild mode and only for a
// color missing at both ends, so those edges just scan the missing colors.
template <class Visit>
void for_each_qualifying(const Coloring& c, WalkMode mode, Visit&& visit) {
  const int n = c.order();
  const std::int64_t bound = bound_for(mode);

  std::vector<Color> missing;
  std::vector<std::size_t> offset(n + 1, 0);
  if (mode == WalkMode::Mild) {
    for (Vertex x = 0; x < n; ++x) {
      offset[x] = missing.size();
      for (Color k = 1; k < n; ++k) {
        if (c.count(x, k) == 0) missing.push_back(k);
      }
    }
    offset[n] = missing.size();
  }

  std::size_t e = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++e) {
      const Color from = c.color_at(e);
      const int s = c.count(a, from) + c.count(b, from);
      if (s >= 3) {
        for (Color to = 1; to < n; ++to) {
          if (to == from) continue;
          const std::int64_t d = static_cast<std::int64_t>(c.count(a, to)) + c.count(b, to) - s + 2;
          if (d <= bound) visit(CandidateMove{a, b, from, to, d});
        }
      } else if (mode == WalkMode::Mild) {
        for (std::size_t i = offset[a]; i < offset[a + 1]; ++i) {
          const Color to = missing[i];
          if (c.count(b, to) == 0) visit(CandidateMove{a, b, from, to, 0});
        }
      }
    }
  }
}

}  // namespace

std::vector<CandidateMove> qualifying_moves(const Coloring& coloring, WalkMode mode) {
  std::vector<CandidateMove> out;
  if (coloring.order() <= 2) return out;
  for_each_qualifying(coloring, mode, [&](const CandidateMove& m) { out.push_back(m); });
  return out;
}

std::size_t count_qualifying_moves(const Coloring& coloring, WalkMode mode) {
  std::size_t k = 0;
  if (coloring.order() <= 2) return k;
  for_each_qualifying(coloring, mode, [&](const CandidateMove&) { ++k; });
  return k;
}

std::optional<CandidateMove> walk_step(Coloring& coloring, WalkMode mode, Rng& rng) {
  const int n = coloring.order();
  if (n <= 2) return std::nullopt;
  const std::int64_t bound = bound_for(mode);

  const auto attempts = static_cast<std::int64_t>(coloring.size());
  for (std::int64_t t = 0; t < attempts; ++t) {
    const Vertex a = rng.below(n);
    Vertex b = rng.below(n - 1);
    if (b >= a) ++b;
    Color to = 1 + rng.below(n - 2);
    const std::size_t e = edge_index(n, a, b);
    const Color from = coloring.color_at(e);
    if (to >= from) ++to;
    const std::int64_t d = coloring.delta_psi_fast(a, b, from, to);
    if (d <= bound) {
      coloring.recolor_fast(a, b, e, to);
      return CandidateMove{std::min(a, b), std::max(a, b), from, to, d};
    }
  }

  const std::size_t total = count_qualifying_moves(coloring, mode);
  if (total == 0) return std::nullopt;
  std::size_t pick = rng.below(static_cast<std::uint64_t>(total));
  std::optional<CandidateMove> chosen;
  for_each_qualifying(coloring, mode, [&](const CandidateMove& m) {
    if (pick-- == 0) chosen = m;
  });
  coloring.recolor_fast(chosen->u, chosen->v, edge_index(n, chosen->u, chosen->v), chosen->to);
  return chosen;
}

WalkOutcome run_walk(Coloring start, WalkMode mode, std::int64_t max_steps, Rng& rng, bool record_trace) {
  WalkOutcome out;
  out.terminal = std::move(start);
  if (record_trace) out.trace.emplace();
  Coloring& c = out.terminal;
  while (c.psi() > 0) {
    if (out.steps >= max_steps) {
      out.status = WalkStatus::StepLimit;
      return out;
    }
    const auto move = walk_step(c, mode, rng);
    if (!move) {
      out.status = WalkStatus::StuckLocalOpt;
      return out;
    }
    ++out.steps;
    if (out.trace) out.trace->record(out.steps, c.psi(), StepKind::Walk, Recolor{move->u, move->v, move->from, move->to});
  }
  out.status = WalkStatus::ReachedOf;
  return out;
}

}  // namespace onefact
