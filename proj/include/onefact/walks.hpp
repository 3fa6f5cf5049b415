#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "onefact/coloring.hpp"
#include "onefact/rng.hpp"
#include "onefact/trace.hpp"

namespace onefact {

enum class WalkMode {
  Strict,  // move only if psi decreases
  Mild,    // move if psi does not increase
};

enum class WalkStatus { ReachedOf, StuckLocalOpt, StepLimit };

std::string_view to_string(WalkMode mode);
std::string_view to_string(WalkStatus status);

struct CandidateMove {
  Vertex u = 0;
  Vertex v = 0;
  Color from = 0;
  Color to = 0;
  std::int64_t delta_psi = 0;
};

struct WalkOutcome {
  Coloring terminal;
  WalkStatus status = WalkStatus::StepLimit;
  std::int64_t steps = 0;
  std::optional<WalkTrace> trace;
};

/// Every single-edge recoloring allowed by `mode`, in edge_index order.
std::vector<CandidateMove> qualifying_moves(const Coloring& coloring, WalkMode mode);

/// Number of qualifying moves without materializing them.
std::size_t count_qualifying_moves(const Coloring& coloring, WalkMode mode);

/// Applies one qualifying move chosen uniformly at random; nullopt if none
/// exists (a local optimum for Strict, or an OF).
///
/// Draws uniform (edge, color) proposals first and falls back to exhaustive
/// enumeration after C(n,2) misses. Both branches are exactly uniform.
std::optional<CandidateMove> walk_step(Coloring& coloring, WalkMode mode, Rng& rng);

/// Steps until psi = 0, no qualifying move remains, or max_steps is reached.
WalkOutcome run_walk(Coloring start, WalkMode mode, std::int64_t max_steps, Rng& rng, bool record_trace = false);

}  // namespace onefact
