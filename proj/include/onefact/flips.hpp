#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "onefact/coloring.hpp"
#include "onefact/rng.hpp"
#include "onefact/trace.hpp"

namespace onefact {

/// Plain directed multigraph on vertices 0..vertices-1; loops allowed.
struct DirectedMultigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
};

struct Arc {
  Color from = 0;  // color of w-u
  Color to = 0;    // color of w-v
  Vertex witness = 0;
};

/// Directed multigraph on the colors with one arc per vertex w != u, v of K_n,
/// running from color(wu) to color(wv).
///
/// Out-degree of a color equals its incidence count at u and in-degree its
/// count at v, except for the color of uv itself which is one higher at both.
struct ConflictMultigraph {
  int n = 0;
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Arc> arcs;

  int out_degree(Color c) const;
  int in_degree(Color c) const;
  /// Vertex ids are colors, so the result has n vertices with 0 unused.
  DirectedMultigraph as_multigraph() const;
};

/// Arcs to reverse, plus the sequence of directed-path reversals that
/// produced them. An arc may appear in more than one path; `reversed` holds
/// the arcs whose final direction differs from the original.
struct Reorientation {
  std::vector<std::size_t> reversed;  // ascending arc ids
  std::vector<std::vector<std::size_t>> paths;  // each listed from path start to end
};

/// Reorients arcs so that |outdeg - indeg| <= 1 at every vertex.
///
/// Directed cycles of the working set are set aside (never reversed); in the
/// acyclic rest a longest path from a vertex with surplus >= 2 (to a sink), or
/// into a vertex with deficit >= 2 (from a source), is reversed. Loops are
/// never reversed. Each reversal lowers sum |outdeg - indeg| by at least 2.
Reorientation balanced_reorientation(const DirectedMultigraph& graph);
Reorientation balanced_reorientation(const ConflictMultigraph& graph);

/// Arc list of `graph` after applying `r`.
std::vector<std::pair<int, int>> reoriented_arcs(const DirectedMultigraph& graph, const Reorientation& r);

/// True when every vertex has |outdeg - indeg| <= 1.
bool is_balanced(int vertices, const std::vector<std::pair<int, int>>& arcs);

/// Throws std::invalid_argument if u == v or either is out of range.
ConflictMultigraph build_conflict_multigraph(const Coloring& coloring, Vertex u, Vertex v);

/// Exchanges the colors of wu and wv for every reversed arc of `graph`.
/// Throws std::logic_error (leaving the coloring untouched) if an arc no
/// longer matches the coloring.
void apply_flip(Coloring& coloring, const ConflictMultigraph& graph, const Reorientation& r);

enum class EscapeCase { A, B };

struct PlannedFlip {
  ConflictMultigraph graph;
  Reorientation reorientation;
};

using PlannedMove = std::variant<Recolor, PlannedFlip>;

/// Moves that take an IV coloring to one with smaller psi.
struct EscapePlan {
  EscapeCase kind = EscapeCase::A;
  std::vector<PlannedMove> moves;
  std::int64_t net_delta_psi = 0;
};

/// Builds the escape for an IV coloring that is not a one-factorization.
///
/// Case A: some Vee_alpha and some Vee with alpha missing at its center; flip
/// the two centers. Case B: otherwise there are two Vee_alpha; recolor v1v2 of
/// the lower one to a color beta missing at its center, and if that alone
/// does not lower psi, flip v1 against the other Vee_alpha's center.
///
/// Throws std::invalid_argument if the coloring is not IV or is already an OF.
EscapePlan plan_escape(const Coloring& coloring);

/// Applies the plan's moves in order.
void execute(Coloring& coloring, const EscapePlan& plan);

struct GenerationOutcome {
  Coloring result;
  std::int64_t start_psi = 0;
  /// Two-vertex moves (strict) or single-edge recolorings (weak).
  std::int64_t steps = 0;
  std::int64_t walk_steps = 0;
  std::int64_t flips_executed = 0;
  std::int64_t escapes_case_a = 0;
  std::int64_t escapes_case_b = 0;
  /// Largest psi(current) - min psi(earlier); 0 for the strict algorithm.
  std::int64_t max_psi_excess = 0;
  WalkTrace trace;
};

/// Strict descent on two-vertex moves: strict single-edge walk, and an escape
/// (counted as one move) at every local optimum. Ends at a one-factorization.
GenerationOutcome strict_algorithm(Coloring start, Rng& rng, bool record_trace = false);

/// The same descent on single-edge moves only: each escape flip is unrolled
/// path by path, and along a path arc by arc (recolor wu, then wv).
GenerationOutcome weak_algorithm(Coloring start, Rng& rng, bool record_trace = false);

}  // namespace onefact
