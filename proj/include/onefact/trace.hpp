#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "onefact/coloring.hpp"

namespace onefact {

struct Recolor {
  Vertex u = 0;
  Vertex v = 0;
  Color from = 0;
  Color to = 0;
};

/// A (u,v)-flip: for each witness w the colors of wu and wv were exchanged.
/// `lead` is the single-edge recoloring that precedes the exchange when an
/// escape needs one; both together form one two-vertex move.
struct Flip {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> swapped;
  std::optional<Recolor> lead;
};

enum class StepKind : std::uint8_t {
  Walk,      // single-edge descent step
  Escape,    // two-vertex move out of a local optimum
  Unrolled,  // single-edge sub-step of an unrolled escape
  Accept,    // Metropolis proposal taken
  Reject,    // Metropolis proposal declined; state held
};

struct TraceEntry {
  std::int64_t step = 0;
  std::int64_t psi = 0;  // potential after the step
  StepKind kind = StepKind::Walk;
  std::variant<Recolor, Flip> move;
};

class WalkTrace {
 public:
  void record(std::int64_t step, std::int64_t psi, StepKind kind, std::variant<Recolor, Flip> move) {
    entries_.push_back(TraceEntry{step, psi, kind, std::move(move)});
  }

  const std::vector<TraceEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool steps_strictly_increasing() const;

  /// max over the trace of psi(current) - min psi seen so far, with `start_psi`
  /// as the first value.
  std::int64_t max_excess(std::int64_t start_psi) const;

 private:
  std::vector<TraceEntry> entries_;
};

/// Re-executes every move of `trace` on `start` and checks each recorded psi
/// against a from-scratch recomputation. Returns the final coloring on success.
std::optional<Coloring> replay(const Coloring& start, const WalkTrace& trace);

}  // namespace onefact
