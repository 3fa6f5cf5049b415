#include "onefact/trace.hpp"

#include <algorithm>

namespace onefact {

bool WalkTrace::steps_strictly_increasing() const {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].step <= entries_[i - 1].step) return false;
  }
  return true;
}

std::int64_t WalkTrace::max_excess(std::int64_t start_psi) const {
  std::int64_t low = start_psi;
  std::int64_t worst = 0;
  for (const TraceEntry& e : entries_) {
    worst = std::max(worst, e.psi - low);
    low = std::min(low, e.psi);
  }
  return worst;
}

namespace {

bool apply_recolor(Coloring& c, const Recolor& r) {
  if (c.color(r.u, r.v) != r.from || r.from == r.to) return false;
  c.recolor(r.u, r.v, r.to);
  return true;
}

}  // namespace

std::optional<Coloring> replay(const Coloring& start, const WalkTrace& trace) {
  Coloring current = start;
  for (const TraceEntry& e : trace.entries()) {
    if (e.kind != StepKind::Reject) {
      if (const auto* r = std::get_if<Recolor>(&e.move)) {
        if (!apply_recolor(current, *r)) return std::nullopt;
      } else {
        const Flip& f = std::get<Flip>(e.move);
        if (f.lead && !apply_recolor(current, *f.lead)) return std::nullopt;
        for (Vertex w : f.swapped) {
          const Color cu = current.color(w, f.u);
          const Color cv = current.color(w, f.v);
          if (cu == cv) return std::nullopt;
          current.recolor(w, f.u, cv);
          current.recolor(w, f.v, cu);
        }
      }
    }
    if (potential(current).psi != e.psi || current.psi() != e.psi) return std::nullopt;
  }
  return current;
}

}  // namespace onefact
