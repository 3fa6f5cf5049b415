#include "onefact/flips.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "onefact/walks.hpp"

namespace onefact {

int ConflictMultigraph::out_degree(Color c) const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [c](const Arc& a) { return a.from == c; }));
}

int ConflictMultigraph::in_degree(Color c) const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [c](const Arc& a) { return a.to == c; }));
}

DirectedMultigraph ConflictMultigraph::as_multigraph() const {
  DirectedMultigraph g;
  g.vertices = n;
  g.arcs.reserve(arcs.size());
  for (const Arc& a : arcs) g.arcs.emplace_back(a.from, a.to);
  return g;
}

namespace {

class Balancer {
 public:
  explicit Balancer(const DirectedMultigraph& g)
      : vertices_(g.vertices), orient_(g.arcs), active_(g.arcs.size(), false) {
    for (std::size_t i = 0; i < orient_.size(); ++i) {
      const auto [a, b] = orient_[i];
      if (a < 0 || b < 0 || a >= vertices_ || b >= vertices_) throw std::invalid_argument("arc endpoint out of range");
      active_[i] = a != b;
    }
  }

  Reorientation run(const DirectedMultigraph& original) {
    Reorientation r;
    for (;;) {
      while (set_aside_cycle()) {
      }
      const std::vector<int> diff = surplus();
      const long before = imbalance(diff);
      std::vector<std::size_t> path;
      const int s = first_vertex(diff, [](int d) { return d >= 2; });
      if (s >= 0) {
        path = longest_path_from(s);
      } else {
        const int t = first_vertex(diff, [](int d) { return d <= -2; });
        if (t < 0) break;
        path = longest_path_into(t);
      }
      for (std::size_t id : path) std::swap(orient_[id].first, orient_[id].second);
      r.paths.push_back(std::move(path));
      if (imbalance(surplus()) > before - 2) throw std::logic_error("path reversal did not reduce imbalance");
    }
    for (std::size_t i = 0; i < orient_.size(); ++i) {
      if (orient_[i] != original.arcs[i]) r.reversed.push_back(i);
    }
    return r;
  }

 private:
  // Out-degree minus in-degree over the working arcs. Loops and set-aside
  // cycles contribute zero, so this is also the difference in the full graph.
  std::vector<int> surplus() const {
    std::vector<int> d(vertices_, 0);
    for (std::size_t i = 0; i < orient_.size(); ++i) {
      if (!active_[i]) continue;
      ++d[orient_[i].first];
      --d[orient_[i].second];
    }
    return d;
  }

  static long imbalance(const std::vector<int>& d) {
    long total = 0;
    for (int x : d) total += std::abs(x);
    return total;
  }

  template <class Pred>
  static int first_vertex(const std::vector<int>& d, Pred pred) {
    for (int x = 0; x < static_cast<int>(d.size()); ++x) {
      if (pred(d[x])) return x;
    }
    return -1;
  }

  std::vector<std::vector<std::size_t>> out_lists() const {
    std::vector<std::vector<std::size_t>> out(vertices_);
    for (std::size_t i = 0; i < orient_.size(); ++i) {
      if (active_[i]) out[orient_[i].first].push_back(i);
    }
    return out;
  }

  // Finds one directed cycle among working arcs and removes it from the set.
  bool set_aside_cycle() {
    const auto out = out_lists();
    std::vector<int> state(vertices_, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> via(vertices_, 0);  // arc used to enter the vertex
    struct Frame {
      int vertex;
      std::size_t next;
    };
    for (int root = 0; root < vertices_; ++root) {
      if (state[root] != 0) continue;
      std::vector<Frame> stack{{root, 0}};
      state[root] = 1;
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == out[f.vertex].size()) {
          state[f.vertex] = 2;
          stack.pop_back();
          continue;
        }
        const std::size_t arc = out[f.vertex][f.next++];
        const int head = orient_[arc].second;
        if (state[head] == 1) {
          std::vector<std::size_t> cycle{arc};
          for (int x = f.vertex; x != head; x = orient_[via[x]].first) cycle.push_back(via[x]);
          for (std::size_t id : cycle) active_[id] = false;
          return true;
        }
        if (state[head] == 0) {
          state[head] = 1;
          via[head] = arc;
          stack.push_back({head, 0});
        }
      }
    }
    return false;
  }

  std::vector<int> topological_order() const {
    std::vector<int> indeg(vertices_, 0);
    for (std::size_t i = 0; i < orient_.size(); ++i) {
      if (active_[i]) ++indeg[orient_[i].second];
    }
    const auto out = out_lists();
    std::vector<int> order;
    for (int x = 0; x < vertices_; ++x) {
      if (indeg[x] == 0) order.push_back(x);
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t arc : out[order[k]]) {
        if (--indeg[orient_[arc].second] == 0) order.push_back(orient_[arc].second);
      }
    }
    return order;
  }

  std::vector<std::size_t> longest_path_from(int s) const {
    constexpr int kUnreached = std::numeric_limits<int>::min();
    const auto order = topological_order();
    const auto out = out_lists();
    std::vector<int> dist(vertices_, kUnreached);
    std::vector<std::size_t> via(vertices_, 0);
    dist[s] = 0;
    for (int x : order) {
      if (dist[x] == kUnreached) continue;
      for (std::size_t arc : out[x]) {
        const int y = orient_[arc].second;
        if (dist[x] + 1 > dist[y]) {
          dist[y] = dist[x] + 1;
          via[y] = arc;
        }
      }
    }
    int end = s;
    for (int x = 0; x < vertices_; ++x) {
      if (dist[x] > dist[end]) end = x;
    }
    std::vector<std::size_t> path;
    for (int x = end; x != s; x = orient_[via[x]].first) path.push_back(via[x]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::vector<std::size_t> longest_path_into(int t) const {
    constexpr int kUnreached = std::numeric_limits<int>::min();
    auto order = topological_order();
    std::reverse(order.begin(), order.end());
    const auto out = out_lists();
    std::vector<int> dist(vertices_, kUnreached);
    std::vector<std::size_t> via(vertices_, 0);
    dist[t] = 0;
    for (int x : order) {
      for (std::size_t arc : out[x]) {
        const int y = orient_[arc].second;
        if (dist[y] != kUnreached && dist[y] + 1 > dist[x]) {
          dist[x] = dist[y] + 1;
          via[x] = arc;
        }
      }
    }
    int start = t;
    for (int x = 0; x < vertices_; ++x) {
      if (dist[x] > dist[start]) start = x;
    }
    std::vector<std::size_t> path;
    for (int x = start; x != t; x = orient_[via[x]].second) path.push_back(via[x]);
    return path;
  }

  int vertices_;
  std::vector<std::pair<int, int>> orient_;
  std::vector<bool> active_;
};

}  // namespace

Reorientation balanced_reorientation(const DirectedMultigraph& graph) { return Balancer(graph).run(graph); }

Reorientation balanced_reorientation(const ConflictMultigraph& graph) {
  return balanced_reorientation(graph.as_multigraph());
}

std::vector<std::pair<int, int>> reoriented_arcs(const DirectedMultigraph& graph, const Reorientation& r) {
  auto arcs = graph.arcs;
  for (std::size_t id : r.reversed) std::swap(arcs[id].first, arcs[id].second);
  return arcs;
}

bool is_balanced(int vertices, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> d(vertices, 0);
  for (const auto& [a, b] : arcs) {
    ++d[a];
    --d[b];
  }
  return std::all_of(d.begin(), d.end(), [](int x) { return std::abs(x) <= 1; });
}

ConflictMultigraph build_conflict_multigraph(const Coloring& coloring, Vertex u, Vertex v) {
  const int n = coloring.order();
  if (u == v) throw std::invalid_argument("flip anchors must differ");
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("flip anchor out of range");
  ConflictMultigraph h;
  h.n = n;
  h.u = u;
  h.v = v;
  h.arcs.reserve(n - 2);
  for (Vertex w = 0; w < n; ++w) {
    if (w == u || w == v) continue;
    h.arcs.push_back(Arc{coloring.color(w, u), coloring.color(w, v), w});
  }
  return h;
}

void apply_flip(Coloring& coloring, const ConflictMultigraph& graph, const Reorientation& r) {
  for (std::size_t id : r.reversed) {
    if (id >= graph.arcs.size()) throw std::logic_error("reorientation refers to a missing arc");
    const Arc& a = graph.arcs[id];
    if (coloring.color(a.witness, graph.u) != a.from || coloring.color(a.witness, graph.v) != a.to) {
      throw std::logic_error("reorientation does not match the current coloring");
    }
  }
  for (std::size_t id : r.reversed) {
    const Arc& a = graph.arcs[id];
    if (a.from == a.to) continue;
    coloring.recolor(a.witness, graph.u, a.to);
    coloring.recolor(a.witness, graph.v, a.from);
  }
}

namespace {

PlannedFlip plan_flip(const Coloring& c, Vertex u, Vertex v) {
  PlannedFlip f{build_conflict_multigraph(c, u, v), {}};
  f.reorientation = balanced_reorientation(f.graph);
  return f;
}

const Vee* lowest_vee(const std::vector<Vee>& vees, Color alpha, Vertex skip_center = -1) {
  for (const Vee& v : vees) {
    if (v.color == alpha && v.center != skip_center) return &v;
  }
  return nullptr;
}

}  // namespace

EscapePlan plan_escape(const Coloring& coloring) {
  const int n = coloring.order();
  const Structure s = structure(coloring);
  if (s.is_of) throw std::invalid_argument("coloring is already a one-factorization");
  if (!s.is_iv) throw std::invalid_argument("escape planning needs an IV coloring");

  EscapePlan plan;
  Coloring work = coloring;

  for (Color alpha = 1; alpha < n; ++alpha) {
    const Vee* with_alpha = lowest_vee(s.vees, alpha);
    if (!with_alpha) continue;
    for (const Vee& other : s.vees) {
      if (coloring.count(other.center, alpha) != 0) continue;
      plan.kind = EscapeCase::A;
      PlannedFlip f = plan_flip(work, with_alpha->center, other.center);
      apply_flip(work, f.graph, f.reorientation);
      plan.moves.emplace_back(std::move(f));
      plan.net_delta_psi = work.psi() - coloring.psi();
      return plan;
    }
  }

  plan.kind = EscapeCase::B;
  for (Color alpha = 1; alpha < n; ++alpha) {
    const Vee* first = lowest_vee(s.vees, alpha);
    if (!first) continue;
    const Vee* second = lowest_vee(s.vees, alpha, first->center);
    if (!second) continue;

    const Color beta = first->missing_at_center.front();
    const Vertex v1 = first->end1;
    const Vertex v2 = first->center;
    const Recolor step{std::min(v1, v2), std::max(v1, v2), alpha, beta};
    work.recolor(v1, v2, beta);
    plan.moves.emplace_back(step);
    if (work.psi() == coloring.psi()) {
      // v1 now centers a Vee_beta with alpha missing.
      PlannedFlip f = plan_flip(work, v1, second->center);
      apply_flip(work, f.graph, f.reorientation);
      plan.moves.emplace_back(std::move(f));
    }
    plan.net_delta_psi = work.psi() - coloring.psi();
    if (plan.net_delta_psi >= 0) throw std::logic_error("escape plan failed to lower psi");
    return plan;
  }
  throw std::logic_error("IV coloring with no escape case");
}

void execute(Coloring& coloring, const EscapePlan& plan) {
  for (const PlannedMove& m : plan.moves) {
    if (const auto* r = std::get_if<Recolor>(&m)) {
      if (coloring.color(r->u, r->v) != r->from) throw std::logic_error("plan does not match coloring");
      coloring.recolor(r->u, r->v, r->to);
    } else {
      const auto& f = std::get<PlannedFlip>(m);
      apply_flip(coloring, f.graph, f.reorientation);
    }
  }
}

namespace {

std::vector<Vertex> swapped_witnesses(const PlannedFlip& f) {
  std::vector<Vertex> out;
  out.reserve(f.reorientation.reversed.size());
  for (std::size_t id : f.reorientation.reversed) out.push_back(f.graph.arcs[id].witness);
  return out;
}

void count_escape(GenerationOutcome& out, const EscapePlan& plan) {
  if (plan.kind == EscapeCase::A) {
    ++out.escapes_case_a;
  } else {
    ++out.escapes_case_b;
  }
  for (const PlannedMove& m : plan.moves) {
    if (std::holds_alternative<PlannedFlip>(m)) ++out.flips_executed;
  }
}

}  // namespace

GenerationOutcome strict_algorithm(Coloring start, Rng& rng, bool record_trace) {
  GenerationOutcome out;
  out.start_psi = start.psi();
  out.result = std::move(start);
  Coloring& c = out.result;

  while (c.psi() > 0) {
    if (const auto m = walk_step(c, WalkMode::Strict, rng)) {
      ++out.steps;
      ++out.walk_steps;
      if (record_trace) out.trace.record(out.steps, c.psi(), StepKind::Walk, Recolor{m->u, m->v, m->from, m->to});
      continue;
    }
    const EscapePlan plan = plan_escape(c);
    execute(c, plan);
    count_escape(out, plan);
    ++out.steps;
    if (!record_trace) continue;

    Flip flip;
    const PlannedFlip* pf = nullptr;
    for (const PlannedMove& m : plan.moves) {
      if (const auto* r = std::get_if<Recolor>(&m)) flip.lead = *r;
      if (const auto* f = std::get_if<PlannedFlip>(&m)) pf = f;
    }
    if (pf) {
      flip.u = pf->graph.u;
      flip.v = pf->graph.v;
      flip.swapped = swapped_witnesses(*pf);
      out.trace.record(out.steps, c.psi(), StepKind::Escape, std::move(flip));
    } else {
      out.trace.record(out.steps, c.psi(), StepKind::Escape, *flip.lead);
    }
  }
  return out;
}

GenerationOutcome weak_algorithm(Coloring start, Rng& rng, bool record_trace) {
  GenerationOutcome out;
  out.start_psi = start.psi();
  out.result = std::move(start);
  Coloring& c = out.result;
  std::int64_t low = c.psi();

  auto note = [&](const Recolor& r, StepKind kind) {
    ++out.steps;
    out.max_psi_excess = std::max(out.max_psi_excess, c.psi() - low);
    low = std::min(low, c.psi());
    if (record_trace) out.trace.record(out.steps, c.psi(), kind, r);
  };

  while (c.psi() > 0) {
    if (const auto m = walk_step(c, WalkMode::Strict, rng)) {
      ++out.walk_steps;
      note(Recolor{m->u, m->v, m->from, m->to}, StepKind::Walk);
      continue;
    }
    const EscapePlan plan = plan_escape(c);
    count_escape(out, plan);
    for (const PlannedMove& m : plan.moves) {
      if (const auto* r = std::get_if<Recolor>(&m)) {
        c.recolor(r->u, r->v, r->to);
        note(*r, StepKind::Unrolled);
        continue;
      }
      const auto& f = std::get<PlannedFlip>(m);
      const Vertex u = f.graph.u;
      const Vertex v = f.graph.v;
      for (const auto& path : f.reorientation.paths) {
        for (std::size_t id : path) {
          const Vertex w = f.graph.arcs[id].witness;
          const Color cu = c.color(w, u);
          const Color cv = c.color(w, v);
          if (cu == cv) throw std::logic_error("unrolled flip met a loop arc");
          c.recolor(w, u, cv);
          note(Recolor{std::min(w, u), std::max(w, u), cu, cv}, StepKind::Unrolled);
          c.recolor(w, v, cu);
          note(Recolor{std::min(w, v), std::max(w, v), cv, cu}, StepKind::Unrolled);
        }
      }
    }
  }
  return out;
}

}  // namespace onefact
