#include "onefact/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace onefact {

// ---------------------------------------------------------------------------
// PartialColoring

PartialColoring::PartialColoring(int n)
    : n_(n),
      colors_(num_edges(n), 0),
      at_(static_cast<std::size_t>(n) * n, -1),
      class_size_(n, 0),
      uncolored_(static_cast<std::int64_t>(num_edges(n))) {
  check_order(n);
}

void PartialColoring::set(Vertex a, Vertex b, Color c) {
  if (a == b) throw std::invalid_argument("not an edge");
  if (c < 0 || c >= n_) throw std::invalid_argument("color out of range");
  Color& slot = colors_[edge_index(n_, a, b)];
  if (slot == c) return;
  if (c != 0 && (!missing(a, c) || !missing(b, c))) throw std::logic_error("color already present at an endpoint");
  if (slot != 0) {
    at_[static_cast<std::size_t>(a) * n_ + slot] = -1;
    at_[static_cast<std::size_t>(b) * n_ + slot] = -1;
    --class_size_[slot];
    ++uncolored_;
  }
  if (c != 0) {
    at_[static_cast<std::size_t>(a) * n_ + c] = b;
    at_[static_cast<std::size_t>(b) * n_ + c] = a;
    ++class_size_[c];
    --uncolored_;
  }
  slot = c;
}

bool PartialColoring::is_proper() const {
  std::vector<int> seen(static_cast<std::size_t>(n_) * n_, 0);
  std::size_t e = 0;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b, ++e) {
      const Color c = colors_[e];
      if (c == 0) continue;
      if (++seen[static_cast<std::size_t>(a) * n_ + c] > 1) return false;
      if (++seen[static_cast<std::size_t>(b) * n_ + c] > 1) return false;
    }
  }
  return true;
}

Coloring PartialColoring::to_coloring() const {
  if (uncolored_ != 0) throw std::logic_error("partial coloring is not complete");
  return Coloring::from_colors(n_, colors_);
}

namespace {

template <class Pred>
Vertex pick_uniform_vertex(int n, Rng& rng, Pred pred) {
  int total = 0;
  for (Vertex x = 0; x < n; ++x) total += pred(x) ? 1 : 0;
  if (total == 0) return -1;
  int k = rng.below(total);
  for (Vertex x = 0; x < n; ++x) {
    if (pred(x) && k-- == 0) return x;
  }
  return -1;
}

}  // namespace

void ds_step1(PartialColoring& state, Rng& rng) {
  if (state.psi() == 0) throw std::logic_error("coloring is already complete");
  const int n = state.order();

  Vertex x = -1;
  Color i = 0;
  const int pairs = n * (n - 1);
  for (int t = 0; t < pairs; ++t) {
    const Vertex cx = rng.below(n);
    const Color ci = 1 + rng.below(n - 1);
    if (state.missing(cx, ci)) {
      x = cx;
      i = ci;
      break;
    }
  }
  if (x < 0) {
    int total = 0;
    for (Vertex v = 0; v < n; ++v) {
      for (Color c = 1; c < n; ++c) total += state.missing(v, c) ? 1 : 0;
    }
    int k = rng.below(total);
    for (Vertex v = 0; v < n && x < 0; ++v) {
      for (Color c = 1; c < n; ++c) {
        if (state.missing(v, c) && k-- == 0) {
          x = v;
          i = c;
          break;
        }
      }
    }
  }

  // x misses i, so its n-1 edges use at most n-2 colors: one is uncolored.
  const Vertex y = pick_uniform_vertex(n, rng, [&](Vertex v) { return v != x && state.color(x, v) == 0; });
  if (y < 0) throw std::logic_error("vertex missing a color has no uncolored edge");
  const Vertex z = state.partner(y, i);
  if (z >= 0) state.set(y, z, 0);
  state.set(x, y, i);
}

void ds_step2(PartialColoring& state, Rng& rng) {
  if (state.psi() == 0) throw std::logic_error("coloring is already complete");
  const int n = state.order();
  std::vector<Color> open;
  for (Color c = 1; c < n; ++c) {
    if (state.class_size(c) < n / 2) open.push_back(c);
  }
  const Color i = open[rng.below(static_cast<int>(open.size()))];
  const Vertex x = pick_uniform_vertex(n, rng, [&](Vertex v) { return state.missing(v, i); });
  const Vertex y = pick_uniform_vertex(n, rng, [&](Vertex v) { return v != x && state.missing(v, i); });
  state.set(x, y, 0);
  state.set(x, y, i);
}

HeuristicOutcome ds_run(int n, const DsPolicy& policy, std::int64_t cap, Rng& rng) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  PartialColoring state(n);
  HeuristicOutcome out;
  while (state.psi() > 0 && out.steps < cap) {
    if (rng.bernoulli(policy.step1_probability)) {
      ds_step1(state, rng);
    } else {
      ds_step2(state, rng);
    }
    ++out.steps;
  }
  out.final_psi = state.psi();
  out.success = state.psi() == 0;
  if (out.success) out.result = state.to_coloring();
  return out;
}

// ---------------------------------------------------------------------------
// MatchingFamily

MatchingFamily MatchingFamily::repeated(int n) {
  check_order(n);
  MatchingFamily m;
  m.n_ = n;
  m.mates_.assign(static_cast<std::size_t>(n) * n, -1);
  m.multiplicity_.assign(num_edges(n), 0);
  for (Color a = 1; a < n; ++a) {
    for (Vertex x = 0; x < n; x += 2) {
      m.mates_[static_cast<std::size_t>(a) * n + x] = x + 1;
      m.mates_[static_cast<std::size_t>(a) * n + x + 1] = x;
      ++m.multiplicity_[edge_index(n, x, x + 1)];
    }
  }
  m.uncovered_ = std::count(m.multiplicity_.begin(), m.multiplicity_.end(), 0);
  return m;
}

MatchingFamily MatchingFamily::from_coloring(const Coloring& of) {
  if (!of.is_one_factorization()) throw std::invalid_argument("coloring is not a one-factorization");
  const int n = of.order();
  MatchingFamily m;
  m.n_ = n;
  m.mates_.assign(static_cast<std::size_t>(n) * n, -1);
  m.multiplicity_.assign(num_edges(n), 1);
  for (std::size_t e = 0; e < of.size(); ++e) {
    const Edge ed = edge_at(n, e);
    const Color c = of.color_at(e);
    m.mates_[static_cast<std::size_t>(c) * n + ed.u] = ed.v;
    m.mates_[static_cast<std::size_t>(c) * n + ed.v] = ed.u;
  }
  return m;
}

std::int64_t MatchingFamily::switch_delta(Color, Vertex x1, Vertex x2, Vertex x3, Vertex x4) const {
  std::int64_t d = 0;
  if (multiplicity(x1, x2) == 1) ++d;
  if (multiplicity(x3, x4) == 1) ++d;
  if (multiplicity(x2, x3) == 0) --d;
  if (multiplicity(x1, x4) == 0) --d;
  return d;
}

void MatchingFamily::apply_switch(Color alpha, Vertex x1, Vertex x2, Vertex x3, Vertex x4) {
  if (mate(alpha, x1) != x2 || mate(alpha, x3) != x4 || x1 == x3 || x1 == x4) {
    throw std::logic_error("four-switch needs two distinct edges of the matching");
  }
  uncovered_ += switch_delta(alpha, x1, x2, x3, x4);
  --multiplicity_[edge_index(n_, x1, x2)];
  --multiplicity_[edge_index(n_, x3, x4)];
  ++multiplicity_[edge_index(n_, x2, x3)];
  ++multiplicity_[edge_index(n_, x1, x4)];
  Vertex* row = &mates_[static_cast<std::size_t>(alpha) * n_];
  row[x2] = x3;
  row[x3] = x2;
  row[x1] = x4;
  row[x4] = x1;
}

bool MatchingFamily::is_valid() const {
  std::vector<int> mult(num_edges(n_), 0);
  for (Color a = 1; a < n_; ++a) {
    for (Vertex x = 0; x < n_; ++x) {
      const Vertex y = mate(a, x);
      if (y < 0 || y >= n_ || y == x || mate(a, y) != x) return false;
      if (x < y) ++mult[edge_index(n_, x, y)];
    }
  }
  return mult == multiplicity_ && uncovered_ == std::count(mult.begin(), mult.end(), 0);
}

Coloring MatchingFamily::to_coloring() const {
  if (uncovered_ != 0) throw std::logic_error("matching family still has uncovered edges");
  std::vector<Color> colors(num_edges(n_), 0);
  for (Color a = 1; a < n_; ++a) {
    for (Vertex x = 0; x < n_; ++x) {
      if (x < mate(a, x)) colors[edge_index(n_, x, mate(a, x))] = a;
    }
  }
  return Coloring::from_colors(n_, std::move(colors));
}

bool four_switch_step(MatchingFamily& state, Rng& rng, SwitchAcceptance acceptance, int retries) {
  const int n = state.order();
  if (n < 4) return false;
  if (retries <= 0) retries = 4 * static_cast<int>(num_edges(n));
  const std::int64_t bound = acceptance == SwitchAcceptance::Strict ? -1 : 0;
  for (int t = 0; t < retries; ++t) {
    const Color alpha = 1 + rng.below(n - 1);
    const Vertex x1 = rng.below(n);
    const Vertex x2 = state.mate(alpha, x1);
    Vertex x3 = rng.below(n - 2);
    // Skip over x1 and x2 to land uniformly on the other n-2 vertices.
    const Vertex lo = std::min(x1, x2);
    const Vertex hi = std::max(x1, x2);
    if (x3 >= lo) ++x3;
    if (x3 >= hi) ++x3;
    const Vertex x4 = state.mate(alpha, x3);

    // Rewiring A gives x2x3, x1x4; rewiring B gives x1x3, x2x4.
    const std::int64_t da = state.switch_delta(alpha, x1, x2, x3, x4);
    const std::int64_t db = state.switch_delta(alpha, x2, x1, x3, x4);
    const bool take_a = da < db || (da == db && rng.bernoulli(0.5));
    const std::int64_t d = take_a ? da : db;
    if (d > bound) continue;
    if (take_a) {
      state.apply_switch(alpha, x1, x2, x3, x4);
    } else {
      state.apply_switch(alpha, x2, x1, x3, x4);
    }
    return true;
  }
  return false;
}

HeuristicOutcome four_switch_run(int n, std::int64_t cap, Rng& rng, SwitchAcceptance acceptance) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  MatchingFamily state = MatchingFamily::repeated(n);
  HeuristicOutcome out;
  while (state.psi() > 0 && out.steps < cap) {
    if (!four_switch_step(state, rng, acceptance)) break;
    ++out.steps;
  }
  out.final_psi = state.psi();
  out.success = state.psi() == 0;
  if (out.success) out.result = state.to_coloring();
  return out;
}

// ---------------------------------------------------------------------------
// RowLatinArray

RowLatinArray::RowLatinArray(int n, std::vector<int> cells)
    : n_(n), cells_(std::move(cells)), column_counts_(static_cast<std::size_t>(n) * n, 0) {
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) ++column_count(c, at(r, c));
  }
  psi_ = recompute_psi();
}

RowLatinArray RowLatinArray::identity_rows(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) std::iota(cells.begin() + static_cast<std::ptrdiff_t>(r) * n, cells.begin() + static_cast<std::ptrdiff_t>(r + 1) * n, 0);
  return RowLatinArray(n, std::move(cells));
}

RowLatinArray RowLatinArray::random(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    int* row = &cells[static_cast<std::size_t>(r) * n];
    std::iota(row, row + n, 0);
    for (int k = n - 1; k > 0; --k) std::swap(row[k], row[rng.below(k + 1)]);
  }
  return RowLatinArray(n, std::move(cells));
}

RowLatinArray RowLatinArray::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("order must be positive");
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("array must be square");
    std::vector<bool> seen(n, false);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("row is not a permutation");
      seen[v] = true;
      cells.push_back(v);
    }
  }
  return RowLatinArray(n, std::move(cells));
}

std::int64_t RowLatinArray::swap_delta(int row, int c1, int c2) const {
  const int a = at(row, c1);
  const int b = at(row, c2);
  return static_cast<std::int64_t>(column_count(c1, b)) - (column_count(c1, a) - 1) + column_count(c2, a) -
         (column_count(c2, b) - 1);
}

void RowLatinArray::swap_entries(int row, int c1, int c2) {
  if (c1 == c2) return;
  psi_ += swap_delta(row, c1, c2);
  int& a = cells_[static_cast<std::size_t>(row) * n_ + c1];
  int& b = cells_[static_cast<std::size_t>(row) * n_ + c2];
  --column_count(c1, a);
  --column_count(c2, b);
  ++column_count(c1, b);
  ++column_count(c2, a);
  std::swap(a, b);
}

std::int64_t RowLatinArray::recompute_psi() const {
  std::int64_t total = 0;
  for (int c = 0; c < n_; ++c) {
    for (int r1 = 0; r1 < n_; ++r1) {
      for (int r2 = r1 + 1; r2 < n_; ++r2) total += at(r1, c) == at(r2, c) ? 1 : 0;
    }
  }
  return total;
}

bool RowLatinArray::rows_are_permutations() const {
  for (int r = 0; r < n_; ++r) {
    std::vector<bool> seen(n_, false);
    for (int c = 0; c < n_; ++c) {
      const int v = at(r, c);
      if (v < 0 || v >= n_ || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

std::string to_text(const RowLatinArray& array) {
  std::ostringstream out;
  for (int r = 0; r < array.order(); ++r) {
    for (int c = 0; c < array.order(); ++c) out << (c ? " " : "") << array.at(r, c) + 1;
    out << '\n';
  }
  return out.str();
}

bool latin_step(RowLatinArray& array, Rng& rng) {
  const int n = array.order();
  if (n < 2) return false;
  const std::int64_t moves = static_cast<std::int64_t>(n) * choose2(n);
  for (std::int64_t t = 0; t < moves; ++t) {
    const int row = rng.below(n);
    const int c1 = rng.below(n);
    int c2 = rng.below(n - 1);
    if (c2 >= c1) ++c2;
    if (array.swap_delta(row, c1, c2) < 0) {
      array.swap_entries(row, c1, c2);
      return true;
    }
  }
  std::int64_t total = 0;
  for (int r = 0; r < n; ++r) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) total += array.swap_delta(r, a, b) < 0 ? 1 : 0;
    }
  }
  if (total == 0) return false;
  std::int64_t k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total)));
  for (int r = 0; r < n; ++r) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (array.swap_delta(r, a, b) < 0 && k-- == 0) {
          array.swap_entries(r, a, b);
          return true;
        }
      }
    }
  }
  return false;
}

LatinOutcome latin_strict_walk(int n, std::int64_t cap, Rng& rng) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  LatinOutcome out;
  out.array = RowLatinArray::random(n, rng);
  while (!out.array.is_latin()) {
    if (out.steps >= cap) {
      out.status = LatinStatus::StepLimit;
      return out;
    }
    if (!latin_step(out.array, rng)) {
      out.status = LatinStatus::Stuck;
      return out;
    }
    ++out.steps;
  }
  out.status = LatinStatus::Latin;
  return out;
}

}  // namespace onefact
