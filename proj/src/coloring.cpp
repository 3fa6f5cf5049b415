#include "onefact/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>

namespace onefact {

Edge edge_at(int n, std::size_t index) {
  // Row a starts at a*(2n-a-1)/2; solve the quadratic and correct rounding.
  const double nn = 2.0 * n - 1.0;
  auto a = static_cast<Vertex>((nn - std::sqrt(nn * nn - 8.0 * static_cast<double>(index))) / 2.0);
  a = std::clamp(a, 0, n - 2);
  auto row_start = [n](Vertex r) { return static_cast<std::size_t>(r) * (2 * static_cast<std::size_t>(n) - r - 1) / 2; };
  while (a > 0 && row_start(a) > index) --a;
  while (a + 1 < n - 1 && row_start(a + 1) <= index) ++a;
  return Edge{a, static_cast<Vertex>(index - row_start(a)) + a + 1};
}

void check_order(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n % 2 != 0) throw std::invalid_argument("n must be even");
}

Coloring::Coloring(int n, std::vector<Color> colors) : n_(n), colors_(std::move(colors)) {
  profile_.n = n;
  profile_.counts.assign(static_cast<std::size_t>(n) * n, 0);
  std::size_t e = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++e) {
      const Color c = colors_[e];
      if (c < 1 || c >= n) throw std::invalid_argument("edge color out of range 1..n-1");
      ++cell(a, c);
      ++cell(b, c);
    }
  }
  const Potential p = potential(*this);
  profile_.phi = p.phi;
  profile_.psi = p.psi;
}

Coloring Coloring::monochromatic(int n, Color color) {
  check_order(n);
  return Coloring(n, std::vector<Color>(num_edges(n), color));
}

Coloring Coloring::random(int n, Rng& rng) {
  check_order(n);
  std::vector<Color> colors(num_edges(n));
  for (auto& c : colors) c = 1 + rng.below(n - 1);
  return Coloring(n, std::move(colors));
}

Coloring Coloring::from_colors(int n, std::vector<Color> colors) {
  check_order(n);
  if (colors.size() != num_edges(n)) throw std::invalid_argument("expected C(n,2) edge colors");
  return Coloring(n, std::move(colors));
}

std::int64_t Coloring::delta_psi(Vertex a, Vertex b, Color to) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) throw std::invalid_argument("not an edge of K_n");
  if (to < 1 || to >= n_) throw std::invalid_argument("color out of range 1..n-1");
  const Color from = color(a, b);
  if (from == to) throw std::invalid_argument("new color equals current color");
  return delta_psi_fast(a, b, from, to);
}

void Coloring::recolor(Vertex a, Vertex b, Color to) {
  const std::int64_t delta = delta_psi(a, b, to);
  const std::size_t e = edge_index(n_, a, b);
  const Color from = colors_[e];
  colors_[e] = to;
  --cell(a, from);
  --cell(b, from);
  ++cell(a, to);
  ++cell(b, to);
  profile_.psi += delta;
  profile_.phi += 2 * delta;
}

void Coloring::recolor_fast(Vertex a, Vertex b, std::size_t e, Color to) {
  const Color from = colors_[e];
  const std::int64_t delta = delta_psi_fast(a, b, from, to);
  colors_[e] = to;
  --cell(a, from);
  --cell(b, from);
  ++cell(a, to);
  ++cell(b, to);
  profile_.psi += delta;
  profile_.phi += 2 * delta;
}

Potential potential(const Coloring& coloring) {
  const int n = coloring.order();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * n, 0);
  std::size_t e = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++e) {
      const Color c = coloring.color_at(e);
      ++counts[static_cast<std::size_t>(a) * n + c];
      ++counts[static_cast<std::size_t>(b) * n + c];
    }
  }
  Potential p;
  for (std::int64_t x : counts) p.phi += x * x;
  p.psi = p.phi / 2 - choose2(n);
  return p;
}

std::vector<Color> missing_colors(const Coloring& coloring, Vertex u) {
  std::vector<Color> out;
  for (Color c = 1; c < coloring.order(); ++c) {
    if (coloring.count(u, c) == 0) out.push_back(c);
  }
  return out;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Structure structure(const Coloring& coloring) {
  const int n = coloring.order();
  Structure s;
  s.components.resize(n);

  std::vector<std::vector<Edge>> classes(n);
  for (std::size_t e = 0; e < coloring.size(); ++e) classes[coloring.color_at(e)].push_back(edge_at(n, e));

  s.is_iv = true;
  s.is_of = true;
  for (Color c = 1; c < n; ++c) {
    DisjointSets sets(n);
    std::vector<bool> touched(n, false);
    for (const Edge& e : classes[c]) {
      sets.unite(e.u, e.v);
      touched[e.u] = touched[e.v] = true;
    }
    std::vector<int> slot(n, -1);
    auto& comps = s.components[c];
    for (Vertex x = 0; x < n; ++x) {
      if (!touched[x]) continue;
      const int root = sets.find(x);
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(comps.size());
        comps.push_back(Component{c, {}, 0});
      }
      comps[slot[root]].vertices.push_back(x);
    }
    for (const Edge& e : classes[c]) ++comps[slot[sets.find(e.u)]].edges;

    for (const Component& comp : comps) {
      const bool single_edge = comp.vertices.size() == 2 && comp.edges == 1;
      const bool vee = comp.vertices.size() == 3 && comp.edges == 2;
      if (!single_edge) s.is_of = false;
      if (!single_edge && !vee) s.is_iv = false;
      if (vee) {
        Vee v;
        v.color = c;
        for (Vertex x : comp.vertices) {
          if (coloring.count(x, c) == 2) v.center = x;
        }
        std::vector<Vertex> ends;
        for (Vertex x : comp.vertices) {
          if (x != v.center) ends.push_back(x);
        }
        v.end1 = ends[0];
        v.end2 = ends[1];
        v.missing_at_center = missing_colors(coloring, v.center);
        s.vees.push_back(std::move(v));
      }
    }
    if (classes[c].size() != static_cast<std::size_t>(n / 2)) s.is_of = false;
  }
  std::stable_sort(s.vees.begin(), s.vees.end(),
                   [](const Vee& a, const Vee& b) { return a.center < b.center; });
  return s;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

void write_text(std::ostream& out, const Coloring& coloring) {
  const int n = coloring.order();
  out << "n " << n << '\n';
  std::vector<std::vector<Edge>> classes(n);
  for (std::size_t e = 0; e < coloring.size(); ++e) classes[coloring.color_at(e)].push_back(edge_at(n, e));
  for (Color c = 1; c < n; ++c) {
    out << c << ':';
    for (const Edge& e : classes[c]) out << ' ' << e.u + 1 << '-' << e.v + 1;
    out << '\n';
  }
}

std::string to_text(const Coloring& coloring) {
  std::ostringstream out;
  write_text(out, coloring);
  return out.str();
}

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_spaces() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_spaces();
    return pos_ >= line_.size();
  }
  long number() {
    skip_spaces();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] >= '0' && line_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large", start);
    return std::stol(std::string(line_.substr(start, pos_ - start)));
  }
  void expect(char ch) {
    if (pos_ >= line_.size() || line_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  void expect_word(std::string_view word) {
    skip_spaces();
    if (line_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, pos_ + 1, what); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(line_no_, at + 1, what); }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Coloring parse_coloring(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  // Blank trailing lines are tolerated.
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string_view::npos) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  LineScanner header(lines[0], 1);
  header.expect_word("n");
  const long n = header.number();
  if (!header.at_end()) header.fail("trailing characters after order");
  if (n < 2 || n % 2 != 0 || n > 4096) throw ParseError(1, 3, "order must be an even integer in 2..4096");

  std::vector<Color> colors(num_edges(static_cast<int>(n)), 0);
  for (long c = 1; c < n; ++c) {
    const auto line_no = static_cast<std::size_t>(c + 1);
    if (line_no > lines.size()) throw ParseError(line_no, 1, "missing line for color " + std::to_string(c));
    LineScanner scan(lines[line_no - 1], line_no);
    if (scan.number() != c) scan.fail("expected color " + std::to_string(c));
    scan.expect(':');
    while (!scan.at_end()) {
      const std::size_t col = scan.column();
      const long i = scan.number();
      scan.expect('-');
      const long j = scan.number();
      if (i < 1 || j > n || i >= j) throw ParseError(line_no, col, "edge must be i-j with 1 <= i < j <= n");
      Color& slot = colors[edge_index(static_cast<int>(n), static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1))];
      if (slot != 0) throw ParseError(line_no, col, "edge listed twice");
      slot = static_cast<Color>(c);
    }
  }
  if (lines.size() > static_cast<std::size_t>(n)) throw ParseError(static_cast<std::size_t>(n) + 1, 1, "unexpected extra line");
  for (std::size_t e = 0; e < colors.size(); ++e) {
    if (colors[e] == 0) {
      const Edge edge = edge_at(static_cast<int>(n), e);
      throw ParseError(lines.size() + 1, 1,
                       "edge " + std::to_string(edge.u + 1) + "-" + std::to_string(edge.v + 1) + " has no color");
    }
  }
  return Coloring::from_colors(static_cast<int>(n), std::move(colors));
}

Coloring read_coloring(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_coloring(text);
}

}  // namespace onefact
