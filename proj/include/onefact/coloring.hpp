#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onefact/rng.hpp"

namespace onefact {

/// Vertices of K_n are 0..n-1.
using Vertex = int;
/// Colors are 1..n-1. Zero means "uncolored" where partial states exist.
using Color = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge with endpoints sorted so that u < v.
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

constexpr std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

constexpr std::size_t num_edges(int n) { return static_cast<std::size_t>(choose2(n)); }

/// Position of {a, b} in the row-major upper-triangular edge array.
constexpr std::size_t edge_index(int n, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(a) * (2 * static_cast<std::size_t>(n) - a - 1) / 2 +
         static_cast<std::size_t>(b - a - 1);
}

/// Inverse of edge_index.
Edge edge_at(int n, std::size_t index);

/// Throws std::invalid_argument unless n is even and >= 2.
void check_order(int n);

/// Incidence counts a[u][mu] of a coloring with the cached potentials.
///
/// phi = sum a[u][mu]^2 and psi = phi/2 - C(n,2) is the number of pairs of
/// incident equally colored edges.
struct ColorProfile {
  int n = 0;
  std::vector<int> counts;  // n rows of n entries; column 0 unused
  std::int64_t phi = 0;
  std::int64_t psi = 0;

  int count(Vertex u, Color c) const { return counts[static_cast<std::size_t>(u) * n + c]; }

  friend bool operator==(const ColorProfile&, const ColorProfile&) = default;
};

struct Potential {
  std::int64_t phi = 0;
  std::int64_t psi = 0;

  friend bool operator==(const Potential&, const Potential&) = default;
};

/// An arbitrary (not necessarily proper) coloring of E(K_n) by 1..n-1,
/// together with its incrementally maintained ColorProfile.
class Coloring {
 public:
  Coloring() = default;

  /// Every edge gets `color`.
  static Coloring monochromatic(int n, Color color = 1);
  /// Each edge independently uniform over 1..n-1.
  static Coloring random(int n, Rng& rng);
  /// Colors listed in edge_index order.
  static Coloring from_colors(int n, std::vector<Color> colors);

  int order() const { return n_; }
  int num_colors() const { return n_ - 1; }
  std::size_t size() const { return colors_.size(); }

  Color color(Vertex a, Vertex b) const { return colors_[edge_index(n_, a, b)]; }
  Color color_at(std::size_t e) const { return colors_[e]; }
  std::span<const Color> colors() const { return colors_; }

  const ColorProfile& profile() const { return profile_; }
  int count(Vertex u, Color c) const { return profile_.count(u, c); }
  std::int64_t phi() const { return profile_.phi; }
  std::int64_t psi() const { return profile_.psi; }
  bool is_one_factorization() const { return profile_.psi == 0; }

  /// Change of psi if edge {a,b} were recolored to `to`. Counts are taken
  /// before the move. Throws if `to` is out of range or equals the current color.
  std::int64_t delta_psi(Vertex a, Vertex b, Color to) const;

  /// Unchecked variant for inner loops; `to` must differ from the current color.
  std::int64_t delta_psi_fast(Vertex a, Vertex b, Color from, Color to) const {
    return static_cast<std::int64_t>(count(a, to)) + count(b, to) - count(a, from) - count(b, from) + 2;
  }

  /// Recolors {a,b} and updates the profile. Same preconditions as delta_psi.
  void recolor(Vertex a, Vertex b, Color to);

  /// Unchecked variant of recolor; `to` must differ from the current color.
  void recolor_fast(Vertex a, Vertex b, std::size_t e, Color to);

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Coloring(int n, std::vector<Color> colors);

  int& cell(Vertex u, Color c) { return profile_.counts[static_cast<std::size_t>(u) * n_ + c]; }

  int n_ = 0;
  std::vector<Color> colors_;
  ColorProfile profile_;
};

/// (phi, psi) recomputed from the edge colors alone.
Potential potential(const Coloring& coloring);

/// A monochromatic two-edge path.
struct Vee {
  Vertex center = 0;
  Vertex end1 = 0;  // end1 < end2
  Vertex end2 = 0;
  Color color = 0;
  std::vector<Color> missing_at_center;  // ascending
};

struct Component {
  Color color = 0;
  std::vector<Vertex> vertices;  // ascending
  std::size_t edges = 0;
};

struct Structure {
  /// components[c] for c in 1..n-1; index 0 empty.
  std::vector<std::vector<Component>> components;
  /// Components that are two-edge paths, by ascending center.
  std::vector<Vee> vees;
  bool is_iv = false;
  bool is_of = false;
};

/// Monochromatic components of every color class.
Structure structure(const Coloring& coloring);

/// Colors with zero incidences at u, ascending.
std::vector<Color> missing_colors(const Coloring& coloring, Vertex u);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Canonical text form: "n <n>" then one line per color k, "k: i-j i-j ..."
/// with 1-based vertices, i < j, pairs in lexicographic order.
std::string to_text(const Coloring& coloring);
void write_text(std::ostream& out, const Coloring& coloring);

/// Parses the canonical text form. Every edge must be listed exactly once.
Coloring parse_coloring(std::string_view text);
Coloring read_coloring(std::istream& in);

}  // namespace onefact
