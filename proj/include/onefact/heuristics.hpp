#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "onefact/coloring.hpp"
#include "onefact/rng.hpp"

namespace onefact {

/// Proper partial edge coloring of K_n: every color class is a matching,
/// some edges may be uncolored (color 0). psi = number of uncolored edges.
class PartialColoring {
 public:
  PartialColoring() = default;
  /// All edges uncolored.
  explicit PartialColoring(int n);

  int order() const { return n_; }
  Color color(Vertex a, Vertex b) const { return colors_[edge_index(n_, a, b)]; }
  /// The vertex joined to x by a c-colored edge, or -1.
  Vertex partner(Vertex x, Color c) const { return at_[static_cast<std::size_t>(x) * n_ + c]; }
  bool missing(Vertex x, Color c) const { return partner(x, c) < 0; }
  std::int64_t psi() const { return uncolored_; }
  int class_size(Color c) const { return class_size_[c]; }

  /// Sets the color of {a,b}; 0 uncolors. Throws std::logic_error if the
  /// result would not be proper.
  void set(Vertex a, Vertex b, Color c);

  /// Checks the matching property from the edge colors alone.
  bool is_proper() const;
  /// Requires psi() == 0.
  Coloring to_coloring() const;

 private:
  int n_ = 0;
  std::vector<Color> colors_;
  std::vector<Vertex> at_;
  std::vector<int> class_size_;
  std::int64_t uncolored_ = 0;
};

/// Dinitz-Stinson move 1: for a uniform (x, i) with i missing at x and a
/// uniform uncolored edge xy, color xy by i, first uncoloring the i-edge at y
/// if there is one. Throws std::logic_error on a complete coloring.
void ds_step1(PartialColoring& state, Rng& rng);

/// Dinitz-Stinson move 2: for a uniform color i that is not a perfect
/// matching and two uniform vertices x, y missing i, color xy by i (dropping
/// whatever color xy had). Throws std::logic_error on a complete coloring.
void ds_step2(PartialColoring& state, Rng& rng);

struct DsPolicy {
  double step1_probability = 0.9;
};

struct HeuristicOutcome {
  bool success = false;
  std::int64_t steps = 0;
  std::int64_t final_psi = 0;
  Coloring result;  // set on success
};

/// From the empty coloring, applies ds steps until psi = 0 or `cap` steps.
HeuristicOutcome ds_run(int n, const DsPolicy& policy, std::int64_t cap, Rng& rng);

/// Ordered list of n-1 perfect matchings of K_n. Edges may be covered
/// several times or not at all; psi = number of edges with multiplicity 0.
class MatchingFamily {
 public:
  MatchingFamily() = default;
  /// n-1 copies of {0,1}, {2,3}, ...
  static MatchingFamily repeated(int n);
  /// The color classes of a one-factorization.
  static MatchingFamily from_coloring(const Coloring& of);

  int order() const { return n_; }
  /// Partner of x in matching alpha (1..n-1).
  Vertex mate(Color alpha, Vertex x) const { return mates_[static_cast<std::size_t>(alpha) * n_ + x]; }
  int multiplicity(Vertex a, Vertex b) const { return multiplicity_[edge_index(n_, a, b)]; }
  std::int64_t psi() const { return uncovered_; }

  /// Psi change of replacing x1x2, x3x4 in matching alpha by x2x3, x1x4.
  std::int64_t switch_delta(Color alpha, Vertex x1, Vertex x2, Vertex x3, Vertex x4) const;
  /// Performs that replacement. x1x2 and x3x4 must be distinct edges of alpha.
  void apply_switch(Color alpha, Vertex x1, Vertex x2, Vertex x3, Vertex x4);

  /// Every matching perfect and multiplicities consistent.
  bool is_valid() const;
  /// Requires psi() == 0.
  Coloring to_coloring() const;

  friend bool operator==(const MatchingFamily&, const MatchingFamily&) = default;

 private:
  int n_ = 0;
  std::vector<Vertex> mates_;  // (n) x n, row 0 unused
  std::vector<int> multiplicity_;
  std::int64_t uncovered_ = 0;
};

enum class SwitchAcceptance { Mild, Strict };

/// Picks a uniform matching and two of its edges, takes the better of the two
/// rewirings (ties at random) and keeps it if psi does not increase (Mild) or
/// decreases (Strict). Retries up to `retries` proposals; false means no move.
bool four_switch_step(MatchingFamily& state, Rng& rng, SwitchAcceptance acceptance = SwitchAcceptance::Mild,
                      int retries = 0);

/// From MatchingFamily::repeated(n), applies four-switch steps until psi = 0
/// or `cap` steps.
HeuristicOutcome four_switch_run(int n, std::int64_t cap, Rng& rng,
                                 SwitchAcceptance acceptance = SwitchAcceptance::Mild);

/// n x n array whose rows are permutations of 0..n-1. psi counts pairs of
/// equal entries sharing a column; psi = 0 exactly for Latin squares.
class RowLatinArray {
 public:
  RowLatinArray() = default;
  static RowLatinArray identity_rows(int n);
  static RowLatinArray random(int n, Rng& rng);
  /// Throws std::invalid_argument unless every row is a permutation.
  static RowLatinArray from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row) * n_ + col]; }
  std::int64_t psi() const { return psi_; }
  bool is_latin() const { return psi_ == 0; }

  std::int64_t swap_delta(int row, int c1, int c2) const;
  void swap_entries(int row, int c1, int c2);

  /// psi from the entries alone.
  std::int64_t recompute_psi() const;
  bool rows_are_permutations() const;

  friend bool operator==(const RowLatinArray&, const RowLatinArray&) = default;

 private:
  explicit RowLatinArray(int n, std::vector<int> cells);

  int& column_count(int col, int value) { return column_counts_[static_cast<std::size_t>(col) * n_ + value]; }
  int column_count(int col, int value) const { return column_counts_[static_cast<std::size_t>(col) * n_ + value]; }

  int n_ = 0;
  std::vector<int> cells_;
  std::vector<int> column_counts_;
  std::int64_t psi_ = 0;
};

/// n rows of space-separated entries, 1-based.
std::string to_text(const RowLatinArray& array);

enum class LatinStatus { Latin, Stuck, StepLimit };

struct LatinOutcome {
  RowLatinArray array;
  LatinStatus status = LatinStatus::StepLimit;
  std::int64_t steps = 0;
};

/// One strict step: a swap within a row chosen uniformly among the swaps that
/// lower psi. False when none exists.
bool latin_step(RowLatinArray& array, Rng& rng);

/// Strict walk from n independent uniform row permutations.
LatinOutcome latin_strict_walk(int n, std::int64_t cap, Rng& rng);

}  // namespace onefact
