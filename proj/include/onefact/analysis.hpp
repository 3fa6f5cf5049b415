#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onefact/coloring.hpp"
#include "onefact/spectral.hpp"

namespace onefact {

/// What counts as "one" object when enumerating.
///
/// Factorizations: unordered partitions into perfect matchings, each
/// represented by its normalized coloring (see normalize_colors).
/// Colorings: every assignment of the n-1 colors to the matchings.
enum class Labeling { Factorizations, Colorings };

/// Relabels colors so that edge {0, c} gets color c. Two OFs are the same
/// unordered factorization iff their normalized forms are equal.
Coloring normalize_colors(const Coloring& of);

/// Image of `of` under the vertex permutation: edge {perm[a], perm[b]} gets
/// the color of {a, b}.
Coloring permute_vertices(const Coloring& of, std::span<const Vertex> perm);

/// Every OF of K_n by backtracking. n must be even and at most 8
/// (at most 6 for Labeling::Colorings).
std::vector<Coloring> enumerate_ofs(int n, Labeling labeling = Labeling::Factorizations);

/// Sorted cycle lengths of the union of color classes c1 and c2.
std::vector<int> cycle_type(const Coloring& of, Color c1, Color c2);

/// Isomorphism invariant. Level 1 is the sorted multiset of 2-class-union
/// cycle types; level 2 appends the sorted multiset of 3-class-union girths.
std::string of_fingerprint(const Coloring& of, int level = 1);

struct IsoClass {
  char label = '?';
  Coloring representative;  // lexicographically least normalized member
  std::int64_t size = 0;    // in units of the input labeling
  std::int64_t automorphisms = 0;
  std::string fingerprint;
};

struct IsoClassTable {
  int n = 0;
  Labeling labeling = Labeling::Factorizations;
  int fingerprint_level = 1;
  bool fingerprints_distinct = false;
  std::vector<IsoClass> classes;  // ascending size

  std::int64_t total() const;
  const IsoClass* find(char label) const;
};

/// Orbits of the (vertex, color) permutation action on a complete
/// enumeration. Throws std::invalid_argument if the list is incomplete or
/// has duplicates.
IsoClassTable isomorphism_classes(const std::vector<Coloring>& ofs, int n);

/// Exact test by search over vertex permutations (n <= 8).
bool isomorphic(const Coloring& a, const Coloring& b);

/// Number of vertex permutations that map the factorization to itself (the
/// color permutation is then forced). n <= 8.
std::int64_t count_automorphisms(const Coloring& of);

/// The OF_8 table, built on first use.
const IsoClassTable& of8_table();

/// Class label A-F of an OF_8. Throws std::invalid_argument otherwise.
char classify_of8(const Coloring& of);

std::string table_to_json(const IsoClassTable& table);
IsoClassTable table_from_json(std::string_view json);

/// Every pair of color classes forms a Hamilton cycle.
bool kotzig_perfect(const Coloring& of);

/// C(|S|,2) minus the number of distinct colors inside S.
/// Throws on repeated or out-of-range vertices.
std::int64_t deficit(const Coloring& coloring, std::span<const Vertex> subset);

/// k vertices with deficit at least k-3, taken along alternating cycles of a
/// 2-class union. Requires an OF and 4 <= k <= n.
std::vector<Vertex> deficit_witness(const Coloring& of, int k);

/// Number of edges with both ends in `subset`.
std::size_t induced_edges(const UnionGraph& graph, std::span<const Vertex> subset);

/// A vertex set W with e(W) >= |W| + a, grown from a shortest cycle by
/// shortest ears; falls back to exhaustive search when n <= 12.
std::optional<std::vector<Vertex>> dense_small_set(const UnionGraph& graph, int a);

/// Smallest such W by exhaustive search over subsets (n <= 20).
std::optional<std::vector<Vertex>> dense_small_set_exhaustive(const UnionGraph& graph, int a);

}  // namespace onefact
