#include "onefact/analysis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace onefact {

namespace {

using Key = std::string;

void require_of(const Coloring& of) {
  if (of.order() < 2 || !of.is_one_factorization()) throw std::invalid_argument("not a one-factorization");
}

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// mate[c * n + v] = partner of v in color class c.
std::vector<Vertex> mates(const Coloring& of) {
  const int n = of.order();
  std::vector<Vertex> mate(static_cast<std::size_t>(n) * n, -1);
  std::size_t e = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++e) {
      const Color c = of.color_at(e);
      mate[static_cast<std::size_t>(c) * n + a] = b;
      mate[static_cast<std::size_t>(c) * n + b] = a;
    }
  }
  return mate;
}

std::vector<std::vector<Vertex>> two_class_cycles(const std::vector<Vertex>& mate, int n, Color c1, Color c2) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<bool> seen(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    Vertex cur = start;
    bool first = true;
    do {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = mate[static_cast<std::size_t>(first ? c1 : c2) * n + cur];
      first = !first;
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Normalized colors of the image of `colors` under the vertex permutation
// whose inverse is `inv`.
Key normalized_image(const std::vector<Color>& colors, int n, const std::vector<Vertex>& inv) {
  std::vector<Color> tau(n, 0);
  for (Vertex j = 1; j < n; ++j) tau[colors[edge_index(n, inv[0], inv[j])]] = j;
  Key key(colors.size(), '\0');
  std::size_t e = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++e) {
      key[e] = static_cast<char>(tau[colors[edge_index(n, inv[a], inv[b])]]);
    }
  }
  return key;
}

Key key_of(const Coloring& c) {
  Key key(c.size(), '\0');
  for (std::size_t e = 0; e < c.size(); ++e) key[e] = static_cast<char>(c.color_at(e));
  return key;
}

Coloring from_key(int n, const Key& key) {
  std::vector<Color> colors(key.begin(), key.end());
  return Coloring::from_colors(n, std::move(colors));
}

std::vector<Color> colors_of(const Coloring& c) { return {c.colors().begin(), c.colors().end()}; }

template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    f(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

class Enumerator {
 public:
  explicit Enumerator(int n) : n_(n), colors_(num_edges(n), 0), matched_(static_cast<std::size_t>(n) * n, false) {
    for (Color c = 1; c < n; ++c) {
      colors_[edge_index(n, 0, c)] = c;
      matched_[idx(c, 0)] = matched_[idx(c, c)] = true;
    }
  }

  std::vector<Coloring> run() {
    if (n_ == 2) {
      out_.push_back(Coloring::from_colors(2, {1}));
    } else {
      fill(1);
    }
    return std::move(out_);
  }

 private:
  std::size_t idx(Color c, Vertex v) const { return static_cast<std::size_t>(c) * n_ + v; }

  void fill(Color c) {
    if (c == n_) {
      out_.push_back(Coloring::from_colors(n_, colors_));
      return;
    }
    Vertex x = 0;
    while (x < n_ && matched_[idx(c, x)]) ++x;
    if (x == n_) {
      fill(c + 1);
      return;
    }
    for (Vertex y = x + 1; y < n_; ++y) {
      const std::size_t e = edge_index(n_, x, y);
      if (matched_[idx(c, y)] || colors_[e] != 0) continue;
      colors_[e] = c;
      matched_[idx(c, x)] = matched_[idx(c, y)] = true;
      fill(c);
      matched_[idx(c, x)] = matched_[idx(c, y)] = false;
      colors_[e] = 0;
    }
  }

  int n_;
  std::vector<Color> colors_;
  std::vector<bool> matched_;
  std::vector<Coloring> out_;
};

}  // namespace

Coloring normalize_colors(const Coloring& of) {
  require_of(of);
  const int n = of.order();
  std::vector<Color> tau(n, 0);
  for (Vertex j = 1; j < n; ++j) tau[of.color(0, j)] = j;
  std::vector<Color> colors(of.size());
  for (std::size_t e = 0; e < of.size(); ++e) colors[e] = tau[of.color_at(e)];
  return Coloring::from_colors(n, std::move(colors));
}

Coloring permute_vertices(const Coloring& of, std::span<const Vertex> perm) {
  const int n = of.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
  std::vector<Color> colors(of.size());
  std::size_t e = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++e) colors[edge_index(n, perm[a], perm[b])] = of.color_at(e);
  }
  return Coloring::from_colors(n, std::move(colors));
}

std::vector<Coloring> enumerate_ofs(int n, Labeling labeling) {
  check_order(n);
  if (n > 8) throw std::invalid_argument("enumeration is limited to n <= 8");
  if (labeling == Labeling::Colorings && n > 6) throw std::invalid_argument("labeled enumeration is limited to n <= 6");
  std::vector<Coloring> base = Enumerator(n).run();
  if (labeling == Labeling::Factorizations) return base;

  std::vector<Coloring> out;
  std::vector<Color> tau(n - 1);
  for (const Coloring& of : base) {
    std::iota(tau.begin(), tau.end(), 1);
    do {
      std::vector<Color> colors(of.size());
      for (std::size_t e = 0; e < of.size(); ++e) colors[e] = tau[of.color_at(e) - 1];
      out.push_back(Coloring::from_colors(n, std::move(colors)));
    } while (std::next_permutation(tau.begin(), tau.end()));
  }
  return out;
}

std::vector<int> cycle_type(const Coloring& of, Color c1, Color c2) {
  require_of(of);
  const int n = of.order();
  if (c1 < 1 || c2 < 1 || c1 >= n || c2 >= n || c1 == c2) throw std::invalid_argument("need two distinct colors");
  std::vector<int> lengths;
  for (const auto& cycle : two_class_cycles(mates(of), n, c1, c2)) lengths.push_back(static_cast<int>(cycle.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string of_fingerprint(const Coloring& of, int level) {
  require_of(of);
  const int n = of.order();
  const auto mate = mates(of);
  std::vector<std::string> types;
  for (Color c1 = 1; c1 < n; ++c1) {
    for (Color c2 = c1 + 1; c2 < n; ++c2) {
      std::vector<int> lengths;
      for (const auto& cycle : two_class_cycles(mate, n, c1, c2)) lengths.push_back(static_cast<int>(cycle.size()));
      std::sort(lengths.begin(), lengths.end());
      std::string t;
      for (int len : lengths) t += (t.empty() ? "" : ".") + std::to_string(len);
      types.push_back(std::move(t));
    }
  }
  std::sort(types.begin(), types.end());
  std::string out;
  for (const auto& t : types) out += (out.empty() ? "" : " ") + t;
  if (level < 2) return out;

  std::vector<int> girths;
  for (Color c1 = 1; c1 < n; ++c1) {
    for (Color c2 = c1 + 1; c2 < n; ++c2) {
      for (Color c3 = c2 + 1; c3 < n; ++c3) {
        const Color chosen[] = {c1, c2, c3};
        girths.push_back(girth(union_graph(of, chosen)).value_or(0));
      }
    }
  }
  std::sort(girths.begin(), girths.end());
  out += " /";
  for (int g : girths) out += " " + std::to_string(g);
  return out;
}

std::int64_t IsoClassTable::total() const {
  std::int64_t t = 0;
  for (const auto& c : classes) t += c.size;
  return t;
}

const IsoClass* IsoClassTable::find(char label) const {
  for (const auto& c : classes) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

IsoClassTable isomorphism_classes(const std::vector<Coloring>& ofs, int n) {
  check_order(n);
  if (n > 8) throw std::invalid_argument("isomorphism classes are limited to n <= 8");
  if (ofs.empty()) throw std::invalid_argument("empty list");

  std::unordered_set<Key> raw;
  std::map<Key, std::int64_t> multiplicity;  // normalized key -> copies in input
  for (const Coloring& of : ofs) {
    if (of.order() != n) throw std::invalid_argument("coloring of the wrong order");
    require_of(of);
    if (!raw.insert(key_of(of)).second) throw std::invalid_argument("duplicate coloring in list");
    ++multiplicity[key_of(normalize_colors(of))];
  }
  const std::int64_t m = multiplicity.begin()->second;
  const std::int64_t color_perms = factorial(n - 1);
  for (const auto& [key, count] : multiplicity) {
    if (count != m || (m != 1 && m != color_perms)) throw std::invalid_argument("incomplete list");
  }

  IsoClassTable table;
  table.n = n;
  table.labeling = m == 1 ? Labeling::Factorizations : Labeling::Colorings;

  std::unordered_set<Key> assigned;
  for (const auto& [key, count] : multiplicity) {
    if (assigned.contains(key)) continue;
    const std::vector<Color> colors(key.begin(), key.end());
    std::unordered_set<Key> orbit;
    std::int64_t autos = 0;
    Key least = key;
    std::vector<Vertex> inv(n);
    for_each_permutation(n, [&](const std::vector<Vertex>& perm) {
      for (Vertex v = 0; v < n; ++v) inv[perm[v]] = v;
      Key image = normalized_image(colors, n, inv);
      if (image == key) ++autos;
      if (!multiplicity.contains(image)) throw std::invalid_argument("incomplete list");
      if (image < least) least = image;
      orbit.insert(std::move(image));
    });
    assigned.insert(orbit.begin(), orbit.end());
    IsoClass cls;
    cls.representative = from_key(n, least);
    cls.size = static_cast<std::int64_t>(orbit.size()) * m;
    cls.automorphisms = autos;
    if (static_cast<std::int64_t>(orbit.size()) * autos != factorial(n)) throw std::logic_error("orbit-stabilizer mismatch");
    table.classes.push_back(std::move(cls));
  }

  std::sort(table.classes.begin(), table.classes.end(), [](const IsoClass& a, const IsoClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return std::lexicographical_compare(a.representative.colors().begin(), a.representative.colors().end(),
                                        b.representative.colors().begin(), b.representative.colors().end());
  });
  // For n = 8 the letters follow the expected-share table: A = 30, D = 420,
  // E = 630, F = 960, C = 1680, B = 2520 (ascending size).
  const std::string letters = n == 8 && table.classes.size() == 6 ? "ADEFCB" : "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    table.classes[i].label = i < letters.size() ? letters[i] : '?';
  }

  for (int level = 1; level <= 2; ++level) {
    std::set<std::string> seen;
    for (auto& cls : table.classes) {
      cls.fingerprint = of_fingerprint(cls.representative, level);
      seen.insert(cls.fingerprint);
    }
    table.fingerprint_level = level;
    table.fingerprints_distinct = seen.size() == table.classes.size();
    if (table.fingerprints_distinct) break;
  }
  return table;
}

bool isomorphic(const Coloring& a, const Coloring& b) {
  require_of(a);
  require_of(b);
  const int n = a.order();
  if (b.order() != n) return false;
  if (n > 8) throw std::invalid_argument("exact isomorphism test is limited to n <= 8");
  if (of_fingerprint(a) != of_fingerprint(b)) return false;
  const Key target = key_of(normalize_colors(b));
  const std::vector<Color> colors = colors_of(a);
  std::vector<Vertex> inv(n);
  bool found = false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (Vertex v = 0; v < n; ++v) inv[perm[v]] = v;
    found = normalized_image(colors, n, inv) == target;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  return found;
}

std::int64_t count_automorphisms(const Coloring& of) {
  require_of(of);
  const int n = of.order();
  if (n > 8) throw std::invalid_argument("automorphism count is limited to n <= 8");
  const Key self = key_of(normalize_colors(of));
  const std::vector<Color> colors = colors_of(of);
  std::vector<Vertex> inv(n);
  std::int64_t count = 0;
  for_each_permutation(n, [&](const std::vector<Vertex>& perm) {
    for (Vertex v = 0; v < n; ++v) inv[perm[v]] = v;
    if (normalized_image(colors, n, inv) == self) ++count;
  });
  return count;
}

const IsoClassTable& of8_table() {
  static const IsoClassTable table = isomorphism_classes(enumerate_ofs(8), 8);
  return table;
}

char classify_of8(const Coloring& of) {
  if (of.order() != 8 || !of.is_one_factorization()) throw std::invalid_argument("not a one-factorization of K_8");
  const IsoClassTable& table = of8_table();
  const std::string fp = of_fingerprint(of, table.fingerprint_level);
  std::vector<const IsoClass*> candidates;
  for (const auto& cls : table.classes) {
    if (cls.fingerprint == fp) candidates.push_back(&cls);
  }
  if (candidates.size() == 1) return candidates.front()->label;
  for (const IsoClass* cls : candidates) {
    if (isomorphic(of, cls->representative)) return cls->label;
  }
  throw std::logic_error("OF_8 matches no class");
}

std::string table_to_json(const IsoClassTable& table) {
  nlohmann::ordered_json j;
  j["n"] = table.n;
  j["labeling"] = table.labeling == Labeling::Factorizations ? "factorizations" : "colorings";
  j["total"] = table.total();
  j["fingerprint_level"] = table.fingerprint_level;
  j["fingerprints_distinct"] = table.fingerprints_distinct;
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& cls : table.classes) {
    nlohmann::ordered_json c;
    c["label"] = std::string(1, cls.label);
    c["size"] = cls.size;
    c["automorphisms"] = cls.automorphisms;
    c["fingerprint"] = cls.fingerprint;
    c["representative"] = to_text(cls.representative);
    j["classes"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

IsoClassTable table_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad class table: ") + e.what());
  }
  try {
    IsoClassTable table;
    table.n = j.at("n").get<int>();
    table.labeling = j.at("labeling").get<std::string>() == "colorings" ? Labeling::Colorings : Labeling::Factorizations;
    table.fingerprint_level = j.at("fingerprint_level").get<int>();
    table.fingerprints_distinct = j.at("fingerprints_distinct").get<bool>();
    for (const auto& c : j.at("classes")) {
      IsoClass cls;
      const auto label = c.at("label").get<std::string>();
      if (label.size() != 1) throw std::invalid_argument("bad class label");
      cls.label = label[0];
      cls.size = c.at("size").get<std::int64_t>();
      cls.automorphisms = c.at("automorphisms").get<std::int64_t>();
      cls.fingerprint = c.at("fingerprint").get<std::string>();
      cls.representative = parse_coloring(c.at("representative").get<std::string>());
      table.classes.push_back(std::move(cls));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad class table: ") + e.what());
  }
}

bool kotzig_perfect(const Coloring& of) {
  require_of(of);
  const int n = of.order();
  const auto mate = mates(of);
  for (Color c1 = 1; c1 < n; ++c1) {
    for (Color c2 = c1 + 1; c2 < n; ++c2) {
      if (two_class_cycles(mate, n, c1, c2).size() != 1) return false;
    }
  }
  return true;
}

std::int64_t deficit(const Coloring& coloring, std::span<const Vertex> subset) {
  const int n = coloring.order();
  std::vector<bool> in(n, false);
  for (Vertex v : subset) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (in[v]) throw std::invalid_argument("vertex listed twice");
    in[v] = true;
  }
  std::vector<bool> present(n, false);
  std::int64_t distinct = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      const Color c = coloring.color(subset[i], subset[j]);
      if (!present[c]) {
        present[c] = true;
        ++distinct;
      }
    }
  }
  return choose2(static_cast<std::int64_t>(subset.size())) - distinct;
}

std::vector<Vertex> deficit_witness(const Coloring& of, int k) {
  require_of(of);
  const int n = of.order();
  if (k < 4 || k > n) throw std::invalid_argument("k must lie in [4, n]");
  const auto mate = mates(of);

  auto verified = [&](std::vector<Vertex> s) {
    if (deficit(of, s) < k - 3) throw std::logic_error("deficit witness failed verification");
    std::sort(s.begin(), s.end());
    return s;
  };

  // k consecutive vertices on one alternating cycle: k-1 edges in two colors.
  for (Color c1 = 1; c1 < n; ++c1) {
    for (Color c2 = c1 + 1; c2 < n; ++c2) {
      for (const auto& cycle : two_class_cycles(mate, n, c1, c2)) {
        if (static_cast<int>(cycle.size()) >= k) return verified({cycle.begin(), cycle.begin() + k});
      }
    }
  }
  // Whole cycles plus one partial path still span at least k-1 edges.
  auto cycles = two_class_cycles(mate, n, 1, 2);
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<Vertex> s;
  for (const auto& cycle : cycles) {
    const std::size_t room = static_cast<std::size_t>(k) - s.size();
    if (room == 0) break;
    const std::size_t take = std::min(room, cycle.size());
    s.insert(s.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return verified(std::move(s));
}

std::size_t induced_edges(const UnionGraph& graph, std::span<const Vertex> subset) {
  std::vector<bool> in(graph.n, false);
  for (Vertex v : subset) in.at(v) = true;
  std::size_t count = 0;
  for (Vertex x : subset) {
    for (Vertex y : graph.adjacency[x]) {
      if (x < y && in[y]) ++count;
    }
  }
  return count;
}

namespace {

// Vertices of a shortest cycle among the vertices not in `blocked`
// (possibly with a tail; the set always contains a cycle).
std::vector<Vertex> shortest_cycle(const UnionGraph& g, const std::vector<bool>& blocked) {
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> best_set;
  std::vector<int> dist(g.n);
  std::vector<Vertex> parent(g.n);
  for (Vertex root = 0; root < g.n; ++root) {
    if (blocked[root]) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    Vertex bx = -1, by = -1;
    while (!queue.empty() && bx < 0) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g.adjacency[x]) {
        if (blocked[y]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          bx = x;
          by = y;
          break;
        }
      }
    }
    if (bx < 0 || dist[bx] + dist[by] + 1 >= best) continue;
    best = dist[bx] + dist[by] + 1;
    std::set<Vertex> s;
    for (Vertex v = bx; v >= 0; v = parent[v]) s.insert(v);
    for (Vertex v = by; v >= 0; v = parent[v]) s.insert(v);
    best_set.assign(s.begin(), s.end());
  }
  return best_set;
}

// Shortest path system x ~> W, y ~> W closed by a non-tree edge xy.
// Returns the new vertices, or empty if W's component offers no ear.
std::vector<Vertex> shortest_ear(const UnionGraph& g, const std::vector<bool>& in) {
  std::vector<int> dist(g.n, -1);
  std::vector<Vertex> parent(g.n, -1);
  std::queue<Vertex> queue;
  for (Vertex v = 0; v < g.n; ++v) {
    if (in[v]) {
      dist[v] = 0;
      queue.push(v);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.adjacency[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push(y);
      }
    }
  }
  int best = std::numeric_limits<int>::max();
  Vertex bx = -1, by = -1;
  for (Vertex x = 0; x < g.n; ++x) {
    if (dist[x] < 0) continue;
    for (Vertex y : g.adjacency[x]) {
      if (y < x || (in[x] && in[y]) || parent[x] == y || parent[y] == x) continue;
      if (dist[x] + dist[y] < best) {
        best = dist[x] + dist[y];
        bx = x;
        by = y;
      }
    }
  }
  std::vector<Vertex> added;
  if (bx < 0) return added;
  for (Vertex v = bx; !in[v]; v = parent[v]) added.push_back(v);
  for (Vertex v = by; !in[v]; v = parent[v]) added.push_back(v);
  std::sort(added.begin(), added.end());
  added.erase(std::unique(added.begin(), added.end()), added.end());
  return added;
}

}  // namespace

std::optional<std::vector<Vertex>> dense_small_set(const UnionGraph& graph, int a) {
  if (a < 0) throw std::invalid_argument("a must be non-negative");
  std::vector<bool> in(graph.n, false);
  std::vector<Vertex> w;
  auto add = [&](const std::vector<Vertex>& vs) {
    for (Vertex v : vs) {
      if (!in[v]) {
        in[v] = true;
        w.push_back(v);
      }
    }
  };
  auto surplus = [&] { return static_cast<long>(induced_edges(graph, w)) - static_cast<long>(w.size()); };

  add(shortest_cycle(graph, in));
  while (!w.empty() && surplus() < a) {
    std::vector<Vertex> ear = shortest_ear(graph, in);
    if (ear.empty()) ear = shortest_cycle(graph, in);
    if (ear.empty()) break;
    add(ear);
  }
  if (!w.empty() && surplus() >= a) {
    std::sort(w.begin(), w.end());
    return w;
  }
  if (graph.n <= 12) return dense_small_set_exhaustive(graph, a);
  return std::nullopt;
}

std::optional<std::vector<Vertex>> dense_small_set_exhaustive(const UnionGraph& graph, int a) {
  if (graph.n > 20) throw std::invalid_argument("exhaustive search is limited to n <= 20");
  std::vector<std::uint32_t> adj(graph.n, 0);
  for (Vertex x = 0; x < graph.n; ++x) {
    for (Vertex y : graph.adjacency[x]) adj[x] |= 1u << y;
  }
  std::optional<std::uint32_t> best;
  for (std::uint32_t mask = 1; mask < (1u << graph.n); ++mask) {
    const int size = std::popcount(mask);
    if (best && size >= std::popcount(*best)) continue;
    int twice = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) twice += std::popcount(adj[std::countr_zero(rest)] & mask);
    if (twice / 2 >= size + a) best = mask;
  }
  if (!best) return std::nullopt;
  std::vector<Vertex> w;
  for (Vertex v = 0; v < graph.n; ++v) {
    if (*best >> v & 1u) w.push_back(v);
  }
  return w;
}

}  // namespace onefact
