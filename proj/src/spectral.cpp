#include "onefact/spectral.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace onefact {

std::size_t UnionGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : adjacency) total += nb.size();
  return total / 2;
}

bool UnionGraph::has_edge(Vertex a, Vertex b) const {
  return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

namespace {

void finish(UnionGraph& g) {
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
  g.degree = g.n == 0 ? 0 : static_cast<int>(g.adjacency[0].size());
  for (const auto& nb : g.adjacency) {
    if (static_cast<int>(nb.size()) != g.degree) g.degree = -1;
  }
}

}  // namespace

UnionGraph make_graph(int n, const std::vector<Edge>& edges) {
  UnionGraph g;
  g.n = n;
  g.adjacency.resize(n);
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw std::invalid_argument("bad edge");
    g.adjacency[e.u].push_back(e.v);
    g.adjacency[e.v].push_back(e.u);
  }
  finish(g);
  for (const auto& nb : g.adjacency) {
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw std::invalid_argument("repeated edge");
  }
  return g;
}

UnionGraph union_graph(const Coloring& of, std::span<const Color> colors) {
  if (!of.is_one_factorization()) throw std::invalid_argument("coloring is not proper");
  const int n = of.order();
  std::vector<bool> chosen(n, false);
  for (Color c : colors) {
    if (c < 1 || c >= n) throw std::invalid_argument("color out of range");
    if (chosen[c]) throw std::invalid_argument("color listed twice");
    chosen[c] = true;
  }
  UnionGraph g;
  g.n = n;
  g.adjacency.resize(n);
  std::size_t e = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++e) {
      if (!chosen[of.color_at(e)]) continue;
      g.adjacency[a].push_back(b);
      g.adjacency[b].push_back(a);
    }
  }
  finish(g);
  return g;
}

std::vector<double> spectrum(const UnionGraph& graph, const JacobiOptions& options) {
  const Eigen::VectorXd values = jacobi_eigenvalues(graph.adjacency_matrix<double>(), options);
  return {values.data(), values.data() + values.size()};
}

bool is_ramanujan(std::span<const double> eigenvalues, int d) {
  constexpr double kSlack = 1e-9;
  const double bound = 2.0 * std::sqrt(static_cast<double>(d - 1)) + kSlack;
  std::vector<double> rest(eigenvalues.begin(), eigenvalues.end());
  std::sort(rest.begin(), rest.end());
  if (!rest.empty() && std::abs(rest.back() - d) <= kSlack) rest.pop_back();
  if (!rest.empty() && std::abs(rest.front() + d) <= kSlack) rest.erase(rest.begin());
  return std::all_of(rest.begin(), rest.end(), [bound](double x) { return std::abs(x) <= bound; });
}

bool is_ramanujan(const UnionGraph& graph, int d) { return is_ramanujan(spectrum(graph), d); }

std::optional<int> girth(const UnionGraph& graph) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(graph.n);
  std::vector<Vertex> parent(graph.n);
  for (Vertex root = 0; root < graph.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : graph.adjacency[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

double moore_bound(int n, int d) {
  if (d < 2) throw std::invalid_argument("Moore bound needs d >= 2");
  if (d == 2) return std::numeric_limits<double>::infinity();
  return 2.0 * std::log(static_cast<double>(n)) / std::log(static_cast<double>(d - 1));
}

}  // namespace onefact
