#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "onefact/coloring.hpp"

namespace onefact {

/// Simple graph on n vertices, usually the union of some color classes of a
/// one-factorization (then d-regular).
struct UnionGraph {
  int n = 0;
  int degree = -1;  // common degree, or -1 if not regular
  std::vector<std::vector<Vertex>> adjacency;  // sorted neighbor lists

  std::size_t edge_count() const;
  bool has_edge(Vertex a, Vertex b) const;

  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y : adjacency[x]) a(x, y) = Scalar(1);
    }
    return a;
  }
};

/// Graph from an explicit edge list. Throws on loops or repeated edges.
UnionGraph make_graph(int n, const std::vector<Edge>& edges);

/// Union of the given color classes of a one-factorization.
/// Throws std::invalid_argument if the coloring is not proper or a color
/// repeats or is out of range.
UnionGraph union_graph(const Coloring& of, std::span<const Color> colors);

struct JacobiOptions {
  double tolerance = 1e-12;  // on the off-diagonal Frobenius norm
  int max_sweeps = 100;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted in descending order.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(const Eigen::MatrixBase<Derived>& input,
                                                                                const JacobiOptions& options = {}) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (input.rows() != input.cols()) throw std::invalid_argument("matrix must be square");
  Matrix a = input;
  const Eigen::Index n = a.rows();

  auto off_norm2 = [&] {
    Scalar s(0);
    for (Eigen::Index q = 1; q < n; ++q) s += a.col(q).head(q).squaredNorm();
    return Scalar(2) * s;
  };
  const Scalar tol2 = Scalar(options.tolerance) * Scalar(options.tolerance);

  for (int sweep = 0; sweep < options.max_sweeps && off_norm2() >= tol2; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        Scalar t = Scalar(1) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        if (theta < Scalar(0)) t = -t;
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        const Scalar tau = s / (Scalar(1) + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = Scalar(0);
        Scalar* colp = a.col(p).data();
        Scalar* colq = a.col(q).data();
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar g = colp[r];
          const Scalar h = colq[r];
          colp[r] = g - s * (h + g * tau);
          colq[r] = h + s * (g - h * tau);
        }
        a.row(p) = a.col(p).transpose();
        a.row(q) = a.col(q).transpose();
      }
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values = a.diagonal();
  std::sort(values.data(), values.data() + n, [](Scalar x, Scalar y) { return x > y; });
  return values;
}

/// All adjacency eigenvalues, descending.
std::vector<double> spectrum(const UnionGraph& graph, const JacobiOptions& options = {});

/// Every eigenvalue other than the trivial d (and -d, if present) has
/// absolute value at most 2 sqrt(d-1) + 1e-9.
bool is_ramanujan(std::span<const double> eigenvalues, int d);
bool is_ramanujan(const UnionGraph& graph, int d);

/// Length of a shortest cycle; nullopt for a forest.
std::optional<int> girth(const UnionGraph& graph);

/// 2 log n / log(d-1); +infinity for d = 2. Throws for d < 2.
double moore_bound(int n, int d);

}  // namespace onefact
