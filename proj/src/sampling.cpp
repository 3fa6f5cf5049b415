#include "onefact/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "onefact/analysis.hpp"

namespace onefact {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
}

struct Proposal {
  Vertex a;
  Vertex b;
  std::size_t e;
  Color from;
  Color to;
};

Proposal propose(const Coloring& c, Rng& rng) {
  const int n = c.order();
  const Vertex a = rng.below(n);
  Vertex b = rng.below(n - 1);
  if (b >= a) ++b;
  const std::size_t e = edge_index(n, a, b);
  const Color from = c.color_at(e);
  Color to = 1 + rng.below(n - 2);
  if (to >= from) ++to;
  return {a, b, e, from, to};
}

}  // namespace

bool metropolis_step(Coloring& coloring, double epsilon, Rng& rng) {
  check_epsilon(epsilon);
  if (coloring.order() <= 2) return false;
  const Proposal m = propose(coloring, rng);
  const std::int64_t d = coloring.delta_psi_fast(m.a, m.b, m.from, m.to);
  if (d > 0 && !rng.bernoulli(std::pow(epsilon, static_cast<double>(d)))) return false;
  coloring.recolor_fast(m.a, m.b, m.e, m.to);
  return true;
}

MetropolisOutcome run_metropolis(Coloring start, const MetropolisParams& params,
                                 const std::function<void(const Coloring&)>& observer) {
  check_epsilon(params.epsilon);
  if (params.max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
  Rng rng(params.seed);
  MetropolisOutcome out;
  out.walk.terminal = std::move(start);
  Coloring& c = out.walk.terminal;
  const int n = c.order();
  if (params.record_trace) out.walk.trace.emplace();

  // acceptance[d] = epsilon^d for every reachable uphill delta.
  std::vector<double> acceptance(2 * static_cast<std::size_t>(n) + 2);
  for (std::size_t d = 0; d < acceptance.size(); ++d) acceptance[d] = std::pow(params.epsilon, static_cast<double>(d));

  if (params.stop_at_first_of && c.psi() == 0) {
    out.walk.status = WalkStatus::ReachedOf;
    return out;
  }
  bool on_of = false;
  while (out.walk.steps < params.max_steps) {
    if (n > 2) {
      const Proposal m = propose(c, rng);
      const std::int64_t d = c.delta_psi_fast(m.a, m.b, m.from, m.to);
      const bool take = d <= 0 || rng.uniform01() < acceptance[static_cast<std::size_t>(d)];
      if (take) {
        c.recolor_fast(m.a, m.b, m.e, m.to);
        ++out.accepted;
      }
      if (out.walk.trace) {
        out.walk.trace->record(out.walk.steps + 1, c.psi(), take ? StepKind::Accept : StepKind::Reject,
                               Recolor{std::min(m.a, m.b), std::max(m.a, m.b), m.from, m.to});
      }
    }
    ++out.walk.steps;
    if (c.psi() == 0) {
      ++out.of_steps;
      if (!on_of || out.of_visits.back().state != c) {
        out.of_visits.push_back(OfVisit{out.walk.steps, 0, c});
      }
      ++out.of_visits.back().dwell;
      on_of = true;
    } else {
      on_of = false;
    }
    if (observer) observer(c);
    if (params.stop_at_first_of && c.psi() == 0) break;
  }
  out.walk.status = c.psi() == 0 ? WalkStatus::ReachedOf : WalkStatus::StepLimit;
  return out;
}

std::size_t state_count(int n) {
  std::size_t total = 1;
  for (std::size_t e = 0; e < num_edges(n); ++e) total *= static_cast<std::size_t>(n - 1);
  return total;
}

std::size_t state_index(const Coloring& coloring) {
  std::size_t index = 0;
  const auto base = static_cast<std::size_t>(coloring.order() - 1);
  for (std::size_t e = coloring.size(); e-- > 0;) index = index * base + static_cast<std::size_t>(coloring.color_at(e) - 1);
  return index;
}

Coloring state_at(int n, std::size_t index) {
  const auto base = static_cast<std::size_t>(n - 1);
  std::vector<Color> colors(num_edges(n));
  for (auto& c : colors) {
    c = static_cast<Color>(index % base) + 1;
    index /= base;
  }
  return Coloring::from_colors(n, std::move(colors));
}

StationaryResult exact_stationary(int n, double epsilon) {
  if (n != 4) throw std::invalid_argument("exact stationary distribution is only built for n = 4");
  check_epsilon(epsilon);
  const std::size_t states = state_count(n);
  const auto proposals = static_cast<double>(num_edges(n) * static_cast<std::size_t>(n - 2));

  StationaryResult r;
  r.n = n;
  r.epsilon = epsilon;
  r.transition = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(states), static_cast<Eigen::Index>(states));
  r.psi.resize(states);
  for (std::size_t i = 0; i < states; ++i) {
    const Coloring c = state_at(n, i);
    r.psi[i] = c.psi();
    double stay = 1.0;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        for (Color to = 1; to < n; ++to) {
          if (to == c.color(a, b)) continue;
          const std::int64_t d = c.delta_psi(a, b, to);
          const double accept = d <= 0 ? 1.0 : std::pow(epsilon, static_cast<double>(d));
          Coloring next = c;
          next.recolor(a, b, to);
          const double prob = accept / proposals;
          r.transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(state_index(next))) += prob;
          stay -= prob;
        }
      }
    }
    r.transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += stay;
  }

  // Solve pi (P - I) = 0 with sum(pi) = 1 replacing the last equation.
  const auto size = static_cast<Eigen::Index>(states);
  Eigen::MatrixXd system = r.transition.transpose() - Eigen::MatrixXd::Identity(size, size);
  system.row(size - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(size - 1) = 1.0;
  r.pi = system.partialPivLu().solve(rhs);

  r.target.resize(size);
  for (Eigen::Index i = 0; i < size; ++i) r.target(i) = std::pow(epsilon, static_cast<double>(r.psi[static_cast<std::size_t>(i)]));
  r.target /= r.target.sum();

  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      if (i == j || r.transition(i, j) == 0.0) continue;
      r.balance_residual =
          std::max(r.balance_residual, std::abs(r.pi(i) * r.transition(i, j) - r.pi(j) * r.transition(j, i)));
    }
  }
  r.target_residual = (r.pi - r.target).cwiseAbs().maxCoeff();
  return r;
}

Coloring perturb(const Coloring& coloring, double p, Rng& rng, bool force_change) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const int n = coloring.order();
  std::vector<Color> colors(coloring.colors().begin(), coloring.colors().end());
  for (auto& c : colors) {
    if (!rng.bernoulli(p)) continue;
    if (force_change && n > 2) {
      Color to = 1 + rng.below(n - 2);
      if (to >= c) ++to;
      c = to;
    } else {
      c = 1 + rng.below(n - 1);
    }
  }
  return Coloring::from_colors(n, std::move(colors));
}

RestartResult restart_experiment(int n, double p, std::int64_t trials, Rng& rng, std::int64_t max_steps,
                                 bool force_change) {
  check_order(n);
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  RestartResult r;
  r.p = p;
  r.trials = trials;
  if (n == 8) r.different_class = 0;

  WalkOutcome first;
  do {
    first = run_walk(Coloring::random(n, rng), WalkMode::Mild, max_steps, rng);
  } while (first.status != WalkStatus::ReachedOf);
  Coloring current = std::move(first.terminal);

  for (std::int64_t t = 0; t < trials; ++t) {
    WalkOutcome next = run_walk(perturb(current, p, rng, force_change), WalkMode::Mild, max_steps, rng);
    if (next.status != WalkStatus::ReachedOf) continue;
    ++r.completed;
    if (next.terminal != current) ++r.different;
    if (n == 8 && classify_of8(next.terminal) != classify_of8(current)) ++r.different_class;
    current = std::move(next.terminal);
  }
  return r;
}

}  // namespace onefact
