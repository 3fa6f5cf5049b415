#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "onefact/coloring.hpp"
#include "onefact/rng.hpp"
#include "onefact/walks.hpp"

namespace onefact {

struct MetropolisParams {
  double epsilon = 0.5;  // in (0, 1]
  std::int64_t max_steps = 0;
  std::uint64_t seed = 0;
  bool stop_at_first_of = false;
  bool record_trace = false;  // Accept / Reject entries in walk.trace
};

/// One Metropolis step: a uniform single-edge proposal, taken if psi does not
/// rise and otherwise with probability epsilon^(delta psi). Returns whether
/// the proposal was taken.
bool metropolis_step(Coloring& coloring, double epsilon, Rng& rng);

struct OfVisit {
  std::int64_t enter_step = 0;
  std::int64_t dwell = 0;  // consecutive steps spent on this OF
  Coloring state;
};

struct MetropolisOutcome {
  WalkOutcome walk;
  std::vector<OfVisit> of_visits;
  std::int64_t of_steps = 0;  // steps after which the chain sat on an OF
  std::int64_t accepted = 0;

  double of_occupancy() const {
    return walk.steps == 0 ? 0.0 : static_cast<double>(of_steps) / static_cast<double>(walk.steps);
  }
};

/// Runs the chain for params.max_steps steps (or to the first OF when
/// stop_at_first_of is set). `observer`, if given, sees the state after every
/// step including holds.
MetropolisOutcome run_metropolis(Coloring start, const MetropolisParams& params,
                                 const std::function<void(const Coloring&)>& observer = {});

/// Index of a coloring among all (n-1)^C(n,2) colorings (base n-1 digits in
/// edge order). Only meaningful for tiny n.
std::size_t state_index(const Coloring& coloring);
Coloring state_at(int n, std::size_t index);
std::size_t state_count(int n);

struct StationaryResult {
  int n = 4;
  double epsilon = 0.0;
  Eigen::MatrixXd transition;
  Eigen::VectorXd pi;      // solved stationary distribution
  Eigen::VectorXd target;  // epsilon^psi, normalized
  std::vector<std::int64_t> psi;
  double balance_residual = 0.0;  // max |pi_i P_ij - pi_j P_ji|
  double target_residual = 0.0;   // max |pi_i - target_i|
};

/// Dense transition matrix of the chain over all 729 colorings of K_4 and its
/// stationary distribution. Throws std::invalid_argument unless n == 4.
StationaryResult exact_stationary(int n, double epsilon);

/// Resamples each edge with probability p, uniformly over all n-1 colors
/// (or over the other n-2 colors when force_change is set).
Coloring perturb(const Coloring& coloring, double p, Rng& rng, bool force_change = false);

struct RestartResult {
  double p = 0.0;
  std::int64_t trials = 0;
  std::int64_t completed = 0;  // trials whose walk reached an OF
  std::int64_t different = 0;
  std::int64_t different_class = -1;  // counted only for n == 8

  double escape_fraction() const { return completed == 0 ? 0.0 : static_cast<double>(different) / completed; }
  double class_escape_fraction() const {
    return completed == 0 || different_class < 0 ? 0.0 : static_cast<double>(different_class) / completed;
  }
};

/// Mild walk to an OF F; then per trial perturb F with p, mild-walk back to
/// an OF F', compare with F and continue from F'.
RestartResult restart_experiment(int n, double p, std::int64_t trials, Rng& rng, std::int64_t max_steps = 1'000'000,
                                 bool force_change = false);

}  // namespace onefact
