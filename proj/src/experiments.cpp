#include "onefact/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

#include "onefact/analysis.hpp"
#include "onefact/flips.hpp"
#include "onefact/heuristics.hpp"
#include "onefact/sampling.hpp"
#include "onefact/spectral.hpp"
#include "onefact/walks.hpp"

namespace onefact {

namespace {

using Json = nlohmann::ordered_json;

bool one_of(const std::string& name, std::span<const char* const> names) {
  return std::any_of(names.begin(), names.end(), [&](const char* s) { return name == s; });
}

bool produces_of(const std::string& algorithm) { return algorithm != "latin"; }

std::uint64_t need_seed(const ExperimentConfig& config) {
  if (!config.seed) throw UsageError("--seed is required for randomized commands");
  return *config.seed;
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

double quantile(std::vector<std::int64_t> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto k = static_cast<std::size_t>(std::floor(q * static_cast<double>(values.size() - 1)));
  return static_cast<double>(values[k]);
}

double median(std::vector<std::int64_t> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[m]);
  return 0.5 * static_cast<double>(values[m - 1] + values[m]);
}

std::string_view kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::Walk:
      return "walk";
    case StepKind::Escape:
      return "escape";
    case StepKind::Unrolled:
      return "unrolled";
    case StepKind::Accept:
      return "accept";
    case StepKind::Reject:
      return "reject";
  }
  return "?";
}

// Rows of the per-step trace CSV; vertices 1-based.
std::string trace_rows(std::int64_t run, const WalkTrace& trace) {
  std::ostringstream out;
  for (const TraceEntry& e : trace.entries()) {
    out << run << ',' << e.step << ',' << e.psi << ',' << kind_name(e.kind) << ',';
    if (const auto* r = std::get_if<Recolor>(&e.move)) {
      out << "recolor," << r->u + 1 << ',' << r->v + 1 << ',' << r->from << ',' << r->to << ",,\n";
    } else {
      const auto& f = std::get<Flip>(e.move);
      out << "flip," << f.u + 1 << ',' << f.v + 1 << ",,,";
      for (std::size_t i = 0; i < f.swapped.size(); ++i) out << (i ? " " : "") << f.swapped[i] + 1;
      out << ',';
      if (f.lead) out << f.lead->u + 1 << '-' << f.lead->v + 1 << ':' << f.lead->from << '>' << f.lead->to;
      out << '\n';
    }
  }
  return out.str();
}

constexpr const char* kTraceHeader = "run,step,psi,kind,move,u,v,from,to,swapped,lead\n";
constexpr const char* kSummaryHeader =
    "n,algorithm,seed,run,steps,final_psi,status,flips_executed,escapes_case_a,escapes_case_b,max_psi_excess\n";

void summary_row(std::ostream& out, const ExperimentConfig& c, const RunRecord& r) {
  out << c.n << ',' << c.algorithm << ',' << *c.seed << ',' << r.run << ',' << r.steps << ',' << r.final_psi << ','
      << r.status << ',' << r.flips_executed << ',' << r.escapes_case_a << ',' << r.escapes_case_b << ','
      << r.max_psi_excess << '\n';
}

Json record_json(const RunRecord& r) {
  Json j;
  j["run"] = r.run;
  j["steps"] = r.steps;
  j["final_psi"] = r.final_psi;
  j["status"] = r.status;
  j["flips_executed"] = r.flips_executed;
  j["escapes_case_a"] = r.escapes_case_a;
  j["escapes_case_b"] = r.escapes_case_b;
  j["max_psi_excess"] = r.max_psi_excess;
  j["result"] = r.text.empty() ? Json(nullptr) : Json(r.text);
  return j;
}

}  // namespace

std::int64_t default_cap(const std::string& algorithm, int n) {
  const auto m = static_cast<std::int64_t>(n);
  if (algorithm == "ds") return 50 * m * m * m;
  if (algorithm == "four-switch" || algorithm == "latin") return 100'000;
  if (algorithm == "metropolis") return 100'000'000;
  return 100'000'000;  // walks; strict and weak always terminate
}

ExperimentConfig validated(ExperimentConfig config) {
  const std::string& cmd = config.command;
  if (cmd != "generate" && cmd != "experiment" && cmd != "verify" && cmd != "classes") {
    throw UsageError("unknown command '" + cmd + "'");
  }
  if (config.runs < 0 || config.samples < 1 || config.max_steps < 0) {
    throw UsageError("--runs, --samples and --max-steps must be positive");
  }
  if (config.epsilon && !(*config.epsilon > 0.0 && *config.epsilon <= 1.0)) {
    throw UsageError("--epsilon must lie in (0, 1]");
  }
  if (!(config.p >= 0.0 && config.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
  if (!(config.ds_step1 >= 0.0 && config.ds_step1 <= 1.0)) throw UsageError("--ds-step1 must lie in [0, 1]");

  if (cmd == "generate") {
    if (config.algorithm.empty()) config.algorithm = "strict";
    if (!one_of(config.algorithm, kAlgorithms)) throw UsageError("unknown algorithm '" + config.algorithm + "'");
    if (config.algorithm == "latin") {
      if (config.n < 1) throw UsageError("n must be positive");
    } else if (config.n < 2 || config.n % 2 != 0) {
      throw UsageError("n must be even");
    }
    if (config.runs == 0) config.runs = 1;
    if (!config.format) config.format = Format::Text;
    need_seed(config);
  } else if (cmd == "experiment") {
    if (!one_of(config.experiment, kExperiments)) {
      throw UsageError("unknown experiment '" + config.experiment + "'");
    }
    if (config.algorithm.empty()) config.algorithm = config.experiment == "convergence-scaling" ? "mild" : "strict";
    if (!one_of(config.algorithm, kAlgorithms)) throw UsageError("unknown algorithm '" + config.algorithm + "'");
    if (config.experiment == "of8-distribution" && !produces_of(config.algorithm)) {
      throw UsageError("of8-distribution needs an algorithm that produces one-factorizations");
    }
    if (config.experiment == "of8-distribution" && config.n != 8) throw UsageError("of8-distribution needs n = 8");
    if (config.n < 2 || config.n % 2 != 0) throw UsageError("n must be even");
    if (config.experiment == "convergence-scaling") {
      if (config.n_list.empty()) config.n_list = {8, 16, 32};
      for (int n : config.n_list) {
        if (n < 2 || n % 2 != 0) throw UsageError("n must be even");
      }
    }
    if (config.experiment == "spectra" && (config.d < 1 || config.d >= config.n)) {
      throw UsageError("--d must lie in [1, n-1]");
    }
    if (config.runs == 0) {
      config.runs = config.experiment == "epsilon-scan" ? 1 : config.experiment == "restart" ? 1000 : 10'000;
      if (config.experiment == "convergence-scaling") config.runs = 100;
    }
    if (!config.format) config.format = Format::Csv;
    need_seed(config);
  } else if (cmd == "verify") {
    if (!config.format) config.format = Format::Text;
  } else {
    if (!config.format) config.format = Format::Json;
  }
  return config;
}

RunRecord generate_one(const std::string& algorithm, int n, std::uint64_t seed, std::int64_t run,
                       std::int64_t max_steps, double epsilon, double ds_step1, bool record_trace) {
  Rng rng = Rng::for_replica(seed, static_cast<std::uint64_t>(run));
  const std::int64_t cap = max_steps > 0 ? max_steps : default_cap(algorithm, n);
  const auto started = std::chrono::steady_clock::now();
  RunRecord r;
  r.run = run;

  auto take_walk = [&](WalkOutcome& w) {
    r.steps = w.steps;
    r.final_psi = w.terminal.psi();
    r.status = std::string(to_string(w.status));
    if (w.status == WalkStatus::ReachedOf) r.of = w.terminal;
    if (w.trace) r.trace_csv = trace_rows(run, *w.trace);
  };
  auto take_heuristic = [&](HeuristicOutcome& h) {
    r.steps = h.steps;
    r.final_psi = h.final_psi;
    r.status = h.success ? "reached_of" : "step_limit";
    if (h.success) r.of = h.result;
  };

  if (algorithm == "mild") {
    WalkOutcome w = run_walk(Coloring::random(n, rng), WalkMode::Mild, cap, rng, record_trace);
    take_walk(w);
  } else if (algorithm == "strict" || algorithm == "weak") {
    Coloring start = Coloring::random(n, rng);
    GenerationOutcome g = algorithm == "strict" ? strict_algorithm(std::move(start), rng, record_trace)
                                                : weak_algorithm(std::move(start), rng, record_trace);
    r.steps = g.steps;
    r.final_psi = g.result.psi();
    r.status = "reached_of";
    r.flips_executed = g.flips_executed;
    r.escapes_case_a = g.escapes_case_a;
    r.escapes_case_b = g.escapes_case_b;
    r.max_psi_excess = g.max_psi_excess;
    r.of = g.result;
    if (record_trace) r.trace_csv = trace_rows(run, g.trace);
  } else if (algorithm == "metropolis") {
    MetropolisParams params;
    params.epsilon = epsilon;
    params.max_steps = cap;
    params.seed = rng.next();
    params.stop_at_first_of = true;
    params.record_trace = record_trace;
    MetropolisOutcome m = run_metropolis(Coloring::random(n, rng), params);
    take_walk(m.walk);
  } else if (algorithm == "ds") {
    HeuristicOutcome h = ds_run(n, DsPolicy{ds_step1}, cap, rng);
    take_heuristic(h);
  } else if (algorithm == "four-switch") {
    HeuristicOutcome h = four_switch_run(n, cap, rng);
    take_heuristic(h);
  } else if (algorithm == "latin") {
    LatinOutcome l = latin_strict_walk(n, cap, rng);
    r.steps = l.steps;
    r.final_psi = l.array.psi();
    r.status = l.status == LatinStatus::Latin ? "latin" : l.status == LatinStatus::Stuck ? "stuck" : "step_limit";
    if (l.status == LatinStatus::Latin) r.text = to_text(l.array);
  } else {
    throw UsageError("unknown algorithm '" + algorithm + "'");
  }

  if (r.of) {
    if (!r.of->is_one_factorization() || potential(*r.of).psi != 0) {
      throw std::logic_error("generator returned a coloring that is not a one-factorization");
    }
    r.text = to_text(*r.of);
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

int cmd_generate(const ExperimentConfig& raw, std::ostream& out, std::ostream* summary, std::ostream* trace,
                 std::ostream& log) {
  const ExperimentConfig config = validated(raw);
  const double epsilon = config.epsilon.value_or(0.1);
  int code = kExitOk;
  Json runs = Json::array();
  if (config.format == Format::Csv) out << kSummaryHeader;
  if (summary) *summary << kSummaryHeader;
  if (trace) *trace << kTraceHeader;
  bool first_text = true;

  for (std::int64_t run = 0; run < config.runs; ++run) {
    RunRecord r;
    try {
      r = generate_one(config.algorithm, config.n, *config.seed, run, config.max_steps, epsilon, config.ds_step1,
                       trace != nullptr);
    } catch (const std::logic_error& e) {
      log << "run " << run << ": verification failed: " << e.what() << '\n';
      return kExitVerification;
    }
    log << "run " << run << ": " << r.status << " after " << r.steps << " steps, " << fixed(r.wall_ms, 1) << " ms\n";
    const bool finished = !r.text.empty();
    if (!finished && produces_of(config.algorithm)) code = kExitVerification;

    if (config.format == Format::Text && finished) {
      out << (first_text ? "" : "\n") << r.text;
      first_text = false;
    } else if (config.format == Format::Csv) {
      summary_row(out, config, r);
    } else if (config.format == Format::Json) {
      runs.push_back(record_json(r));
    }
    if (summary) summary_row(*summary, config, r);
    if (trace) *trace << r.trace_csv;
  }
  if (config.format == Format::Json) {
    Json j;
    j["n"] = config.n;
    j["algorithm"] = config.algorithm;
    j["seed"] = *config.seed;
    j["runs"] = std::move(runs);
    out << j.dump(2) << '\n';
  }
  if (code != kExitOk) log << "some runs did not finish within the step cap\n";
  return code;
}

std::vector<ConvergenceRow> convergence_scaling(const std::string& algorithm, const std::vector<int>& n_list,
                                                std::int64_t runs, std::uint64_t seed, std::int64_t max_steps) {
  std::vector<ConvergenceRow> rows;
  for (int n : n_list) {
    const std::uint64_t stream = mix64(seed) ^ static_cast<std::uint64_t>(n);
    std::vector<std::int64_t> steps;
    for (std::int64_t run = 0; run < runs; ++run) {
      const RunRecord r = generate_one(algorithm, n, stream, run, max_steps, 0.5, 0.9, false);
      if (!r.text.empty()) steps.push_back(r.steps);
    }
    rows.push_back(ConvergenceRow{n, runs, static_cast<std::int64_t>(steps.size()), median(steps),
                                  quantile(steps, 0.1), quantile(steps, 0.9)});
  }
  return rows;
}

ClassCounts of8_distribution(const std::string& algorithm, std::int64_t runs, std::uint64_t seed,
                             std::int64_t max_steps, double epsilon) {
  ClassCounts out;
  for (char label : std::string("ABCDEF")) out.counts[label] = 0;
  for (std::int64_t run = 0; run < runs; ++run) {
    const RunRecord r = generate_one(algorithm, 8, seed, run, max_steps, epsilon, 0.9, false);
    if (r.of) {
      ++out.counts[classify_of8(*r.of)];
    } else {
      ++out.failed;
    }
  }
  return out;
}

const std::map<char, Of8Reference>& of8_reference() {
  static const std::map<char, Of8Reference> table = {
      {'A', {4807.69, 547, 747}},         {'B', {403846.15, 355545, 356265}}, {'C', {269230.77, 305384, 321701}},
      {'D', {67307.69, 66218, 50959}},    {'E', {100961.53, 40735, 45058}},   {'F', {153846.15, 231571, 225270}},
  };
  return table;
}

double SpectraResult::mode_center() const {
  const auto it = std::max_element(histogram.begin(), histogram.end());
  return (static_cast<double>(std::distance(histogram.begin(), it)) + 0.5) * bin_width;
}

SpectraResult spectra(int n, int d, std::int64_t samples, std::uint64_t seed) {
  check_order(n);
  if (d < 1 || d >= n) throw std::invalid_argument("d must lie in [1, n-1]");
  SpectraResult out;
  out.n = n;
  out.d = d;
  out.samples = samples;
  out.histogram.assign(static_cast<std::size_t>(std::ceil(d / out.bin_width)), 0);

  Rng gen = Rng::for_replica(seed, 0);
  const Coloring of = strict_algorithm(Coloring::random(n, gen), gen).result;
  Rng rng = Rng::for_replica(seed, 1);
  std::vector<Color> colors(n - 1);
  for (int i = 0; i < n - 1; ++i) colors[i] = i + 1;

  for (std::int64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < d; ++i) std::swap(colors[i], colors[i + rng.below(n - 1 - i)]);
    const UnionGraph g = union_graph(of, std::span<const Color>(colors.data(), d));
    const std::vector<double> ev = spectrum(g);
    double sum = 0, squares = 0;
    for (double x : ev) {
      sum += x;
      squares += x * x;
      out.max_abs_eigenvalue = std::max(out.max_abs_eigenvalue, std::abs(x));
    }
    out.max_lambda1_error = std::max(out.max_lambda1_error, std::abs(ev.front() - d));
    out.max_trace_error = std::max(out.max_trace_error, std::abs(sum));
    out.max_square_error = std::max(out.max_square_error, std::abs(squares - static_cast<double>(n) * d));
    const double l2 = ev.size() > 1 ? ev[1] : 0.0;
    out.lambda2.push_back(l2);
    if (is_ramanujan(ev, d)) ++out.ramanujan;
    const auto bin = static_cast<std::int64_t>(std::floor(l2 / out.bin_width));
    const auto last = static_cast<std::int64_t>(out.histogram.size()) - 1;
    ++out.histogram[static_cast<std::size_t>(std::clamp<std::int64_t>(bin, 0, last))];
  }
  return out;
}

int cmd_experiment(const ExperimentConfig& raw, std::ostream& out, std::ostream& log) {
  const ExperimentConfig config = validated(raw);
  const std::uint64_t seed = *config.seed;
  const bool json = config.format == Format::Json;
  Json j;
  j["experiment"] = config.experiment;
  j["seed"] = seed;

  if (config.experiment == "convergence-scaling") {
    const auto rows = convergence_scaling(config.algorithm, config.n_list, config.runs, seed, config.max_steps);
    if (!json) out << "n,algorithm,runs,reached,median_steps,p10,p90\n";
    for (const auto& r : rows) {
      if (json) {
        j["rows"].push_back({{"n", r.n}, {"algorithm", config.algorithm}, {"runs", r.runs}, {"reached", r.reached},
                             {"median_steps", r.median_steps}, {"p10", r.p10}, {"p90", r.p90}});
      } else {
        out << r.n << ',' << config.algorithm << ',' << r.runs << ',' << r.reached << ',' << r.median_steps << ','
            << r.p10 << ',' << r.p90 << '\n';
      }
      log << "n=" << r.n << ": " << r.reached << "/" << r.runs << " reached, median " << r.median_steps << " steps\n";
    }
  } else if (config.experiment == "of8-distribution") {
    const ClassCounts counts =
        of8_distribution(config.algorithm, config.runs, seed, config.max_steps, config.epsilon.value_or(0.1));
    const auto& table = of8_table();
    if (!json) out << "class,size,count,per_million,uniform_per_million,strict_reference,mild_reference\n";
    for (const auto& [label, count] : counts.counts) {
      const Of8Reference& ref = of8_reference().at(label);
      const double share = 1e6 * static_cast<double>(count) / static_cast<double>(config.runs);
      const std::int64_t size = table.find(label)->size;
      if (json) {
        j["rows"].push_back({{"class", std::string(1, label)}, {"size", size}, {"count", count},
                             {"per_million", share}, {"uniform_per_million", ref.uniform},
                             {"strict_reference", ref.strict}, {"mild_reference", ref.mild}});
      } else {
        out << label << ',' << size << ',' << count << ',' << fixed(share, 2) << ',' << fixed(ref.uniform, 2) << ','
            << ref.strict << ',' << ref.mild << '\n';
      }
    }
    if (counts.failed > 0) log << counts.failed << " runs did not reach a one-factorization\n";
  } else if (config.experiment == "spectra") {
    const SpectraResult s = spectra(config.n, config.d, config.samples, seed);
    const double bound = 2.0 * std::sqrt(static_cast<double>(config.d - 1));
    if (!json) out << "lambda2,count,ramanujan_bound\n";
    for (std::size_t k = 0; k < s.histogram.size(); ++k) {
      const double center = (static_cast<double>(k) + 0.5) * s.bin_width;
      if (json) {
        j["rows"].push_back({{"lambda2", center}, {"count", s.histogram[k]}, {"ramanujan_bound", bound}});
      } else {
        out << fixed(center, 3) << ',' << s.histogram[k] << ',' << fixed(bound, 3) << '\n';
      }
    }
    log << s.ramanujan << "/" << s.samples << " samples Ramanujan; lambda2 mode near " << fixed(s.mode_center(), 3)
        << "; reference " << fixed(bound, 3) << '\n';
  } else if (config.experiment == "restart") {
    Rng rng = Rng::for_replica(seed, 0);
    const std::int64_t cap = config.max_steps > 0 ? config.max_steps : default_cap("mild", config.n);
    const RestartResult r = restart_experiment(config.n, config.p, config.runs, rng, cap, config.force_change);
    const std::string cls = r.different_class < 0 ? "" : fixed(r.class_escape_fraction(), 6);
    if (json) {
      j["rows"].push_back({{"p", r.p}, {"trials", r.trials}, {"completed", r.completed},
                           {"p_different", r.escape_fraction()},
                           {"p_different_class", r.different_class < 0 ? Json(nullptr) : Json(r.class_escape_fraction())}});
    } else {
      out << "p,trials,completed,p_different,p_different_class\n"
          << r.p << ',' << r.trials << ',' << r.completed << ',' << fixed(r.escape_fraction(), 6) << ',' << cls << '\n';
    }
  } else {  // epsilon-scan
    std::vector<double> grid;
    if (config.epsilon) {
      grid.push_back(*config.epsilon);
    } else {
      for (int k = 1; k <= 9; ++k) grid.push_back(k / 10.0);
    }
    const std::int64_t steps = config.max_steps > 0 ? config.max_steps : 1'000'000;
    if (!json) out << "epsilon,chains,steps,of_occupancy,of_visits,distinct_ofs,acceptance_rate\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::int64_t of_steps = 0, total = 0, accepted = 0, visits = 0;
      std::set<std::vector<Color>> distinct;
      for (std::int64_t chain = 0; chain < config.runs; ++chain) {
        Rng rng = Rng::for_replica(mix64(seed) ^ i, static_cast<std::uint64_t>(chain));
        MetropolisParams params;
        params.epsilon = grid[i];
        params.max_steps = steps;
        params.seed = rng.next();
        const MetropolisOutcome m = run_metropolis(Coloring::random(config.n, rng), params);
        of_steps += m.of_steps;
        total += m.walk.steps;
        accepted += m.accepted;
        visits += static_cast<std::int64_t>(m.of_visits.size());
        for (const auto& v : m.of_visits) distinct.insert({v.state.colors().begin(), v.state.colors().end()});
      }
      const double occupancy = total == 0 ? 0.0 : static_cast<double>(of_steps) / static_cast<double>(total);
      const double rate = total == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(total);
      if (json) {
        j["rows"].push_back({{"epsilon", grid[i]}, {"chains", config.runs}, {"steps", steps},
                             {"of_occupancy", occupancy}, {"of_visits", visits},
                             {"distinct_ofs", distinct.size()}, {"acceptance_rate", rate}});
      } else {
        out << fixed(grid[i], 3) << ',' << config.runs << ',' << steps << ',' << fixed(occupancy, 6) << ',' << visits
            << ',' << distinct.size() << ',' << fixed(rate, 6) << '\n';
      }
    }
  }
  if (json) out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const ExperimentConfig& raw, std::istream& in, std::ostream& out, std::ostream& log) {
  const ExperimentConfig config = validated(raw);
  const std::string text(std::istreambuf_iterator<char>(in), {});
  Coloring c;
  try {
    c = parse_coloring(text);
  } catch (const ParseError& e) {
    log << "parse error: " << e.what() << '\n';
    return kExitVerification;
  }
  const Structure s = structure(c);
  const bool of = c.is_one_factorization();
  Json j;
  j["n"] = c.order();
  j["is_of"] = of;
  j["psi"] = c.psi();
  j["phi"] = c.phi();
  j["iv"] = s.is_iv;
  j["vees"] = s.vees.size();
  if (of) {
    j["kotzig_perfect"] = kotzig_perfect(c);
    if (c.order() == 8) j["class"] = std::string(1, classify_of8(c));
    for (Color a = 1; a < c.order(); ++a) {
      for (Color b = a + 1; b < c.order(); ++b) {
        j["cycle_types"].push_back({{"colors", {a, b}}, {"cycles", cycle_type(c, a, b)}});
      }
    }
  }

  if (config.format == Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << "n " << c.order() << '\n'
        << "is_of " << (of ? "true" : "false") << '\n'
        << "psi " << c.psi() << '\n'
        << "phi " << c.phi() << '\n'
        << "iv " << (s.is_iv ? "true" : "false") << '\n'
        << "vees " << s.vees.size() << '\n';
    if (of) {
      out << "kotzig_perfect " << (j["kotzig_perfect"].get<bool>() ? "true" : "false") << '\n';
      if (c.order() == 8) out << "class " << j["class"].get<std::string>() << '\n';
      for (const auto& t : j["cycle_types"]) {
        out << "pair " << t["colors"][0] << ' ' << t["colors"][1] << ':';
        for (const auto& len : t["cycles"]) out << ' ' << len;
        out << '\n';
      }
    }
  }
  return of ? kExitOk : kExitVerification;
}

int cmd_classes(const ExperimentConfig& raw, std::ostream& out, std::ostream& log) {
  validated(raw);
  const IsoClassTable& table = of8_table();
  if (!table.fingerprints_distinct) log << "warning: fingerprints do not separate the classes\n";
  out << table_to_json(table);
  log << table.classes.size() << " classes, " << table.total() << " factorizations\n";
  return kExitOk;
}

}  // namespace onefact
