// Command-line front end: generate, experiment, verify, classes.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "onefact/experiments.hpp"

namespace {

using onefact::ExperimentConfig;
using onefact::Format;

std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;
  auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file) throw onefact::IoError("cannot write " + path);
  return file;
}

int dispatch(const ExperimentConfig& config) {
  if (config.command == "verify") {
    if (config.input.empty() || config.input == "-") return onefact::cmd_verify(config, std::cin, std::cout, std::cerr);
    std::ifstream in(config.input, std::ios::binary);
    if (!in) throw onefact::IoError("cannot read " + config.input);
    return onefact::cmd_verify(config, in, std::cout, std::cerr);
  }
  // Validate before touching any output file.
  const ExperimentConfig checked = onefact::validated(config);
  auto file = open_output(checked.output);
  std::ostream& out = file ? *file : std::cout;
  int code = onefact::kExitOk;
  if (checked.command == "generate") {
    auto summary = open_output(checked.summary);
    auto trace = open_output(checked.trace);
    code = onefact::cmd_generate(checked, out, summary.get(), trace.get(), std::cerr);
    if (summary && !*summary) throw onefact::IoError("write failed: " + checked.summary);
    if (trace && !*trace) throw onefact::IoError("write failed: " + checked.trace);
  } else if (checked.command == "experiment") {
    code = onefact::cmd_experiment(checked, out, std::cerr);
  } else {
    code = onefact::cmd_classes(checked, out, std::cerr);
  }
  out.flush();
  if (!out) throw onefact::IoError("write failed");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and audit one-factorizations of complete graphs"};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::uint64_t seed = 0;
  double epsilon = 0.5;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Order of the complete graph");
    sub->add_option("--algorithm", config.algorithm, "mild, strict, weak, metropolis, ds, four-switch or latin");
    sub->add_option("--seed", seed, "Master seed (required for randomized commands)");
    sub->add_option("--runs,--trials", config.runs, "Independent runs / trials");
    sub->add_option("--max-steps", config.max_steps, "Step cap per run (0: algorithm default)");
    sub->add_option("--epsilon", epsilon, "Metropolis parameter in (0, 1]");
    sub->add_option("--ds-step1", config.ds_step1, "Probability of Dinitz-Stinson move 1");
    sub->add_option("--output", config.output, "Output file (default stdout)");
    sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  auto* generate = app.add_subcommand("generate", "Generate one-factorizations (or Latin squares)");
  add_common(generate);
  generate->add_option("--summary", config.summary, "Also write the per-run CSV summary here");
  generate->add_option("--trace", config.trace, "Write the per-step trace CSV here");

  auto* experiment = app.add_subcommand("experiment", "Run one of the experiments");
  add_common(experiment);
  experiment->add_option("name,--experiment", config.experiment,
                         "convergence-scaling, of8-distribution, spectra, restart or epsilon-scan");
  experiment->add_option("--samples", config.samples, "Samples (spectra)");
  experiment->add_option("--p", config.p, "Perturbation probability (restart)");
  experiment->add_flag("--force-change", config.force_change, "Perturb to a different color (restart)");
  experiment->add_option("--d", config.d, "Number of color classes in each union (spectra)");
  experiment->add_option("--n-list", config.n_list, "Orders for convergence-scaling")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Check a coloring in the text format");
  verify->add_option("input,--input", config.input, "File to check ('-' for stdin)");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* classes = app.add_subcommand("classes", "Regenerate the OF_8 isomorphism class table (JSON)");
  classes->add_option("--output", config.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? onefact::kExitOk : onefact::kExitUsage;
  }

  for (auto* sub : {generate, experiment, verify, classes}) {
    if (sub->parsed()) config.command = sub->get_name();
  }
  auto* active = app.get_subcommands().front();
  auto given = [&](const char* name) {
    const CLI::Option* opt = active->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--seed")) config.seed = seed;
  if (given("--epsilon")) config.epsilon = epsilon;
  if (format == "text") config.format = Format::Text;
  if (format == "csv") config.format = Format::Csv;
  if (format == "json") config.format = Format::Json;

  try {
    return dispatch(config);
  } catch (const onefact::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return onefact::kExitUsage;
  } catch (const onefact::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return onefact::kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return onefact::kExitVerification;
  }
}
