#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "onefact/analysis.hpp"
#include "onefact/experiments.hpp"

using namespace onefact;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "onefact_cli_test";
  fs::create_directories(dir);
  return dir;
}

Result run_cli(const std::string& args, const std::string& stdin_text = {}) {
  const fs::path dir = scratch();
  std::string cmd = std::string(ONEFACT_CLI) + " " + args;
  if (!stdin_text.empty()) {
    std::ofstream(dir / "stdin.txt", std::ios::binary) << stdin_text;
    cmd += " < " + (dir / "stdin.txt").string();
  }
  cmd += " > " + (dir / "out.txt").string() + " 2> " + (dir / "err.txt").string();
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "out.txt");
  r.err = slurp(dir / "err.txt");
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ExperimentConfig config(const std::string& command) {
  ExperimentConfig c;
  c.command = command;
  c.seed = 3;
  return c;
}

}  // namespace

TEST_CASE("validation fills defaults and rejects bad parameters") {
  ExperimentConfig c = validated(config("generate"));
  CHECK(c.algorithm == "strict");
  CHECK(c.runs == 1);
  CHECK(c.format == Format::Text);

  c = config("experiment");
  c.experiment = "convergence-scaling";
  c = validated(c);
  CHECK(c.algorithm == "mild");
  CHECK(c.format == Format::Csv);
  CHECK(c.n_list == std::vector<int>{8, 16, 32});

  ExperimentConfig bad = config("generate");
  bad.n = 7;
  CHECK_THROWS_WITH_AS(validated(bad), doctest::Contains("n must be even"), UsageError);
  bad = config("generate");
  bad.seed.reset();
  CHECK_THROWS_AS(validated(bad), UsageError);
  bad = config("generate");
  bad.algorithm = "annealing";
  CHECK_THROWS_AS(validated(bad), UsageError);
  bad = config("generate");
  bad.algorithm = "metropolis";
  bad.epsilon = 0.0;
  CHECK_THROWS_AS(validated(bad), UsageError);
  bad = config("experiment");
  bad.experiment = "of8-distribution";
  bad.n = 10;
  CHECK_THROWS_AS(validated(bad), UsageError);
  bad = config("experiment");
  bad.experiment = "of8-distribution";
  bad.algorithm = "latin";
  CHECK_THROWS_AS(validated(bad), UsageError);
  bad = config("experiment");
  bad.experiment = "spectra";
  bad.d = 8;
  CHECK_THROWS_AS(validated(bad), UsageError);
  bad = config("experiment");
  bad.experiment = "nope";
  CHECK_THROWS_AS(validated(bad), UsageError);

  ExperimentConfig latin = config("generate");
  latin.algorithm = "latin";
  latin.n = 5;
  CHECK_NOTHROW(validated(latin));
}

TEST_CASE("generate writes verified factorizations, summary and trace") {
  ExperimentConfig c = config("generate");
  c.n = 10;
  c.runs = 3;
  c.trace = "x";
  c = validated(c);
  std::ostringstream out, summary, trace, log;
  REQUIRE(cmd_generate(c, out, &summary, &trace, log) == kExitOk);

  // three OF blocks in the text format
  std::istringstream blocks(out.str());
  std::string block, line;
  int found = 0;
  while (std::getline(blocks, line)) {
    if (line.empty()) {
      if (!block.empty()) {
        CHECK(parse_coloring(block).is_one_factorization());
        ++found;
      }
      block.clear();
    } else {
      block += line + "\n";
    }
  }
  if (!block.empty()) {
    CHECK(parse_coloring(block).is_one_factorization());
    ++found;
  }
  CHECK(found == 3);

  const auto rows = lines(summary.str());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "n,algorithm,seed,run,steps,final_psi,status,flips_executed,escapes_case_a,escapes_case_b,max_psi_excess");
  CHECK(rows[1].rfind("10,strict,3,0,", 0) == 0);

  const auto trace_rows = lines(trace.str());
  REQUIRE(trace_rows.size() > 1);
  CHECK(trace_rows[0] == "run,step,psi,kind,move,u,v,from,to,swapped,lead");
  // final row of the last run reports psi 0
  const std::string& last = trace_rows.back();
  CHECK(last.rfind("2,", 0) == 0);
  std::istringstream fields(last);
  std::string run, step, psi;
  std::getline(fields, run, ',');
  std::getline(fields, step, ',');
  std::getline(fields, psi, ',');
  CHECK(psi == "0");
}

TEST_CASE("same seed gives identical output for every algorithm") {
  for (const char* algorithm : {"mild", "strict", "weak", "metropolis", "ds", "four-switch", "latin"}) {
    ExperimentConfig c = config("generate");
    c.algorithm = algorithm;
    c.runs = 2;
    c.n = 6;
    c.format = Format::Json;
    c = validated(c);
    std::ostringstream a, b, log;
    const int ca = cmd_generate(c, a, nullptr, nullptr, log);
    const int cb = cmd_generate(c, b, nullptr, nullptr, log);
    CHECK(ca == cb);
    CHECK(a.str() == b.str());
    const auto j = nlohmann::json::parse(a.str());
    CHECK(j["runs"].size() == 2);
  }
}

TEST_CASE("verify reports on colorings") {
  const Coloring of = of8_table().find('F')->representative;
  ExperimentConfig c = config("verify");
  c.format = Format::Text;
  std::istringstream in(to_text(of));
  std::ostringstream out, log;
  CHECK(cmd_verify(c, in, out, log) == kExitOk);
  CHECK(out.str().find("is_of true") != std::string::npos);
  CHECK(out.str().find("class F") != std::string::npos);
  CHECK(out.str().find("kotzig_perfect true") != std::string::npos);

  std::istringstream mono(to_text(Coloring::monochromatic(4)));
  std::ostringstream out2;
  CHECK(cmd_verify(c, mono, out2, log) == kExitVerification);
  CHECK(out2.str().find("psi 12") != std::string::npos);

  std::istringstream broken("n 4\n1: 1-2 3-4\n2: 1-3\n");
  std::ostringstream out3, log3;
  CHECK(cmd_verify(c, broken, out3, log3) == kExitVerification);
  CHECK(log3.str().find("parse error: line") != std::string::npos);

  c.format = Format::Json;
  std::istringstream in4(to_text(of));
  std::ostringstream out4;
  CHECK(cmd_verify(c, in4, out4, log) == kExitOk);
  const auto j = nlohmann::json::parse(out4.str());
  CHECK(j["is_of"] == true);
  CHECK(j["psi"] == 0);
}

TEST_CASE("experiments produce their CSV schemas") {
  auto run = [](ExperimentConfig c) {
    c = validated(c);
    std::ostringstream out, log;
    REQUIRE(cmd_experiment(c, out, log) == kExitOk);
    return lines(out.str());
  };
  ExperimentConfig c = config("experiment");
  c.experiment = "convergence-scaling";
  c.n_list = {8, 12};
  c.runs = 5;
  auto rows = run(c);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "n,algorithm,runs,reached,median_steps,p10,p90");

  c = config("experiment");
  c.experiment = "of8-distribution";
  c.runs = 200;
  rows = run(c);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "class,size,count,per_million,uniform_per_million,strict_reference,mild_reference");

  c = config("experiment");
  c.experiment = "spectra";
  c.n = 20;
  c.d = 3;
  c.samples = 20;
  rows = run(c);
  REQUIRE(rows.size() >= 2);
  CHECK(rows[0] == "lambda2,count,ramanujan_bound");

  c = config("experiment");
  c.experiment = "restart";
  c.runs = 10;
  c.p = 0.05;
  rows = run(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "p,trials,completed,p_different,p_different_class");

  c = config("experiment");
  c.experiment = "epsilon-scan";
  c.n = 4;
  c.max_steps = 2000;
  c.epsilon = 0.3;
  rows = run(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "epsilon,chains,steps,of_occupancy,of_visits,distinct_ofs,acceptance_rate");
}

TEST_CASE("binary: exit codes and messages") {
  Result r = run_cli("generate --n 8 --seed 7");
  CHECK(r.code == 0);
  CHECK(parse_coloring(r.out).is_one_factorization());
  const Result again = run_cli("generate --n 8 --seed 7");
  CHECK(again.out == r.out);

  r = run_cli("generate --n 7 --seed 1");
  CHECK(r.code == 1);
  CHECK(r.err.find("n must be even") != std::string::npos);
  CHECK(run_cli("generate --n 8").code == 1);
  CHECK(run_cli("generate --n 8 --seed 1 --algorithm nope").code == 1);
  CHECK(run_cli("generate --n 8 --seed 1 --bogus").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("--help").code == 0);

  const Coloring of = of8_table().find('A')->representative;
  r = run_cli("verify -", to_text(of));
  CHECK(r.code == 0);
  CHECK(r.out.find("class A") != std::string::npos);
  r = run_cli("verify -", "n 4\n1: 1-2\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("line") != std::string::npos);
  r = run_cli("verify -", to_text(Coloring::monochromatic(6)));
  CHECK(r.code == 2);
  CHECK(run_cli("verify /nonexistent/file.txt").code == 3);
  CHECK(run_cli("generate --n 8 --seed 1 --output /nonexistent/dir/out.txt").code == 3);

  const fs::path file = scratch() / "classes.json";
  CHECK(run_cli("classes --output " + file.string()).code == 0);
  CHECK(slurp(file) == table_to_json(of8_table()));

  r = run_cli("experiment restart --n 8 --seed 2 --trials 5 --p 0.1 --force-change");
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);
}
