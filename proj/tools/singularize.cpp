#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "singular/pipeline.hpp"

namespace fs = std::filesystem;
using namespace singular;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int run_command(const std::string& script, const std::string& report_path, const std::string& off_dir,
                bool verify_oracle, std::optional<std::uint64_t> seed) {
  SingularizationPlan plan = parse_script(read_file(script));
  RunOptions options;
  options.seed = seed;
  RunResult result = run(plan, options);
  const SingularizationReport& r = result.report;

  std::string json = report_json(r);
  if (report_path.empty())
    std::cout << json;
  else
    write_file(report_path, json);

  if (!off_dir.empty()) {
    fs::create_directories(off_dir);
    write_file(fs::path(off_dir) / (fs::path(script).stem().string() + ".off"),
               off_mesh(result.result.carrier()));
  }

  bool ok = r.all_ok();
  for (const std::string& d : r.diagnostics) std::cerr << script << ": check failed: " << d << '\n';

  if (verify_oracle) {
    if (!r.genus_formula) {
      std::cerr << script << ": oracle skipped: result is disconnected\n";
    } else {
      try {
        // Cycle length bound: the longest declared loop.
        OracleOptions oracle;
        oracle.max_cycle_length = 3;
        for (const auto& [name, loop] : plan.loops)
          oracle.max_cycle_length = std::max(oracle.max_cycle_length, loop.length());
        int g = genus_oracle(result.result, oracle);
        bool agree = g == *r.genus_formula;
        std::cerr << script << ": oracle genus " << g << (agree ? " matches " : " differs from ")
                  << "formula " << *r.genus_formula << '\n';
        ok = ok && agree;
      } catch (const TopologyError& e) {
        if (e.kind() != ErrorKind::OracleTimeout) throw;
        std::cerr << script << ": oracle gave up: " << e.what() << '\n';
      }
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularize closed surfaces by loop surgery and check the Euler characteristic formulas"};
  app.require_subcommand(1);

  std::string script;
  std::string report_path;
  std::string off_dir;
  bool verify_oracle = false;
  std::optional<std::uint64_t> seed;

  CLI::App* run_cmd = app.add_subcommand("run", "Execute a script and report the theorem checks");
  run_cmd->add_option("script", script, "Script file")->required();
  run_cmd->add_option("--report", report_path, "Write report JSON here instead of stdout");
  run_cmd->add_option("--export-off", off_dir, "Directory for an OFF mesh of the result");
  run_cmd->add_flag("--verify-oracle", verify_oracle, "Compare the genus formula with brute force");
  run_cmd->add_option("--seed", seed, "Randomize omitted zip and identify parameters");

  CLI::App* check_cmd = app.add_subcommand("check", "Parse and validate a script without running it");
  check_cmd->add_option("script", script, "Script file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_cmd->parsed()) {
      SingularizationPlan plan = parse_script(read_file(script));
      std::cout << script << ": ok (" << plan.bundle.n() << " surfaces, " << plan.loops.size()
                << " loops, " << plan.operations.size() << " operations)\n";
      return 0;
    }
    return run_command(script, report_path, off_dir, verify_oracle, seed);
  } catch (const ScriptError& e) {
    std::cerr << script << ':' << e.line() << ':' << e.column() << ": error: " << e.message() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << script << ": error: " << e.what() << '\n';
    return 2;
  }
}
