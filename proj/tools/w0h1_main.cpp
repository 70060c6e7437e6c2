// Command-line front end: scenario files in, weight-zero reports out.
//
// Exit codes: 0 success, 1 computation/consistency failure, 2 input error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "w0h1/examples.hpp"
#include "w0h1/scenario.hpp"

namespace {

int emit(const w0h1::RunResult& result, bool emit_json) {
  if (emit_json)
    std::cout << result.report.dump(2) << "\n";
  else
    std::cout << result.text;
  return 0;
}

std::map<std::string, std::string> parse_params(
    const std::vector<std::string>& raw) {
  std::map<std::string, std::string> params;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw w0h1::validation_error("--param expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the weight-zero part of first cohomology"};
  app.require_subcommand(1);

  std::string file;
  bool json_flag = false, oracle_flag = false;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a scenario file");
  run_cmd->add_option("file", file, "JSON scenario file")->required();
  run_cmd->add_flag("--json", json_flag, "Emit a machine-readable report");
  run_cmd->add_flag("--oracle", oracle_flag,
                    "Run independent brute-force cross-checks");

  std::size_t sa = 0, sb = 0, sc = 0;
  bool spec_json = false;
  auto* spec_cmd = app.add_subcommand("spectrum", "Brieskorn-Pham spectrum");
  spec_cmd->add_option("a", sa)->required();
  spec_cmd->add_option("b", sb)->required();
  spec_cmd->add_option("c", sc)->required();
  spec_cmd->add_flag("--json", spec_json, "Emit a machine-readable report");

  std::string example_name;
  std::vector<std::string> raw_params;
  bool ex_json = false, ex_oracle = false;
  auto* ex_cmd = app.add_subcommand("example", "Evaluate a bundled example");
  ex_cmd->add_option("name", example_name, "Example name (see `list`)")->required();
  ex_cmd->add_option("--param", raw_params, "Parameter override key=value");
  ex_cmd->add_flag("--json", ex_json, "Emit a machine-readable report");
  ex_cmd->add_flag("--oracle", ex_oracle,
                   "Run independent brute-force cross-checks");

  auto* list_cmd = app.add_subcommand("list", "List bundled examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      return emit(w0h1::run(w0h1::load_scenario(file), oracle_flag), json_flag);
    }
    if (*spec_cmd) {
      w0h1::Scenario s;
      s.kind = "spectrum";
      s.name = "spectrum(" + std::to_string(sa) + "," + std::to_string(sb) + "," +
               std::to_string(sc) + ")";
      s.payload = w0h1::SpectrumParams{sa, sb, sc};
      return emit(w0h1::run(s, true), spec_json);
    }
    if (*ex_cmd) {
      const auto scenario =
          w0h1::make_example(example_name, parse_params(raw_params));
      return emit(w0h1::run(scenario, ex_oracle), ex_json);
    }
    if (*list_cmd) {
      std::printf("%-22s %-12s %-10s %s\n", "name", "kind", "params",
                  "description");
      for (const auto& e : w0h1::list_examples())
        std::printf("%-22s %-12s %-10s %s [%s]\n", e.name.c_str(),
                    e.kind.c_str(), e.params.empty() ? "-" : e.params.c_str(),
                    e.description.c_str(), e.reference.c_str());
      return 0;
    }
  } catch (const w0h1::validation_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const w0h1::computation_error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
