#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scenario.hpp"

namespace {

constexpr const char* kFormatEnv = "ADIC_FORMAT";

int run(const std::string& path, const std::string& format_flag, const std::string& dot_path,
        const std::optional<std::uint64_t>& seed) {
  using namespace adic::cli;
  RunOptions opts;
  opts.seed = seed;
  std::string fmt = format_flag;
  if (fmt.empty()) {
    const char* env = std::getenv(kFormatEnv);
    fmt = env != nullptr && *env != '\0' ? env : "json";
  }
  const auto f = parse_format(fmt);
  if (!f) {
    std::cerr << "unknown format \"" << fmt << "\" (expected json or text)\n";
    return 1;
  }
  opts.format = *f;

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto slash = path.find_last_of('/');
  opts.source_name = slash == std::string::npos ? path : path.substr(slash + 1);

  const RunResult r = run_scenario(buf.str(), opts);
  if (r.exit_code != 0) {
    std::cerr << r.error << "\n";
    return r.exit_code;
  }
  std::cout << r.output;
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << dot_path << "\n";
      return 1;
    }
    for (const auto& g : r.dot) out << g.text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on ordered groups, rangers, Gamma-graphs and the adic projective line"};
  app.require_subcommand(1);

  std::string path, format, dot;
  std::optional<std::uint64_t> seed;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute a JSON scenario");
  run_cmd->add_option("file", path, "Scenario file")->required();
  run_cmd->add_option("--format", format, "Output format: json or text (default from ADIC_FORMAT, else json)")
      ->check(CLI::IsMember({"json", "text"}));
  run_cmd->add_option("--dot", dot, "Write DOT graphs produced by the scenario to this path");
  run_cmd->add_option("--seed", seed, "Seed recorded in the report");

  CLI11_PARSE(app, argc, argv);
  return run(path, format, dot, seed);
}
