// seshadri: command-line front end.
//
//   seshadri classify instances/fermat-cubic.json --json report.json
//   seshadri sharpness --n 3 --d 4 --seed 7

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "seshadri/cli/runner.hpp"

namespace {

void configure_logging() {
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("SESHADRI_LOG")) spdlog::set_level(spdlog::level::from_str(level));
  spdlog::set_pattern("[%l] %v");
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  using namespace seshadri::cli;

  CLI::App app{"Seshadri constants of complete intersections at a point"};
  app.require_subcommand(1);

  RunOptions opts;
  std::string json_path;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes;
  unsigned max_m = 0;

  auto common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", opts.file, "instance file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "seed for every random choice");
    sub->add_option("--primes", primes, "primes for the finite-field oracle")->delimiter(',');
    sub->add_option("--max-m", max_m, "truncation cap for local computations");
    sub->add_option("--json", json_path, "write the machine-readable report here ('-' for stdout)");
    sub->add_flag("--validate", opts.validate, "check saturation and other preconditions");
    sub->add_option("--retries", opts.retries, "retries for degenerate random choices");
    sub->add_option("--threads", opts.threads, "oracle worker threads (0 = all cores)");
  };

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"bound", "lower bound from d_p, or 1 when a line passes through p"},
      {"fano", "scheme of lines through p and its Hilbert data"},
      {"dp", "least degree of forms cutting out X at p"},
      {"classify", "exact value for a complete intersection"},
      {"curve", "cone-cutting curve certificate"},
      {"oracle", "finite-field line count and conic search"},
  };
  for (auto [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, true);
    if (std::string(name) == "oracle" || std::string(name) == "classify")
      sub->add_option("--budget", opts.budget, "conic search draws per prime");
  }
  CLI::App* sharp = app.add_subcommand("sharpness", "random member of the sharpness family in P^{n+1}");
  common(sharp, false);
  sharp->add_option("--n", opts.n, "dimension of X")->check(CLI::PositiveNumber);
  sharp->add_option("--d", opts.d, "degree of X")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  opts.command = app.get_subcommands().front()->get_name();
  CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--seed")) opts.seed = seed;
  if (sub->count("--primes")) opts.primes = primes;
  if (sub->count("--max-m")) opts.max_m = max_m;

  spdlog::info("running {} on {}", opts.command, opts.file.empty() ? "-" : opts.file);
  auto start = std::chrono::steady_clock::now();
  RunResult result = run(opts);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << render_text(result.report);
  std::cout << "time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  if (result.exit_code != kSuccess) spdlog::error("{}", result.report["error"]["message"].get<std::string>());

  if (!json_path.empty()) {
    std::string doc = result.report.dump(2) + "\n";
    if (json_path == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(json_path);
      if (!out) {
        spdlog::error("cannot write {}", json_path);
        return kInput;
      }
      out << doc;
    }
  }
  return result.exit_code;
}
