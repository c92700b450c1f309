// sdwt: command-line driver for transforms, verification suites and exports.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sdwt/commands.hpp"
#include "sdwt/config.hpp"
#include "sdwt/parallel.hpp"
#include "sdwt/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"symplectic-dilation wavelet transform toolkit"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir;
  std::string suite = "all";
  std::optional<std::size_t> threads;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> sets;

  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (overrides output_dir)");
  app.add_option("--threads", threads, "worker threads (default: SDWT_THREADS, else all cores)");
  app.add_option("--seed", seed, "seed of the randomized checks");
  app.add_option("--set", sets, "override a config key, e.g. --set sampling.mu_count=12")->take_all();

  auto* transform = app.add_subcommand("transform", "transform a signal file or fixture");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "parseval|inversion|admissibility|fock|kernel|all");
  auto* plotdata = app.add_subcommand("plotdata", "slice |W| from a coefficient CSV");
  auto* kernel = app.add_subcommand("kernel", "sample the lens-Fresnel kernel");
  auto* fock = app.add_subcommand("fock", "build the transform operator on a Fock box");
  for (auto* sub : {transform, verify, plotdata, kernel, fock}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << sdwt::error_json("Usage", e.what()) << "\n";
    return sdwt::kExitUsage;
  }

  if (verify->parsed() && !sdwt::is_suite(suite)) {
    std::cerr << sdwt::error_json("Usage", "unknown suite '" + suite + "'") << "\n";
    return sdwt::kExitUsage;
  }

  if (seed) sets.push_back("seed=" + std::to_string(*seed));
  if (!out_dir.empty()) sets.push_back("output_dir=\"" + out_dir + "\"");

  sdwt::RunConfig config;
  try {
    std::optional<std::filesystem::path> path;
    if (!config_path.empty()) path = config_path;
    config = sdwt::load_config(path, sets);
  } catch (const sdwt::Error& e) {
    std::cerr << sdwt::error_json(e) << "\n";
    return sdwt::kExitUsage;
  }
  sdwt::set_thread_count(threads.value_or(0));

  try {
    if (transform->parsed()) return sdwt::cmd_transform(config, std::cout);
    if (verify->parsed()) return sdwt::cmd_verify(config, suite, std::cout);
    if (plotdata->parsed()) return sdwt::cmd_plotdata(config, std::cout);
    if (kernel->parsed()) return sdwt::cmd_kernel(config, std::cout);
    return sdwt::cmd_fock(config, std::cout);
  } catch (const sdwt::Error& e) {
    std::cerr << sdwt::error_json(e) << "\n";
    return sdwt::kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << sdwt::error_json("Internal", e.what()) << "\n";
    return sdwt::kExitCheckFailed;
  }
}
