#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fbl/errors.hpp"
#include "fbl/report.hpp"
#include "fbl/snapshot.hpp"

namespace {

struct Invocation {
  std::string config;
  std::string estimate;
  std::string snapshot;
  std::string out;
};

int execute(const std::string& command, const Invocation& inv) {
  using namespace fbl;
  std::vector<std::pair<std::string, std::string>> overrides{{"command", command}};
  if (!inv.estimate.empty()) overrides.emplace_back("estimate.id", inv.estimate);
  if (!inv.snapshot.empty()) overrides.emplace_back("input.snapshot", inv.snapshot);
  if (!inv.out.empty()) overrides.emplace_back("output.dir", inv.out);
  try {
    const std::string text = inv.config.empty() ? std::string() : read_file(inv.config);
    const RunConfig cfg = parse_config(text, overrides);
    return cli::run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error:\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return cli::kConfigError;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return cli::kConfigError;
  } catch (const NumericDivergence& e) {
    std::cerr << "numeric divergence: " << e.what() << "\n";
    return cli::kDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variable-exponent Fourier-Besov toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fbl::version());

  Invocation inv;
  std::string chosen;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", inv.config, "run configuration file")->check(CLI::ExistingFile);
    sub->add_option("-o,--out", inv.out, "output directory (overrides output.dir)");
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };
  add("norm", "evaluate a norm of a snapshot or generated field")
      ->add_option("--snapshot", inv.snapshot, "binary field snapshot");
  add("decompose", "Littlewood-Paley decomposition of a field")
      ->add_option("--snapshot", inv.snapshot, "binary field snapshot");
  add("verify", "empirical check of one inequality")
      ->add_option("-e,--estimate", inv.estimate, "estimate id")
      ->check(CLI::IsMember(fbl::estimate_ids()));
  add("heat", "heat-semigroup estimate sweep");
  add("solve-ns", "small-data Navier-Stokes solve by Picard iteration");
  add("solve-ks", "small-data Keller-Segel solve by Picard iteration");
  add("sweep", "calibrate the smallness threshold");
  CLI::App* keys = app.add_subcommand("keys", "list configuration keys with defaults");
  keys->callback([&chosen] { chosen = "keys"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fbl::cli::kConfigError;
  }
  if (chosen == "keys") {
    for (const auto& [k, v] : fbl::config_keys()) std::printf("%s = %s\n", k.c_str(), v.c_str());
    return 0;
  }
  return execute(chosen, inv);
}
