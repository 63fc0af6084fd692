#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "whlab/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"whlab: numerical desk checks for Wiener-Hopf type operators on weighted variable Lebesgue spaces"};
  app.require_subcommand(1);

  whlab::Invocation call;
  const std::pair<const char*, const char*> commands[] = {
      {"norm-lb", "lower bound for the operator norm via witness functions"},
      {"kappa-lb", "lower bound for the Kuratowski measure via a separated family"},
      {"doubling-scan", "doubling ratios over a schedule of balls"},
      {"tau-scan", "weak and separated doubling estimates as tau decreases"},
      {"space-check", "function-norm properties and Berezhnoi/Muckenhoupt ball sweep"},
      {"validate", "parse and pre-flight the config only"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", call.config_path, "run configuration (JSON)")->required()->check(CLI::ExistingFile);
    if (std::string(name) != "validate") {
      sub->add_option("--out", call.directory_override, "output directory (overrides output.directory)");
      sub->add_option("--format", call.format_override, "csv, text or both (overrides output.formats)")
          ->check(CLI::IsMember({"csv", "text", "both"}));
    }
    sub->callback([&call, name = std::string(name)] { call.expected_kind = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : whlab::exit_validation;
  }
  return whlab::run_invocation(call, std::cout, std::cerr);
}
