#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "whlab/doubling.hpp"
#include "whlab/operators.hpp"
#include "whlab/spaces.hpp"

namespace whlab {

enum class ExperimentKind { norm_lb, kappa_lb, doubling_scan, tau_scan, space_check };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

enum class OutputFormat { csv, text, both };
OutputFormat parse_output_format(const std::string& name);

/// Parsed and validated run specification. Construction performs every
/// pre-flight check; no experiment starts from an invalid configuration.
struct RunConfig {
  RunConfig(nlohmann::json source_, ExperimentKind kind_, Grid grid_, SpaceSpec space_, Symbol symbol_)
      : source(std::move(source_)), kind(kind_), grid(grid_), space(std::move(space_)),
        symbol(std::move(symbol_)) {}

  nlohmann::json source;

  ExperimentKind kind;
  Grid grid;
  SpaceSpec space;
  Symbol symbol;

  // norm-lb / kappa-lb
  double rho = 2.0;
  std::vector<double> deltas;
  std::optional<Point> eta;
  std::optional<Point> ray;

  // doubling-scan / tau-scan / kappa-lb family
  double tau = 2.0;
  std::vector<double> taus;
  FamilyParams family;
  std::vector<ScheduleBall> schedule;

  // space-check
  int samples = 100;
  std::vector<double> radii;
  Point sweep_center = Point::Zero();

  std::string output_directory = "out";
  OutputFormat format = OutputFormat::both;
  bool dump_functions = false;
  std::uint64_t seed = 0;
};

/// Parses a JSON document into a RunConfig. Throws ValidationError naming the
/// offending key or precondition.
RunConfig parse_config(const nlohmann::json& document);
RunConfig load_config(const std::string& path);

/// Exponent floor accepted in configurations.
inline constexpr double min_config_exponent = 1.05;

} // namespace whlab
