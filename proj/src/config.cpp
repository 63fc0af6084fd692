#include "whlab/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>

#include "whlab/expression.hpp"
#include "whlab/witness.hpp"

namespace whlab {

using nlohmann::json;

std::string to_string(ExperimentKind kind) {
  switch (kind) {
  case ExperimentKind::norm_lb: return "norm-lb";
  case ExperimentKind::kappa_lb: return "kappa-lb";
  case ExperimentKind::doubling_scan: return "doubling-scan";
  case ExperimentKind::tau_scan: return "tau-scan";
  case ExperimentKind::space_check: return "space-check";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (auto k : {ExperimentKind::norm_lb, ExperimentKind::kappa_lb, ExperimentKind::doubling_scan,
                 ExperimentKind::tau_scan, ExperimentKind::space_check})
    if (to_string(k) == name) return k;
  throw ValidationError("unknown experiment kind '" + name + "'");
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  if (name == "both") return OutputFormat::both;
  throw ValidationError("output format must be one of csv, text, both (got '" + name + "')");
}

namespace {

const json& child(const json& parent, const std::string& key, const std::string& path) {
  require(parent.is_object() && parent.contains(key), "missing key '" + path + key + "'");
  return parent.at(key);
}

double number(const json& parent, const std::string& key, const std::string& path) {
  const json& v = child(parent, key, path);
  require(v.is_number(), "key '" + path + key + "' must be a number");
  double d = v.get<double>();
  require(std::isfinite(d), "key '" + path + key + "' must be finite");
  return d;
}

double number_or(const json& parent, const std::string& key, const std::string& path, double fallback) {
  return parent.contains(key) ? number(parent, key, path) : fallback;
}

std::string text(const json& parent, const std::string& key, const std::string& path) {
  const json& v = child(parent, key, path);
  require(v.is_string(), "key '" + path + key + "' must be a string");
  return v.get<std::string>();
}

int integer(const json& parent, const std::string& key, const std::string& path) {
  const json& v = child(parent, key, path);
  require(v.is_number_integer(), "key '" + path + key + "' must be an integer");
  return v.get<int>();
}

Point to_point(const json& v, int dimension, const std::string& where) {
  if (v.is_number()) {
    require(dimension == 1, "'" + where + "' needs two components for n = 2");
    return point(v.get<double>());
  }
  require(v.is_array() && int(v.size()) == dimension && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); }),
          "'" + where + "' must be a number (n = 1) or an array of n numbers");
  return dimension == 1 ? point(v[0].get<double>()) : point(v[0].get<double>(), v[1].get<double>());
}

std::vector<double> numbers(const json& parent, const std::string& key, const std::string& path) {
  const json& v = child(parent, key, path);
  require(v.is_array() && !v.empty(), "key '" + path + key + "' must be a non-empty array");
  std::vector<double> out;
  for (const json& e : v) {
    require(e.is_number(), "key '" + path + key + "' must contain numbers only");
    out.push_back(e.get<double>());
  }
  return out;
}

std::function<double(const Point&)> spatial_rule(const std::string& expr, int dimension) {
  Expression e = Expression::parse(expr, {"x", "x1", "x2", "r"});
  return [e, dimension](const Point& x) {
    double r = dimension == 1 ? std::abs(x(0)) : x.norm();
    std::array<double, 4> vals{x(0), x(0), x(1), r};
    return e(vals);
  };
}

Grid parse_grid(const json& doc) {
  const json& g = child(doc, "grid", "");
  return Grid::make(integer(g, "dimension", "grid."), number(g, "half_width", "grid."),
                    integer(g, "points_per_axis", "grid."));
}

ExponentField parse_exponent(const json& block, const Grid& grid) {
  const std::string path = "space.exponent.";
  std::string kind = text(block, "kind", path);
  if (kind == "constant") return ExponentField::constant(grid, number(block, "value", path));
  if (kind == "piecewise")
    return ExponentField::smoothed_step(grid, number(block, "left", path), number(block, "right", path),
                                        number_or(block, "edge", path, 0.0),
                                        number_or(block, "smoothing_cells", path, 0.0));
  if (kind == "expression")
    return ExponentField::sampled(grid, spatial_rule(text(block, "expr", path), grid.dimension()));
  throw ValidationError("space.exponent.kind must be constant, piecewise or expression");
}

Weight parse_weight(const json& block, const Grid& grid) {
  const std::string path = "space.weight.";
  std::string kind = text(block, "kind", path);
  if (kind == "constant") return Weight::constant(grid, number_or(block, "value", path, 1.0));
  if (kind == "power") return Weight::power(grid, number(block, "gamma", path));
  if (kind == "expression")
    return Weight::sampled(grid, spatial_rule(text(block, "expr", path), grid.dimension()));
  throw ValidationError("space.weight.kind must be constant, power or expression");
}

DomainMask parse_domain(const json& block, const Grid& grid) {
  const std::string path = "space.domain.";
  std::string kind = text(block, "kind", path);
  if (kind == "full") return DomainMask::full(grid);
  if (kind == "halfline") return DomainMask::half_line(grid);
  if (kind == "cone")
    return DomainMask::sector(grid, number(block, "alpha1", path), number(block, "alpha2", path));
  throw ValidationError("space.domain.kind must be full, halfline or cone");
}

SpaceSpec parse_space(const json& doc, const Grid& grid) {
  const json& s = child(doc, "space", "");
  ExponentField p = parse_exponent(child(s, "exponent", "space."), grid);
  require(p.min() >= min_config_exponent,
          "exponent must satisfy p(x) >= 1.05 everywhere (got minimum " + std::to_string(p.min()) + ")");
  Weight w = s.contains("weight") ? parse_weight(s.at("weight"), grid) : Weight::constant(grid);
  DomainMask omega = s.contains("domain") ? parse_domain(s.at("domain"), grid) : DomainMask::full(grid);
  return SpaceSpec(std::move(p), std::move(w), std::move(omega));
}

Symbol parse_symbol(const json& doc, const Grid& grid) {
  if (!doc.contains("symbol")) return Symbol::constant(grid, 1.0);
  const json& block = doc.at("symbol");
  const std::string path = "symbol.";
  std::string kind = text(block, "kind", path);
  if (kind == "constant")
    return Symbol::constant(grid, Complex(number(block, "value", path), number_or(block, "imag", path, 0.0)));
  if (kind == "gaussian") {
    Point center = block.contains("center") ? to_point(block.at("center"), grid.dimension(), "symbol.center")
                                            : Point(Point::Zero());
    return Symbol::gaussian(grid, center, number(block, "sigma", path), number_or(block, "peak", path, 1.0));
  }
  if (kind == "smoothed_step") {
    double width = block.contains("width") ? number(block, "width", path)
                                           : number_or(block, "width_cells", path, 4.0) * grid.frequency_spacing();
    return Symbol::smoothed_step(grid, number_or(block, "edge", path, 0.0), width);
  }
  if (kind == "expression") {
    std::vector<std::string> vars{"xi", "xi1", "xi2", "r"};
    Expression re = Expression::parse(text(block, "re", path), vars);
    Expression im = Expression::parse(block.contains("im") ? text(block, "im", path) : "0", vars);
    int n = grid.dimension();
    return Symbol::sampled(grid, [&](const Point& xi) {
      std::array<double, 4> vals{xi(0), xi(0), xi(1), n == 1 ? std::abs(xi(0)) : xi.norm()};
      Complex v(re(vals), im(vals));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericError("symbol expression is not finite at a frequency node");
      return v;
    });
  }
  throw ValidationError("symbol.kind must be constant, gaussian, smoothed_step or expression");
}

void parse_family(const json& e, RunConfig& cfg) {
  const std::string path = "experiment.";
  cfg.family.theta = number_or(e, "theta", path, cfg.family.theta);
  cfg.family.lambda = number_or(e, "lambda", path, cfg.family.lambda);
  if (e.contains("count")) cfg.family.count = integer(e, "count", path);
  if (e.contains("first_center")) cfg.family.first_center = number(e, "first_center", path);
}

void parse_schedule(const json& e, RunConfig& cfg) {
  if (!e.contains("schedule")) return;
  const json& list = e.at("schedule");
  require(list.is_array() && !list.empty(), "experiment.schedule must be a non-empty array");
  for (const json& item : list) {
    Point c = to_point(child(item, "center", "experiment.schedule[]."), cfg.grid.dimension(),
                       "experiment.schedule[].center");
    double r = number(item, "radius", "experiment.schedule[].");
    require(r > 0.0, "experiment.schedule[].radius must be positive");
    cfg.schedule.push_back({c, r});
  }
}

void check_schedule(const RunConfig& cfg, double tau) {
  for (const ScheduleBall& b : cfg.schedule) {
    Ball outer(b.center, tau * b.radius);
    for (int a = 0; a < cfg.grid.dimension(); ++a)
      require(std::abs(b.center(a)) + outer.radius <= cfg.grid.half_width(),
              "schedule ball B(y, tau R) leaves the grid box");
    require(cfg.space.domain().contains_ball(outer), "schedule ball B(y, tau R) is not contained in Omega");
    require(ball_node_count(Ball(b.center, b.radius), cfg.grid) > 0, "schedule ball contains no grid node");
  }
}

void parse_experiment(const json& doc, RunConfig& cfg) {
  const json& e = child(doc, "experiment", "");
  const std::string path = "experiment.";
  const int n = cfg.grid.dimension();

  switch (cfg.kind) {
  case ExperimentKind::norm_lb: {
    cfg.rho = number_or(e, "rho", path, cfg.rho);
    require(cfg.rho > 1.0, "rho must exceed 1");
    cfg.deltas = numbers(e, "deltas", path);
    for (std::size_t i = 0; i < cfg.deltas.size(); ++i) {
      require(cfg.deltas[i] > 0.0, "deltas must be positive");
      if (i > 0) require(cfg.deltas[i] < cfg.deltas[i - 1], "deltas must be strictly decreasing");
    }
    if (e.contains("ray")) cfg.ray = to_point(e.at("ray"), n, "experiment.ray");
    Point dir = cfg.ray ? *cfg.ray : cfg.space.domain().central_ray();
    bool any = std::any_of(cfg.deltas.begin(), cfg.deltas.end(), [&](double d) {
      return farthest_admissible_center(cfg.space.domain(), dir, cfg.rho / d).has_value();
    });
    require(any, "no delta admits a witness support B(y, rho/delta) inside Omega and the support margin");
    break;
  }
  case ExperimentKind::kappa_lb:
    cfg.rho = number_or(e, "rho", path, cfg.rho);
    require(cfg.rho > 1.0, "rho must exceed 1");
    parse_family(e, cfg);
    cfg.tau = cfg.rho;
    cfg.schedule = separated_sequence(cfg.space.domain(), cfg.rho, cfg.family);
    break;
  case ExperimentKind::doubling_scan:
    cfg.tau = number(e, "tau", path);
    require(cfg.tau > 1.0, "tau must exceed 1 (doubling ratios compare a ball with its tau-inflation)");
    parse_family(e, cfg);
    parse_schedule(e, cfg);
    if (cfg.schedule.empty())
      cfg.schedule = separated_sequence(cfg.space.domain(), cfg.tau, cfg.family);
    else
      check_schedule(cfg, cfg.tau);
    break;
  case ExperimentKind::tau_scan:
    cfg.taus = numbers(e, "taus", path);
    for (std::size_t i = 0; i < cfg.taus.size(); ++i) {
      require(cfg.taus[i] > 1.0, "tau must exceed 1 (doubling ratios compare a ball with its tau-inflation)");
      if (i > 0) require(cfg.taus[i] < cfg.taus[i - 1], "taus must be strictly decreasing");
    }
    parse_family(e, cfg);
    parse_schedule(e, cfg);
    for (double t : cfg.taus) {
      separated_sequence(cfg.space.domain(), t, cfg.family);
      check_schedule(cfg, t);
    }
    break;
  case ExperimentKind::space_check:
    if (e.contains("samples")) cfg.samples = integer(e, "samples", path);
    require(cfg.samples >= 2, "samples must be at least 2");
    cfg.radii = e.contains("radii") ? numbers(e, "radii", path) : std::vector<double>{1.0, 2.0, 4.0};
    if (e.contains("center")) cfg.sweep_center = to_point(e.at("center"), n, "experiment.center");
    for (double r : cfg.radii) {
      require(r > 0.0, "radii must be positive");
      for (int a = 0; a < n; ++a)
        require(std::abs(cfg.sweep_center(a)) + r <= cfg.grid.half_width(), "sweep ball leaves the grid box");
      require(ball_node_count(Ball(cfg.sweep_center, r), cfg.grid) > 0, "sweep ball contains no grid node");
    }
    break;
  }

  if (e.contains("eta")) {
    cfg.eta = to_point(e.at("eta"), n, "experiment.eta");
    cfg.grid.frequency_index(*cfg.eta);
  }
}

} // namespace

RunConfig parse_config(const json& doc) {
  require(doc.is_object(), "configuration must be a JSON object");
  const json& e = child(doc, "experiment", "");
  ExperimentKind kind = parse_experiment_kind(text(e, "kind", "experiment."));
  Grid grid = parse_grid(doc);
  SpaceSpec space = parse_space(doc, grid);
  Symbol symbol = parse_symbol(doc, grid);
  RunConfig cfg(doc, kind, grid, std::move(space), std::move(symbol));

  parse_experiment(doc, cfg);

  if (doc.contains("output")) {
    const json& o = doc.at("output");
    if (o.contains("directory")) cfg.output_directory = text(o, "directory", "output.");
    if (o.contains("formats")) cfg.format = parse_output_format(text(o, "formats", "output."));
    if (o.contains("functions")) {
      require(o.at("functions").is_boolean(), "output.functions must be a boolean");
      cfg.dump_functions = o.at("functions").get<bool>();
    }
  }
  if (doc.contains("seed")) {
    require(doc.at("seed").is_number_unsigned() || doc.at("seed").is_number_integer(), "seed must be an integer");
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), "cannot open configuration file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ValidationError("configuration '" + path + "' is not valid JSON: " + err.what());
  }
  return parse_config(doc);
}

} // namespace whlab
