#include "whlab/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "whlab/axioms.hpp"
#include "whlab/format.hpp"
#include "whlab/witness.hpp"

namespace whlab {

namespace fs = std::filesystem;

namespace {

class Emitter {
public:
  Emitter(fs::path directory, OutputFormat format, RunOutcome& outcome)
      : dir_(std::move(directory)), format_(format), outcome_(outcome) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + dir_.string() + "': " + ec.message());
  }

  bool csv() const { return format_ != OutputFormat::text; }
  bool text() const { return format_ != OutputFormat::csv; }

  void write(const std::string& name, const std::string& content) {
    std::ofstream file(dir_ / name, std::ios::binary | std::ios::trunc);
    file << content;
    file.close();
    if (!file) throw std::runtime_error("cannot write '" + (dir_ / name).string() + "'");
    outcome_.files.push_back(name);
  }

  void function(const std::string& name, const GridFunction& u) {
    std::ostringstream s;
    write_csv(s, u);
    write(name, s.str());
  }

private:
  fs::path dir_;
  OutputFormat format_;
  RunOutcome& outcome_;
};

std::string point_text(const Point& x, int n) {
  return n == 1 ? num(x(0)) : "(" + num(x(0)) + ", " + num(x(1)) + ")";
}

std::string point_csv(const Point& x, int n) {
  return n == 1 ? exact(x(0)) : exact(x(0)) + "," + exact(x(1));
}

std::string y_header(int n) { return n == 1 ? "y" : "y1,y2"; }

void header(std::ostringstream& s, const RunConfig& cfg) {
  s << "# whlab report\n";
  s << "kind: " << to_string(cfg.kind) << "\n";
  s << "config:\n" << cfg.source.dump(2) << "\n";
  s << "\n[measured]\n";
}

void quantity(std::ostringstream& s, const std::string& name, double v) {
  s << name << " = " << num(v) << "\n";
}

std::string ledger_text(const std::vector<LedgerLine>& ledger) {
  std::ostringstream s;
  for (const LedgerLine& l : ledger)
    s << l.name << ": lhs=" << num(l.lhs) << ", rhs=" << num(l.rhs) << ", slack=" << num(l.slack) << ", "
      << (l.pass() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

std::string ledger_csv(const std::vector<LedgerLine>& ledger) {
  std::ostringstream s;
  s << "name,lhs,rhs,slack,pass\n";
  for (const LedgerLine& l : ledger)
    s << '"' << l.name << "\"," << exact(l.lhs) << "," << exact(l.rhs) << "," << exact(l.slack) << ","
      << (l.pass() ? 1 : 0) << "\n";
  return s.str();
}

std::string probes_csv(const ExperimentReport& r, int n) {
  std::ostringstream s;
  s << "delta,admissible," << y_header(n)
    << ",ratio,image_norm,inner_norm,witness_norm,outer_norm,quotient,residual\n";
  for (const WitnessProbe& p : r.probes)
    s << exact(p.delta) << "," << (p.admissible ? 1 : 0) << "," << point_csv(p.center, n) << ","
      << exact(p.ratio) << "," << exact(p.image_norm) << "," << exact(p.inner_norm) << ","
      << exact(p.witness_norm) << "," << exact(p.outer_norm) << "," << exact(p.quotient) << ","
      << exact(p.residual) << "\n";
  return s.str();
}

std::string failed_lines(const std::vector<LedgerLine>& ledger) {
  std::string names;
  for (const LedgerLine& l : ledger)
    if (!l.pass()) names += (names.empty() ? "" : ", ") + l.name;
  return names;
}

void finish_ledger(const ExperimentReport& r, RunOutcome& outcome) {
  if (!r.ledger_passes()) {
    outcome.status = exit_ledger;
    outcome.diagnostic = "inequality ledger failed: " + failed_lines(r.ledger);
  }
}

void dump_witnesses(const RunConfig& cfg, const ExperimentReport& r, Emitter& out) {
  out.function("symbol.csv", GridFunction(cfg.grid, cfg.symbol.values(), Side::frequency));
  BumpSpec bump(cfg.rho);
  int k = 0;
  for (const WitnessProbe& p : r.probes) {
    if (!p.admissible) continue;
    WitnessParams params{p.delta, r.eta, p.center};
    GridFunction f = make_witness(params, bump, cfg.space.domain());
    out.function("witness_" + std::to_string(k) + ".csv", f);
    out.function("image_" + std::to_string(k) + ".csv", wiener_hopf_apply(cfg.symbol, cfg.space.domain(), f));
    ++k;
  }
}

void run_norm_lb(const RunConfig& cfg, Emitter& out, RunOutcome& outcome) {
  const int n = cfg.grid.dimension();
  ExperimentReport r = norm_lowerbound_experiment(cfg.symbol, cfg.space, cfg.rho, cfg.deltas, cfg.eta, cfg.ray);
  finish_ledger(r, outcome);
  if (out.text()) {
    std::ostringstream s;
    header(s, cfg);
    quantity(s, "sup_norm", r.sup_norm);
    s << "eta = " << point_text(r.eta, n) << "\n";
    quantity(s, "abs_a_eta", r.abs_a_eta);
    quantity(s, "rho", r.rho);
    for (const WitnessProbe& p : r.probes) {
      s << "probe delta=" << num(p.delta) << ": ";
      if (!p.admissible) {
        s << "skipped (" << p.note << ")\n";
        continue;
      }
      s << "y=" << point_text(p.center, n) << ", ratio=" << num(p.ratio) << ", quotient=" << num(p.quotient)
        << ", residual=" << num(p.residual) << "\n";
    }
    quantity(s, "doubling_estimate", r.doubling_estimate);
    quantity(s, "max_residual", r.max_residual);
    quantity(s, "achieved_lower_bound", r.achieved_lower_bound);
    s << "\n[ledger]\n" << ledger_text(r.ledger);
    s << "\nresult: " << (r.ledger_passes() ? "PASS" : "FAIL") << "\n";
    out.write("report.txt", s.str());
  }
  if (out.csv()) {
    out.write("probes.csv", probes_csv(r, n));
    out.write("ledger.csv", ledger_csv(r.ledger));
  }
  if (cfg.dump_functions) dump_witnesses(cfg, r, out);
}

void run_kappa_lb(const RunConfig& cfg, Emitter& out, RunOutcome& outcome) {
  const int n = cfg.grid.dimension();
  ExperimentReport r = kuratowski_experiment(cfg.symbol, cfg.space, cfg.rho, cfg.schedule, cfg.eta);
  finish_ledger(r, outcome);
  const Index m = r.distances.rows();
  if (out.text()) {
    std::ostringstream s;
    header(s, cfg);
    quantity(s, "sup_norm", r.sup_norm);
    s << "eta = " << point_text(r.eta, n) << "\n";
    quantity(s, "abs_a_eta", r.abs_a_eta);
    quantity(s, "rho", r.rho);
    for (std::size_t j = 0; j < r.probes.size(); ++j) {
      const WitnessProbe& p = r.probes[j];
      s << "member j=" << j << ": y=" << point_text(p.center, n) << ", R=" << num(1.0 / p.delta)
        << ", ratio=" << num(p.ratio) << ", quotient=" << num(p.quotient) << ", residual=" << num(p.residual)
        << "\n";
    }
    quantity(s, "separated_doubling_estimate", r.doubling_estimate);
    quantity(s, "max_residual", r.max_residual);
    s << "distances:\n";
    for (Index j = 0; j < m; ++j) {
      for (Index k = 0; k < m; ++k) s << (k ? " " : "  ") << num(r.distances(j, k));
      s << "\n";
    }
    quantity(s, "kappa_lower_bound", r.kappa_lower_bound);
    quantity(s, "kappa_measure_bound", r.kappa_measure_bound);
    quantity(s, "kappa_target", r.kappa_target);
    s << "note: a family of " << m << " members only shows kappa is consistent with kappa >= "
      << num(r.kappa_lower_bound) << "\n";
    s << "\n[ledger]\n" << ledger_text(r.ledger);
    s << "\nresult: " << (r.ledger_passes() ? "PASS" : "FAIL") << "\n";
    out.write("report.txt", s.str());
  }
  if (out.csv()) {
    out.write("probes.csv", probes_csv(r, n));
    std::ostringstream d;
    d << "j,k,distance\n";
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k) d << j << "," << k << "," << exact(r.distances(j, k)) << "\n";
    out.write("distances.csv", d.str());
    out.write("ledger.csv", ledger_csv(r.ledger));
  }
  if (cfg.dump_functions) dump_witnesses(cfg, r, out);
}

void doubling_rows(std::ostringstream& s, const DoublingReport& r, int n) {
  for (std::size_t j = 0; j < r.entries.size(); ++j) {
    const DoublingEntry& e = r.entries[j];
    s << exact(r.tau) << "," << j << "," << point_csv(e.center, n) << "," << exact(e.radius) << ","
      << exact(e.ratio) << "," << (e.contained ? 1 : 0) << "," << (e.disjoint ? 1 : 0) << "\n";
  }
}

std::string doubling_header(int n) { return "tau,j," + y_header(n) + ",R,ratio,contained,disjoint\n"; }

void doubling_text(std::ostringstream& s, const std::string& label, const DoublingReport& r, int n) {
  s << label << " tau=" << num(r.tau) << ":\n";
  for (std::size_t j = 0; j < r.entries.size(); ++j) {
    const DoublingEntry& e = r.entries[j];
    s << "  j=" << j << ": y=" << point_text(e.center, n) << ", R=" << num(e.radius)
      << ", ratio=" << num(e.ratio) << "\n";
  }
  s << "  d_est = " << num(r.d_est) << ", s_est = " << num(r.s_est)
    << ", contained = " << (r.containment_verified ? "yes" : "no")
    << ", disjoint = " << (r.disjointness_verified ? "yes" : "no") << "\n";
}

void run_doubling_scan(const RunConfig& cfg, Emitter& out) {
  const int n = cfg.grid.dimension();
  DoublingReport r = weak_doubling_scan(cfg.space, cfg.tau, cfg.schedule);
  if (out.text()) {
    std::ostringstream s;
    header(s, cfg);
    doubling_text(s, "schedule", r, n);
    out.write("report.txt", s.str());
  }
  if (out.csv()) {
    std::ostringstream s;
    s << doubling_header(n);
    doubling_rows(s, r, n);
    out.write("doubling.csv", s.str());
  }
}

void run_tau_scan(const RunConfig& cfg, Emitter& out) {
  const int n = cfg.grid.dimension();
  std::vector<TauScanRow> rows = tau_scan(cfg.space, cfg.taus, cfg.family, cfg.schedule);
  if (out.text()) {
    std::ostringstream s;
    header(s, cfg);
    s << "tau d_est s_est\n";
    for (const TauScanRow& row : rows)
      s << num(row.tau) << " " << num(row.d_est) << " " << num(row.s_est) << "\n";
    s << "\n";
    for (const TauScanRow& row : rows) {
      doubling_text(s, "weak", row.weak, n);
      doubling_text(s, "separated", row.separated, n);
    }
    out.write("report.txt", s.str());
  }
  if (out.csv()) {
    std::ostringstream t;
    t << "tau,d_est,s_est\n";
    for (const TauScanRow& row : rows) t << exact(row.tau) << "," << exact(row.d_est) << "," << exact(row.s_est) << "\n";
    out.write("tau_scan.csv", t.str());
    std::ostringstream d;
    d << doubling_header(n);
    for (const TauScanRow& row : rows) doubling_rows(d, row.separated, n);
    out.write("doubling.csv", d.str());
  }
}

void run_space_check(const RunConfig& cfg, Emitter& out, RunOutcome& outcome) {
  const int n = cfg.grid.dimension();
  SpaceSpec whole = cfg.space.with_domain(DomainMask::full(cfg.grid));
  std::vector<double> berezhnoi, muckenhoupt;
  for (double radius : cfg.radii) {
    Ball ball(cfg.sweep_center, radius);
    berezhnoi.push_back(berezhnoi_ratio(ball, whole));
    muckenhoupt.push_back(muckenhoupt_ratio(ball, cfg.space.exponent(), cfg.space.weight()));
  }
  std::vector<AxiomResult> axioms = check_axioms(cfg.space, cfg.samples, cfg.seed);
  std::string failing;
  for (const AxiomResult& a : axioms)
    if (a.failures > 0) failing += (failing.empty() ? "" : ", ") + a.name;
  if (!failing.empty()) {
    outcome.status = exit_ledger;
    outcome.diagnostic = "function-norm property failed: " + failing;
  }

  if (out.text()) {
    std::ostringstream s;
    header(s, cfg);
    quantity(s, "p_min", cfg.space.exponent().min());
    quantity(s, "p_max", cfg.space.exponent().max());
    s << "ball sweep centred at " << point_text(cfg.sweep_center, n) << ":\n";
    for (std::size_t i = 0; i < cfg.radii.size(); ++i)
      s << "  R=" << num(cfg.radii[i]) << ": berezhnoi=" << num(berezhnoi[i])
        << ", muckenhoupt=" << num(muckenhoupt[i]) << "\n";
    auto [lo, hi] = std::minmax_element(berezhnoi.begin(), berezhnoi.end());
    quantity(s, "berezhnoi_max_over_min", *hi / *lo);
    s << "\n[properties]\n";
    for (const AxiomResult& a : axioms)
      s << a.name << ": checks=" << a.checks << ", failures=" << a.failures << ", worst=" << num(a.worst)
        << ", tolerance=" << num(a.tolerance) << ", " << (a.failures == 0 ? "PASS" : "FAIL") << "\n";
    s << "\nresult: " << (failing.empty() ? "PASS" : "FAIL") << "\n";
    out.write("report.txt", s.str());
  }
  if (out.csv()) {
    std::ostringstream b;
    b << "j," << y_header(n) << ",R,berezhnoi,muckenhoupt\n";
    for (std::size_t i = 0; i < cfg.radii.size(); ++i)
      b << i << "," << point_csv(cfg.sweep_center, n) << "," << exact(cfg.radii[i]) << ","
        << exact(berezhnoi[i]) << "," << exact(muckenhoupt[i]) << "\n";
    out.write("berezhnoi.csv", b.str());
    std::ostringstream a;
    a << "name,checks,failures,worst,tolerance\n";
    for (const AxiomResult& r : axioms)
      a << r.name << "," << r.checks << "," << r.failures << "," << exact(r.worst) << "," << exact(r.tolerance)
        << "\n";
    out.write("axioms.csv", a.str());
  }
}

} // namespace

RunOutcome run(const RunConfig& cfg, const fs::path& directory, OutputFormat format) {
  RunOutcome outcome;
  Emitter out(directory, format, outcome);
  switch (cfg.kind) {
  case ExperimentKind::norm_lb: run_norm_lb(cfg, out, outcome); break;
  case ExperimentKind::kappa_lb: run_kappa_lb(cfg, out, outcome); break;
  case ExperimentKind::doubling_scan: run_doubling_scan(cfg, out); break;
  case ExperimentKind::tau_scan: run_tau_scan(cfg, out); break;
  case ExperimentKind::space_check: run_space_check(cfg, out, outcome); break;
  }
  return outcome;
}

int run_invocation(const Invocation& call, std::ostream& out, std::ostream& err) {
  try {
    RunConfig cfg = load_config(call.config_path);
    if (call.expected_kind == "validate") {
      out << "valid: " << to_string(cfg.kind) << "\n";
      return exit_ok;
    }
    require(call.expected_kind == to_string(cfg.kind),
            "config experiment.kind '" + to_string(cfg.kind) + "' does not match subcommand '" +
                call.expected_kind + "'");
    OutputFormat format = call.format_override.empty() ? cfg.format : parse_output_format(call.format_override);
    fs::path directory = call.directory_override.empty() ? fs::path(cfg.output_directory)
                                                         : fs::path(call.directory_override);
    RunOutcome outcome = run(cfg, directory, format);
    if (outcome.status != exit_ok) {
      err << "error: " << outcome.diagnostic << "\n";
      return outcome.status;
    }
    out << to_string(cfg.kind) << ": wrote " << outcome.files.size() << " file(s) to " << directory.string() << "\n";
    return exit_ok;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return exit_validation;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return exit_numeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace whlab
