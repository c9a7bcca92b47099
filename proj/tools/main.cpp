#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "znp/constants.hpp"
#include "znp/errors.hpp"
#include "znp/gallery.hpp"
#include "znp/invariants.hpp"
#include "znp/mass.hpp"
#include "znp/model_io.hpp"
#include "znp/path_splitting.hpp"
#include "znp/quotient_diameter.hpp"
#include "znp/random_instance.hpp"
#include "znp/report.hpp"
#include "znp/stable_norm.hpp"
#include "znp/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace znp;

namespace {

struct Globals {
  std::string model;
  std::string instance;
  std::string out;
  std::string format = "json";
  unsigned precision = kDefaultPrecisionBits;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("--") + what + ": not a rational: " + text);
  }
}

LatticeVector parse_gamma(const std::vector<std::int64_t>& coords, std::size_t rank) {
  if (coords.size() != rank) {
    throw UsageError("--gamma needs " + std::to_string(rank) + " coordinates, got " + std::to_string(coords.size()));
  }
  return LatticeVector(LatticeVector::Storage(coords.begin(), coords.end()));
}

// Writes one artifact: to DIR/<stem>.<ext> when --out is set, else stdout.
// SVG is never sent to stdout.
void emit(const Globals& G, const std::string& stem, const std::string& ext, const std::string& body) {
  if (G.out.empty()) {
    if (ext != "svg") std::cout << body;
    return;
  }
  fs::create_directories(G.out);
  write_file_atomically(fs::path(G.out) / (stem + "." + ext), body);
}

void emit_report(const Globals& G, const std::string& stem, const json& doc, const std::vector<std::vector<std::string>>& rows) {
  if (G.format == "csv") {
    std::string body;
    for (const auto& r : rows) body += csv_row(r);
    emit(G, stem, "csv", body);
  } else {
    emit(G, stem, "json", doc.dump(2) + "\n");
  }
}

std::optional<GalleryInstance> find_instance(const std::string& name) {
  for (auto& inst : gallery())
    if (inst.name == name) return inst;
  return std::nullopt;
}

// The object named by --model or --instance.
GalleryObject load_object(const Globals& G) {
  if (!G.model.empty() && !G.instance.empty()) throw UsageError("give --model or --instance, not both");
  if (!G.model.empty()) return load_model(G.model);
  if (!G.instance.empty()) {
    auto inst = find_instance(G.instance);
    if (!inst) throw UsageError("no gallery instance named " + G.instance);
    return inst->object;
  }
  throw UsageError("this subcommand needs --model FILE or --instance NAME");
}

QuotientGraph load_graph(const Globals& G) {
  auto obj = load_object(G);
  auto* g = std::get_if<QuotientGraph>(&obj);
  if (!g) throw UsageError("this subcommand needs a quotient graph");
  require_valid(*g);
  return *g;
}

std::string object_name(const Globals& G) { return G.model.empty() ? G.instance : fs::path(G.model).stem().string(); }

std::vector<std::string> check_row(const Check& c) { return {c.name, to_string(c.verdict), c.equal ? "equal" : ""}; }

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(to_json(c));
  return out;
}

json interval_json(const RationalInterval& x) { return {{"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}}; }

int cmd_validate(const Globals& G) {
  std::vector<std::string> issues;
  try {
    auto obj = load_object(G);
    if (auto* g = std::get_if<QuotientGraph>(&obj)) issues = validate(*g);
  } catch (const InvalidModel& e) {
    issues.push_back(e.what());
  }
  json doc = {{"valid", issues.empty()}, {"issues", issues}};
  std::vector<std::vector<std::string>> rows = {{"issue"}};
  for (const auto& s : issues) rows.push_back({s});
  emit_report(G, "validate", doc, rows);
  return issues.empty() ? kExitPass : kExitFail;
}

InvariantReport report_for(const Globals& G, const std::optional<Rational>& radius) {
  auto obj = load_object(G);
  if (auto* g = std::get_if<QuotientGraph>(&obj)) {
    require_valid(*g);
    return invariant_report(object_name(G), *g, radius, G.precision);
  }
  if (auto* s = std::get_if<NormedLatticeSpace>(&obj)) return invariant_report(*s, G.precision);
  throw UsageError("invariants are defined for quotient graphs and normed lattices");
}

int cmd_invariants(const Globals& G, const std::string& radius_text) {
  std::optional<Rational> radius;
  if (!radius_text.empty()) radius = parse_arg(radius_text, "radius");
  const InvariantReport r = report_for(G, radius);
  std::vector<std::vector<std::string>> rows = {{"name", "n", "sys", "stsys", "codiam", "omega", "c_hat", "overall"}};
  rows.push_back({r.name, std::to_string(r.n), to_string(r.sys), to_string(r.stsys), to_string(r.codiam),
                  to_string(r.omega), r.c_hat ? to_string(*r.c_hat) : "", to_string(r.overall())});
  emit_report(G, "invariants", to_json(r), rows);
  return exit_code(r.overall());
}

int cmd_stable_ball(const Globals& G) {
  auto obj = load_object(G);
  std::optional<StableBall> ball;
  if (auto* g = std::get_if<QuotientGraph>(&obj)) {
    require_valid(*g);
    ball = stable_unit_ball(*g);
  } else if (auto* s = std::get_if<NormedLatticeSpace>(&obj)) {
    ball = s->ball;
  } else {
    throw UsageError("stable-ball needs a quotient graph or a normed lattice");
  }
  std::vector<std::vector<std::string>> rows = {{"kind", "coefficients"}};
  for (const auto& v : ball->vertices()) {
    std::string coords;
    for (std::size_t i = 0; i < v.size(); ++i) coords += (i ? " " : "") + to_string(v[i]);
    rows.push_back({"vertex", coords});
  }
  for (const auto& f : ball->facets()) {
    std::string coords;
    for (std::size_t i = 0; i < f.size(); ++i) coords += (i ? " " : "") + to_string(f[i]);
    rows.push_back({"facet", coords});
  }
  json doc = ball_to_json(*ball, true);
  doc["volume"] = to_string(ball_volume(*ball));
  emit_report(G, "stable-ball", doc, rows);
  if (ball->rank() == 2) emit(G, "stable-ball", "svg", ball_to_svg(*ball));
  return kExitPass;
}

int cmd_qbd_scan(const Globals& G, const std::string& radius_text) {
  const Rational R = parse_arg(radius_text, "radius");
  const QuotientGraph g = load_graph(G);
  const StableBall ball = stable_unit_ball(g);
  const auto orbit = orbit_ball(g, R);
  const MassTable table(g, R);
  std::vector<std::vector<std::string>> rows = {{"gamma", "d", "stable", "deviation", "mass", "parts"}};
  json scan = json::array();
  Rational worst(0);
  LatticeVector argmax(g.rank());
  // Running maximum of the deviation against the distance, for the plot.
  std::vector<std::pair<Rational, Rational>> by_distance;
  for (const auto& [gamma, d] : orbit) {
    const Rational st = gauge(ball, gamma);
    const Rational dev = abs(Rational(d - st));
    const auto m = table.lookup(gamma);
    if (!m) throw std::logic_error("mass table misses a class inside the orbit ball");
    if (dev > worst) {
      worst = dev;
      argmax = gamma;
    }
    by_distance.emplace_back(d, dev);
    rows.push_back({gamma.to_string(), to_string(d), to_string(st), to_string(dev), to_string(m->mass),
                    std::to_string(m->parts)});
    scan.push_back({{"gamma", gamma.to_string()},
                    {"d", to_string(d)},
                    {"stable", to_string(st)},
                    {"deviation", to_string(dev)},
                    {"mass", to_string(m->mass)},
                    {"parts", m->parts}});
  }
  std::sort(by_distance.begin(), by_distance.end());
  std::vector<std::pair<double, double>> curve;
  Rational running(0);
  for (const auto& [d, dev] : by_distance) {
    running = std::max(running, dev);
    curve.emplace_back(d.get_d(), running.get_d());
  }
  const Rational c_bound = c_simplified({g.rank(), quotient_diameter(g), ball_volume(ball), std::nullopt});
  const Check bound{"c_hat<=c_bound", worst <= c_bound ? Verdict::holds : Verdict::fails, worst == c_bound};
  json doc = {{"radius", to_string(R)},  {"orbit_points", orbit.size()}, {"c_hat", to_string(worst)},
              {"argmax", argmax.to_string()}, {"c_bound", to_string(c_bound)}, {"rows", scan},
              {"checks", checks_json({bound})}};
  emit_report(G, "qbd-scan", doc, rows);
  emit(G, "qbd-scan", "svg", svg_line_plot("max deviation against distance", curve));
  return exit_code(bound.verdict);
}

int cmd_margulis(const Globals& G, const std::string& omega_upper) {
  const InvariantReport r = report_for(G, std::nullopt);
  MargulisInputs in{r.n, r.stsys, r.codiam, r.omega, std::nullopt};
  if (!omega_upper.empty()) in.Omega = parse_arg(omega_upper, "Omega");
  const auto checks = verify_margulis(in, G.precision);
  json doc = {{"name", r.name},
              {"n", r.n},
              {"stsys", to_string(r.stsys)},
              {"codiam", to_string(r.codiam)},
              {"omega", to_string(r.omega)},
              {"lower", interval_json(r.margulis.lower)},
              {"upper", interval_json(r.margulis.upper)},
              {"checks", checks_json(checks)},
              {"overall", to_string(worst(checks))}};
  std::vector<std::vector<std::string>> rows = {{"check", "verdict", "equality"}};
  for (const auto& c : checks) rows.push_back(check_row(c));
  emit_report(G, "margulis", doc, rows);
  return exit_code(worst(checks));
}

int cmd_annuli(const Globals& G, const std::string& delta_text, std::int64_t kmax, const std::string& measured,
               const std::string& radius_text) {
  const Rational delta = parse_arg(delta_text, "delta");
  if (kmax < 1) throw UsageError("--kmax must be at least 1");
  const QuotientGraph g = load_graph(G);
  const StableBall ball = stable_unit_ball(g);
  AnnuliInputs in{g.rank(), quotient_diameter(g), ball_volume(ball), Rational(0)};
  if (!measured.empty()) {
    in.c_hat = parse_arg(measured, "measured-c");
  } else {
    in.c_hat = qbd_deviation(g, ball, parse_arg(radius_text, "radius")).value;
  }
  const AnnuliCheck a = verify_annuli(g, in, delta, kmax);
  std::vector<Check> checks = a.shells;
  checks.push_back({"c_hat<=c_bound", a.symbolic_ok ? Verdict::holds : Verdict::fails, false});
  std::vector<std::vector<std::string>> rows = {{"k", "count", "verdict"}};
  json shells = json::array();
  std::vector<double> bars;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const auto& c = a.shells[static_cast<std::size_t>(k - 1)];
    const auto count = a.counts[static_cast<std::size_t>(k)];
    rows.push_back({std::to_string(k), std::to_string(count), to_string(c.verdict)});
    shells.push_back({{"k", k}, {"count", count}, {"verdict", to_string(c.verdict)}});
    bars.push_back(static_cast<double>(count));
  }
  json doc = {{"delta", to_string(delta)}, {"c_hat", to_string(in.c_hat)}, {"A", to_string(a.A)},
              {"B", to_string(a.B)},         {"shells", shells},              {"symbolic_ok", a.symbolic_ok},
              {"overall", to_string(worst(checks))}};
  emit_report(G, "annuli", doc, rows);
  emit(G, "annuli", "svg", svg_bar_chart("orbit points per annulus", bars));
  return exit_code(worst(checks));
}

int cmd_components(const Globals& G, const std::vector<std::int64_t>& coords, const std::string& omega_upper) {
  const QuotientGraph g = load_graph(G);
  const LatticeVector gamma = parse_gamma(coords, g.rank());
  const StableBall ball = stable_unit_ball(g);
  ComponentsInputs in{g.rank(), systole(g).value, quotient_diameter(g), ball_volume(ball), std::nullopt};
  if (!omega_upper.empty()) in.Omega = parse_arg(omega_upper, "Omega");
  const ComponentsCheck c = verify_components(g, gamma, in);
  json doc = {{"gamma", gamma.to_string()},
              {"mass", to_string(c.mass.mass)},
              {"parts", c.mass.parts},
              {"sys", to_string(in.sys)},
              {"checks", checks_json(c.checks)},
              {"overall", to_string(worst(c.checks))}};
  std::vector<std::vector<std::string>> rows = {{"check", "verdict", "equality"}};
  for (const auto& k : c.checks) rows.push_back(check_row(k));
  emit_report(G, "components", doc, rows);
  return exit_code(worst(c.checks));
}

int cmd_constants(const Globals& G, unsigned long n, const std::string& D, const std::string& Omega,
                  const std::string& sigma) {
  ParamSet p{n, parse_arg(D, "D"), parse_arg(Omega, "Omega"), std::nullopt};
  if (!sigma.empty()) p.sigma = parse_arg(sigma, "sigma");
  const json doc = constants_report(p, G.precision);
  std::vector<std::vector<std::string>> rows = {{"constant", "value"}};
  for (const auto& [k, v] : doc.items()) rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  emit_report(G, "constants", doc, rows);
  return kExitPass;
}

int cmd_bp_demo(const Globals& G, std::size_t budget) {
  const std::vector<std::pair<std::string, Polyline>> demos = {
      {"segment", {{0, 4}, {{0, 0}, {4, 0}}}},
      {"l-shape", {{0, 1, 2}, {{0, 0}, {1, 0}, {1, 1}}}},
      {"staircase", {{0, 1, 2, 3, 4}, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}}},
      {"zig-zag", {{0, 1, 2, 3}, {{0}, {1}, {0}, {1}}}},
  };
  json out = json::array();
  std::vector<std::vector<std::string>> rows = {{"path", "intervals", "verified"}};
  int code = kExitPass;
  for (const auto& [name, path] : demos) {
    const auto sel = bp_search(path, budget);
    std::string text;
    json intervals = json::array();
    if (sel) {
      for (const auto& [a, b] : *sel) {
        text += "(" + to_string(a) + "," + to_string(b) + ")";
        intervals.push_back({to_string(a), to_string(b)});
      }
    }
    const bool ok = sel && bp_verify(path, *sel);
    if (!sel) code = std::max(code, static_cast<int>(kExitBudget));
    else if (!ok) code = std::max(code, static_cast<int>(kExitFail));
    rows.push_back({name, sel ? text : "budget exhausted", ok ? "yes" : "no"});
    out.push_back({{"path", name}, {"found", sel.has_value()}, {"intervals", intervals}, {"verified", ok}});
  }
  emit_report(G, "bp-demo", out, rows);
  return code;
}

int cmd_gallery(const Globals& G, bool all, const std::string& name) {
  if (all == !name.empty()) throw UsageError("gallery needs exactly one of --all or --name");
  std::vector<GalleryInstance> chosen;
  if (all) {
    chosen = gallery();
  } else {
    auto inst = find_instance(name);
    if (!inst) throw UsageError("no gallery instance named " + name);
    chosen.push_back(std::move(*inst));
  }
  json out = json::array();
  std::vector<std::vector<std::string>> rows = {{"instance", "key", "expected", "actual", "ok"}};
  bool ok = true;
  for (const auto& inst : chosen) {
    for (const auto& r : check_expectations(inst)) {
      ok = ok && r.ok;
      rows.push_back({inst.name, r.key, to_string(r.expected), to_string(r.actual), r.ok ? "yes" : "no"});
      out.push_back({{"instance", inst.name},
                     {"key", r.key},
                     {"expected", to_string(r.expected)},
                     {"actual", to_string(r.actual)},
                     {"ok", r.ok}});
    }
  }
  emit_report(G, "gallery", out, rows);
  return ok ? kExitPass : kExitFail;
}

int cmd_random(const Globals& G, std::uint64_t seed, const RandomCaps& caps) {
  const RandomDraw d = random_instance(seed, caps);
  if (d.discarded > 0) std::clog << "random: discarded " << d.discarded << " invalid draws\n";
  emit(G, "random-" + std::to_string(seed), "json", model_to_json(d.graph).dump(2) + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and inequality checks for Z^n-periodic metric graphs and normed lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals G;
  app.add_option("--model", G.model, "Model JSON file")->check(CLI::ExistingFile);
  app.add_option("--instance", G.instance, "Gallery instance name instead of a model file");
  app.add_option("--out", G.out, "Directory for report files (default: stdout)");
  app.add_option("--format", G.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", G.precision, "Starting interval precision in bits")->check(CLI::Range(8u, 4096u));

  auto* validate_cmd = app.add_subcommand("validate", "Check the model invariants");
  std::string radius;
  auto* invariants_cmd = app.add_subcommand("invariants", "Full invariant report");
  invariants_cmd->add_option("--radius", radius, "Also measure the deviation and empirical volume up to this radius");
  auto* ball_cmd = app.add_subcommand("stable-ball", "Stable unit ball in V- and H-form (SVG for rank 2)");
  std::string scan_radius;
  auto* scan_cmd = app.add_subcommand("qbd-scan", "Per-class distance, stable norm and mass inside a ball");
  scan_cmd->add_option("--radius", scan_radius, "Orbit ball radius")->required();
  std::string omega_upper;
  auto* margulis_cmd = app.add_subcommand("margulis", "Both sides of the stable systole bound");
  margulis_cmd->add_option("--Omega", omega_upper, "Upper bound for the asymptotic volume");
  std::string delta, measured, annuli_radius = "20";
  std::int64_t kmax = 0;
  auto* annuli_cmd = app.add_subcommand("annuli", "Orbit counts in annuli of width delta");
  annuli_cmd->add_option("--delta", delta, "Annulus width")->required();
  annuli_cmd->add_option("--kmax", kmax, "Number of annuli")->required();
  annuli_cmd->add_option("--measured-c", measured, "Deviation constant to use instead of measuring it");
  annuli_cmd->add_option("--radius", annuli_radius, "Radius for measuring the deviation")->capture_default_str();
  std::vector<std::int64_t> gamma;
  std::string comp_omega;
  auto* comp_cmd = app.add_subcommand("components", "Mass, component count and its bounds for one class");
  comp_cmd->add_option("--gamma", gamma, "Class coordinates")->required()->delimiter(',');
  comp_cmd->add_option("--Omega", comp_omega, "Upper bound for the asymptotic volume");
  unsigned long cn = 1;
  std::string cD, cOmega, csigma;
  auto* const_cmd = app.add_subcommand("constants", "Every explicit constant for (n, D, Omega)");
  const_cmd->add_option("--n", cn, "Rank")->required()->check(CLI::Range(1ul, 64ul));
  const_cmd->add_option("--D", cD, "Codiameter bound")->required();
  const_cmd->add_option("--Omega", cOmega, "Asymptotic volume bound")->required();
  const_cmd->add_option("--sigma", csigma, "Systole lower bound");
  std::size_t bp_budget = kDefaultBpBudget;
  auto* bp_cmd = app.add_subcommand("bp-demo", "Balanced interval selections on sample paths");
  bp_cmd->add_option("--budget", bp_budget, "LP budget per path")->capture_default_str();
  bool all = false;
  std::string gname;
  auto* gallery_cmd = app.add_subcommand("gallery", "Recompute the expected values of gallery instances");
  gallery_cmd->add_flag("--all", all, "Every instance");
  gallery_cmd->add_option("--name", gname, "One instance");
  std::uint64_t seed = 1;
  RandomCaps caps;
  auto* random_cmd = app.add_subcommand("random", "Emit a random valid model");
  random_cmd->add_option("--seed", seed, "Seed")->required();
  random_cmd->add_option("--rank", caps.rank, "Rank")->capture_default_str();
  random_cmd->add_option("--vertices", caps.max_vertices, "Vertex cap")->capture_default_str();
  random_cmd->add_option("--edges", caps.max_edges, "Edge cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(G);
    if (invariants_cmd->parsed()) return cmd_invariants(G, radius);
    if (ball_cmd->parsed()) return cmd_stable_ball(G);
    if (scan_cmd->parsed()) return cmd_qbd_scan(G, scan_radius);
    if (margulis_cmd->parsed()) return cmd_margulis(G, omega_upper);
    if (annuli_cmd->parsed()) return cmd_annuli(G, delta, kmax, measured, annuli_radius);
    if (comp_cmd->parsed()) return cmd_components(G, gamma, comp_omega);
    if (const_cmd->parsed()) return cmd_constants(G, cn, cD, cOmega, csigma);
    if (bp_cmd->parsed()) return cmd_bp_demo(G, bp_budget);
    if (gallery_cmd->parsed()) return cmd_gallery(G, all, gname);
    if (random_cmd->parsed()) return cmd_random(G, seed, caps);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidModel& e) {
    std::cerr << "invalid model: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
