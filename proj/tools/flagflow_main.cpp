// Command-line front end: curvature signatures, flow scenarios, phase
// portraits, equilibria, trajectories, and the self-check suite.
//
// Exit codes: 0 success, 1 scenario or verification failure, 2 usage error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagflow/curvature.hpp"
#include "flagflow/dynamics.hpp"
#include "flagflow/fields.hpp"
#include "flagflow/flow.hpp"
#include "flagflow/polynomial.hpp"
#include "flagflow/spaces.hpp"
#include "flagflow/su3.hpp"

namespace {

using namespace flagflow;
using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_doubles(const std::string& s, std::size_t count, const char* what) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::domain_error(std::string("cannot parse ") + what + ": '" + s + "'");
    }
  }
  if (vals.size() != count)
    throw std::domain_error(std::string(what) + " needs " + std::to_string(count) +
                            " comma-separated values, got '" + s + "'");
  return vals;
}

FlagSpace parse_space(const std::string& s) {
  std::stringstream ss(s);
  std::string item;
  std::vector<int> vals;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::domain_error("cannot parse --space: '" + s + "'");
    }
  }
  if (vals.size() != 2) throw std::domain_error("--space needs m,p");
  return FlagSpace(vals[0], vals[1]);
}

// Writes to the path when given, else to stdout.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::domain_error("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

int cmd_curvature(const std::string& space_s, const std::string& metric_s,
                  const std::string& out_path) {
  FlagSpace space = parse_space(space_s);
  auto vals = parse_doubles(metric_s, 3, "--metric");
  Metric3 g(vals[0], vals[1], vals[2]);
  CurvatureSignature sig = signature(space, g);
  for (auto [name, value] : {std::pair<const char*, double>{"r_x", sig.ricci.r_x},
                             {"r_y", sig.ricci.r_y},
                             {"r_z", sig.ricci.r_z}}) {
    if (std::abs(value) < 1e-12)
      std::cerr << "note: " << name << " = 0 within 1e-12 (Ricci-degenerate direction)\n";
  }
  Sink sink(out_path);
  sink.out() << signature_json(sig).dump(2) << "\n";
  return 0;
}

int cmd_equilibria(const std::string& space_s, const std::string& out_path) {
  FlagSpace space = parse_space(space_s);
  Sink sink(out_path);
  sink.out() << equilibria_json(find_equilibria(space)).dump(2) << "\n";
  return 0;
}

int cmd_portrait(const std::string& space_s, int grid, const std::string& out_path) {
  if (grid < 2) throw std::domain_error("--grid must be at least 2");
  FlagSpace space = parse_space(space_s);
  CompiledField cf = CompiledField::compile(projected_field(space));
  Sink sink(out_path);
  sink.out() << "x,y,u,v\n";
  for (int i = 1; i < grid; ++i) {
    for (int j = 1; j + i < grid; ++j) {
      double x = double(i) / grid, y = double(j) / grid;
      auto [u, v] = cf.eval(x, y);
      sink.out() << fmt(x) << "," << fmt(y) << "," << fmt(u) << "," << fmt(v) << "\n";
    }
  }
  return 0;
}

int cmd_integrate(const std::string& space_s, const std::string& start_s,
                  const std::string& direction, double horizon, double rtol, double atol,
                  const std::string& out_path) {
  FlagSpace space = parse_space(space_s);
  auto sv = parse_doubles(start_s, 2, "--start");
  if (direction != "fwd" && direction != "bwd")
    throw std::domain_error("--direction must be fwd or bwd");
  IntegrateOptions opts;
  opts.direction = (direction == "fwd") ? Direction::forward : Direction::backward;
  opts.horizon = horizon;
  opts.rel_tol = rtol;
  opts.abs_tol = atol;
  Trajectory tr = integrate(space, SimplexPoint(sv[0], sv[1]), opts);
  Sink sink(out_path);
  write_trajectory_csv(sink.out(), space, tr);
  return 0;
}

// ---- theorem scenarios ----

struct ScenarioCheck {
  std::string text;
  bool ok = false;
};

struct ScenarioReport {
  std::string name;
  std::vector<ScenarioCheck> checks;
  std::vector<std::string> notes;

  bool success() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
  }
};

int emit_scenario(const ScenarioReport& rep, bool json, const std::string& out_path) {
  Sink sink(out_path);
  if (json) {
    ordered_json j;
    j["scenario"] = rep.name;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) checks.push_back({{"check", c.text}, {"ok", c.ok}});
    j["checks"] = checks;
    j["notes"] = rep.notes;
    j["success"] = rep.success();
    sink.out() << j.dump(2) << "\n";
  } else {
    sink.out() << "scenario: " << rep.name << "\n";
    for (const auto& c : rep.checks)
      sink.out() << (c.ok ? "ok:   " : "FAIL: ") << c.text << "\n";
    for (const auto& n : rep.notes) sink.out() << "note: " << n << "\n";
    sink.out() << "result: " << (rep.success() ? "success" : "failure") << "\n";
  }
  return rep.success() ? 0 : 1;
}

std::optional<FlowEvent> first_event(const Trajectory& tr, const std::string& channel) {
  for (const auto& e : tr.events)
    if (e.channel == channel) return e;
  return std::nullopt;
}

void check_event_at(ScenarioReport& rep, const Trajectory& tr, const std::string& channel,
                    double expected, const std::string& what) {
  auto ev = first_event(tr, channel);
  std::ostringstream os;
  if (!ev) {
    os << what << ": no " << channel << " event observed";
    rep.checks.push_back({os.str(), false});
    return;
  }
  double dev = std::abs(ev->x - expected);
  os << what << ": " << channel << " event at time=" << fmt(ev->time) << " x=" << fmt(ev->x)
     << ", expected x=" << fmt(expected) << " (|dx|=" << fmt(dev) << ")";
  rep.checks.push_back({os.str(), dev < 1e-6 && std::isfinite(ev->time)});
}

IntegrateOptions scenario_options(Direction dir, double horizon, double rtol, double atol) {
  IntegrateOptions o;
  o.direction = dir;
  o.horizon = horizon;
  o.rel_tol = rtol;
  o.abs_tol = atol;
  return o;
}

int cmd_theorem(const std::string& which, const std::string& space_s, double t0, double horizon,
                double rtol, double atol, bool json, const std::string& out_path) {
  FlagSpace space = parse_space(space_s);
  ScenarioReport rep;
  rep.name = which;

  if (which == "ricci-mixed") {
    if (!space.is_wallach()) throw std::domain_error("ricci-mixed runs on --space 1,1");
    if (std::isnan(t0)) t0 = 0.2;
    if (!(t0 > 0.125 && t0 < 0.25))
      throw std::domain_error("ricci-mixed needs t0 in (1/8, 1/4)");
    SimplexPoint start(t0, t0);

    Trajectory bwd =
        integrate(space, start, scenario_options(Direction::backward, horizon, rtol, atol));
    check_event_at(rep, bwd, "r_x", 0.125, "backward run");
    rep.checks.push_back({std::string("backward run terminates (status=") + to_string(bwd.status) +
                              ", time=" + fmt(bwd.terminal_time) + ")",
                          bwd.status == FlowStatus::boundary});

    Trajectory fwd =
        integrate(space, start, scenario_options(Direction::forward, horizon, rtol, atol));
    double best = 1e9;
    for (const auto& s : fwd.samples) best = std::min(best, std::hypot(s.point.x - 0.25, s.point.y - 0.25));
    std::ostringstream os;
    os << "forward run approaches the Kaehler equilibrium (1/4, 1/4): min distance="
       << fmt(best) << ", status=" << to_string(fwd.status);
    rep.checks.push_back({os.str(), best < 1e-6 && (fwd.status == FlowStatus::converged ||
                                                    fwd.status == FlowStatus::horizon)});
    rep.notes.push_back("Ricci curvature mixes sign in finite backward time while the forward "
                        "flow retains it; the sign change sits at x = 1/8 on the diagonal.");
  } else if (which == "ricd-loss") {
    if (!space.is_wallach()) throw std::domain_error("ricd-loss runs on --space 1,1");
    if (std::isnan(t0)) t0 = 0.32;
    if (!(t0 > 0.3125 && t0 < 1.0 / 3.0))
      throw std::domain_error("ricd-loss needs t0 in (5/16, 1/3)");
    SimplexPoint start(t0, t0);

    Trajectory fwd =
        integrate(space, start, scenario_options(Direction::forward, horizon, rtol, atol));
    check_event_at(rep, fwd, "ricd_min_1", 0.3, "d=1 loss");
    check_event_at(rep, fwd, "ricd_min_2", 0.3, "d=2 loss");
    check_event_at(rep, fwd, "ricd_min_3", 5.0 / 18.0, "d=3 loss");
    bool no4 = !first_event(fwd, "ricd_min_4").has_value();
    rep.checks.push_back({"min-Ric_4 stays positive for the whole run (no ricd_min_4 event)", no4});
    rep.checks.push_back({std::string("run terminates (status=") + to_string(fwd.status) + ")",
                          fwd.status == FlowStatus::converged || fwd.status == FlowStatus::horizon});
    Rational f3 = ric_d_segment_mixed(0, 2, 1, Rational(3, 10));
    rep.notes.push_back("the d=3 minimizing choice (a,b,c)=(0,2,1) evaluates to " + to_string(f3) +
                        " at t=3/10, strictly positive; the d=3 boundary is t=5/18, not 3/10");
  } else if (which == "family-dpos") {
    if (std::isnan(t0)) t0 = 0.2;
    if (!(t0 > 0.125 && t0 < 1.0 / 3.0))
      throw std::domain_error("family-dpos needs t0 in (1/8, 1/3)");
    SimplexPoint start(t0, t0);

    Rational ricci_root(space.p, 2 * space.m + 6 * space.p);
    RatPoly scal = scalar_segment_numerator(space);
    auto bracket = bisect_sign_change(scal, "t", Rational(1, 1000), ricci_root, Rational(1, 1000000000000LL));
    double scalar_root = to_double((bracket.first + bracket.second) / 2);

    Trajectory bwd =
        integrate(space, start, scenario_options(Direction::backward, horizon, rtol, atol));
    check_event_at(rep, bwd, "dpos_1", to_double(ricci_root), "d-positivity loss");
    check_event_at(rep, bwd, "scalar", scalar_root, "scalar curvature sign change");
    auto e1 = first_event(bwd, "dpos_1");
    auto e2 = first_event(bwd, "scalar");
    rep.checks.push_back({"scalar curvature changes sign after d-positivity is lost",
                          e1 && e2 && e2->time > e1->time});
    rep.notes.push_back("smallest Ricci eigenvalue crosses zero at t = " + to_string(ricci_root) +
                        "; cleared scalar polynomial " + scal.to_string() +
                        " has its root bracketed in [" + to_string(bracket.first) + ", " +
                        to_string(bracket.second) + "]");
  } else {
    throw std::domain_error("unknown theorem scenario: " + which);
  }

  return emit_scenario(rep, json, out_path);
}

// ---- verify ----

struct VerifyReport {
  std::vector<ScenarioCheck> checks;
  void add(const std::string& text, bool ok) { checks.push_back({text, ok}); }
  bool success() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
  }
};

void verify_symbolic(VerifyReport& rep) {
  Field2 fam = projected_field_symbolic();

  RatPoly swapped_u = fam.u.substitute({{"x", var("y")}, {"y", var("x")}});
  rep.add("family swap symmetry u(y,x) = v(x,y) holds identically in (x, y, m, p)",
          swapped_u == fam.v);

  AffineLine diag{Rational(0), Rational(0), Rational(1), Rational(1), Rational(1), Rational(-1)};
  LineCheck lc = invariant_line_check(fam, diag);
  rep.add("family diagonal residual u(t,t) - v(t,t) is the zero polynomial in (t, m, p)",
          lc.invariant);

  Field2 wal = projected_field(FlagSpace::wallach());
  std::map<std::string, RatPoly> at11 = {{"m", RatPoly(1)}, {"p", RatPoly(1)}};
  rep.add("family field at m=p=1 equals the Wallach field exactly",
          fam.u.substitute(at11) == wal.u && fam.v.substitute(at11) == wal.v);
}

void verify_numeric(VerifyReport& rep, const FlagSpace& space, bool corrupt) {
  Field2 f = projected_field(space);
  if (corrupt) {
    // negative control: a tiny symmetric perturbation that every consistency
    // check downstream is expected to catch
    f.u += RatPoly(Rational(1, 1000000)) * var("x");
    f.v += RatPoly(Rational(1, 1000000)) * var("y");
  }
  CompiledField cf = CompiledField::compile(f);

  RatPoly swapped_u = f.u.substitute({{"x", var("y")}, {"y", var("x")}});
  rep.add("swap symmetry u(y,x) = v(x,y)", swapped_u == f.v);

  AffineLine diag{Rational(0), Rational(0), Rational(1), Rational(1), Rational(1), Rational(-1)};
  rep.add("diagonal x = y is flow-invariant (exact residual)",
          invariant_line_check(f, diag).invariant);
  AffineLine half_x{Rational(1, 2), Rational(0), Rational(0), Rational(1), Rational(1), Rational(0)};
  rep.add("line x = 1/2 is flow-invariant (exact residual)",
          invariant_line_check(f, half_x).invariant);
  AffineLine half_y{Rational(0), Rational(1, 2), Rational(1), Rational(0), Rational(0), Rational(1)};
  rep.add("line y = 1/2 is flow-invariant (exact residual)",
          invariant_line_check(f, half_y).invariant);

  // closed-form Ricci against the cleared numerators at random metrics
  auto nums = ricci_numerators(space);
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> uni(0.05, 1.5);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    double x = uni(rng), y = uni(rng), z = uni(rng);
    Metric3 g(x, y, z);
    RicciSpectrum r = ricci_components(space, g);
    double den = 4.0 * (space.m + 2.0 * space.p) * x * y * z;
    std::map<std::string, double> at = {{"x", x}, {"y", y}, {"z", z}};
    worst = std::max(worst, std::abs(r.r_x - nums[0].evaluate_double(at) / den));
    worst = std::max(worst, std::abs(r.r_y - nums[1].evaluate_double(at) / den));
    worst = std::max(worst, std::abs(r.r_z - nums[2].evaluate_double(at) / den));
  }
  rep.add("Ricci closed forms match the cleared numerators at 100 random metrics (max dev " +
              fmt(worst) + ")",
          worst < 1e-10);

  if (space.is_wallach()) {
    double worst_sec = 0.0, worst_ric = 0.0;
    for (int k = 0; k < 100; ++k) {
      double x = uni(rng), y = uni(rng), z = uni(rng);
      Metric3 g(x, y, z);
      SectionalTable table = sectional_table(space, g);
      for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
          if (i == j) continue;
          worst_sec = std::max(worst_sec, std::abs(table.value(i, j) - su3::sectional(i, j, g)));
        }
      RicciSpectrum r = ricci_components(space, g);
      const double ricci[3] = {r.r_x, r.r_y, r.r_z};
      for (int i = 1; i <= 6; ++i)
        worst_ric = std::max(worst_ric, std::abs(su3::plane_sum(i, g) -
                                                 kRicciPlaneSumScale * ricci[(i - 1) / 2]));
    }
    rep.add("sectional closed forms match the commutator oracle at 100 random metrics (max dev " +
                fmt(worst_sec) + ")",
            worst_sec < 1e-10);
    rep.add("basis-plane sums equal " + fmt(kRicciPlaneSumScale) +
                " x the Ricci closed forms (max dev " + fmt(worst_ric) + ")",
            worst_ric < 1e-10);

    Metric3 g(0.37, 0.81, 1.13);
    SectionalTable table = sectional_table(space, g);
    bool enc = true;
    for (int base = 1; base <= 6 && enc; ++base)
      for (int a = 0; a <= 1 && enc; ++a)
        for (int b = 0; b <= 2 && enc; ++b)
          for (int c = 0; c <= 2 && enc; ++c) {
            if (a + b + c < 1) continue;
            RicDChoice ch = RicDChoice::from_counts(base, a, b, c);
            RicDChoice ch2 = RicDChoice::from_subset(base, ch.subset);
            enc = (ch2.a == a && ch2.b == b && ch2.c == c) &&
                  ric_d_basis(table, ch) == ric_d_basis(table, ch2);
          }
    rep.add("Ric_d subset and (a,b,c) encodings agree exactly for every choice", enc);

    bool thr = ric_d_threshold(1) == Rational(3, 10) && ric_d_threshold(2) == Rational(3, 10) &&
               ric_d_threshold(3) == Rational(5, 18) && ric_d_threshold(4) == Rational(1, 4);
    rep.add("Ric_d positivity thresholds are exactly 3/10, 3/10, 5/18, 1/4", thr);
  }

  ConsistencyReport cons;
  {
    std::mt19937 rng2(12345);
    std::uniform_real_distribution<double> u2(0.02, 0.96);
    WeightSpec tw = trace_weight();
    int samples = 0;
    while (samples < 50) {
      double x = u2(rng2), y = u2(rng2);
      if (1.0 - x - y < 0.02) continue;
      ++samples;
      auto [uu, vv] = cf.eval(x, y);
      auto G = normalized_field(unnormalized_field(space, Metric3(x, y, 1.0 - x - y)), tw,
                                {x, y, 1.0 - x - y});
      double np = std::hypot(uu, vv), ng = std::hypot(G[0], G[1]);
      if (np < 1e-13 || ng < 1e-13) {
        ++cons.skipped;
        continue;
      }
      cons.max_cross = std::max(cons.max_cross, std::abs(uu * G[1] - vv * G[0]) / (np * ng));
      cons.min_dot = std::min(cons.min_dot, (uu * G[0] + vv * G[1]) / (np * ng));
      ++cons.samples;
    }
  }
  rep.add("polynomial field is positively parallel to the trace-normalized flow at 50 samples "
          "(max cross " + fmt(cons.max_cross) + ")",
          cons.max_cross < 1e-9 && cons.min_dot > 0.0);

  // tangency: W'(g) . N(g) = 0 for g on {W = 1}
  double worst_tan = 0.0;
  {
    std::mt19937 rng3(777);
    std::uniform_real_distribution<double> u3(0.02, 0.96);
    WeightSpec tw = trace_weight();
    WeightSpec vw = volume_weight(space);
    int samples = 0;
    while (samples < 50) {
      double x = u3(rng3), y = u3(rng3);
      if (1.0 - x - y < 0.02) continue;
      ++samples;
      for (const WeightSpec& w : {tw, vw}) {
        std::array<double, 3> g0 = {x, y, 1.0 - x - y};
        double scale = std::pow(w.value(g0), -1.0 / w.degree);
        std::array<double, 3> g = {g0[0] * scale, g0[1] * scale, g0[2] * scale};
        auto N = normalized_field(unnormalized_field(space, Metric3(g[0], g[1], g[2])), w, g);
        auto grad = w.gradient(g);
        worst_tan = std::max(worst_tan,
                             std::abs(grad[0] * N[0] + grad[1] * N[1] + grad[2] * N[2]));
      }
    }
  }
  rep.add("normalized fields are tangent to {W = 1} for trace and volume weights (max dev " +
              fmt(worst_tan) + ")",
          worst_tan < 1e-12);
}

int cmd_verify(const std::string& space_s, bool corrupt, bool json, const std::string& out_path) {
  VerifyReport rep;
  if (space_s == "symbolic") {
    verify_symbolic(rep);
  } else {
    FlagSpace space = parse_space(space_s);
    verify_symbolic(rep);
    verify_numeric(rep, space, corrupt);
  }
  Sink sink(out_path);
  if (json) {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) checks.push_back({{"check", c.text}, {"ok", c.ok}});
    j["checks"] = checks;
    j["success"] = rep.success();
    sink.out() << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      sink.out() << (c.ok ? "ok:   " : "FAIL: ") << c.text << "\n";
    sink.out() << "result: " << (rep.success() ? "success" : "failure") << "\n";
  }
  return rep.success() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature and projected Ricci flow on three-summand flag manifolds"};
  app.require_subcommand(1);

  std::string space = "1,1";
  std::string out_path;
  bool json = false;

  auto* c_curv = app.add_subcommand("curvature", "curvature signature of one metric (JSON)");
  std::string metric = "1,1,1";
  c_curv->add_option("--space", space, "space as m,p")->capture_default_str();
  c_curv->add_option("--metric", metric, "metric as x,y,z")->capture_default_str();
  c_curv->add_option("--out", out_path, "output file (default stdout)");

  auto* c_theorem = app.add_subcommand("theorem", "run one flow scenario and check its claims");
  std::string which;
  double t0 = std::nan("");
  double horizon = 200.0, rtol = 1e-10, atol = 1e-12;
  c_theorem->add_option("scenario", which, "ricci-mixed | ricd-loss | family-dpos")->required();
  c_theorem->add_option("--space", space, "space as m,p")->capture_default_str();
  c_theorem->add_option("--t0", t0, "diagonal start value (scenario default when omitted)");
  c_theorem->add_option("--horizon", horizon, "integration horizon")->capture_default_str();
  c_theorem->add_option("--rtol", rtol, "relative tolerance")->capture_default_str();
  c_theorem->add_option("--atol", atol, "absolute tolerance")->capture_default_str();
  c_theorem->add_flag("--json", json, "JSON report");
  c_theorem->add_option("--out", out_path, "output file (default stdout)");

  auto* c_portrait = app.add_subcommand("portrait", "field samples on an interior lattice (CSV)");
  int grid = 24;
  c_portrait->add_option("--space", space, "space as m,p")->capture_default_str();
  c_portrait->add_option("--grid", grid, "lattice subdivision (>= 2)")->capture_default_str();
  c_portrait->add_option("--out", out_path, "output file (default stdout)");

  auto* c_verify = app.add_subcommand("verify", "identity and consistency self-checks");
  c_verify->add_option("--space", space, "space as m,p, or 'symbolic'")->capture_default_str();
  bool corrupt = false;
  c_verify->add_flag("--corrupt", corrupt)->group("");  // hidden negative control
  c_verify->add_flag("--json", json, "JSON report");
  c_verify->add_option("--out", out_path, "output file (default stdout)");

  auto* c_eq = app.add_subcommand("equilibria", "interior equilibria with classification (JSON)");
  c_eq->add_option("--space", space, "space as m,p")->capture_default_str();
  c_eq->add_option("--out", out_path, "output file (default stdout)");

  auto* c_int = app.add_subcommand("integrate", "one trajectory as CSV");
  std::string start = "0.2,0.2", direction = "fwd";
  c_int->add_option("--space", space, "space as m,p")->capture_default_str();
  c_int->add_option("--start", start, "start point as x,y")->capture_default_str();
  c_int->add_option("--direction", direction, "fwd | bwd")->capture_default_str();
  c_int->add_option("--horizon", horizon, "integration horizon")->capture_default_str();
  c_int->add_option("--rtol", rtol, "relative tolerance")->capture_default_str();
  c_int->add_option("--atol", atol, "absolute tolerance")->capture_default_str();
  c_int->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_curv->parsed()) return cmd_curvature(space, metric, out_path);
    if (c_theorem->parsed())
      return cmd_theorem(which, space, t0, horizon, rtol, atol, json, out_path);
    if (c_portrait->parsed()) return cmd_portrait(space, grid, out_path);
    if (c_verify->parsed()) return cmd_verify(space, corrupt, json, out_path);
    if (c_eq->parsed()) return cmd_equilibria(space, out_path);
    if (c_int->parsed())
      return cmd_integrate(space, start, direction, horizon, rtol, atol, out_path);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
