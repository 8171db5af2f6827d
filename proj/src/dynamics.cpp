#include "flagflow/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace flagflow {

const char* to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::repeller: return "repeller";
    case EquilibriumKind::attractor: return "attractor";
    case EquilibriumKind::saddle: return "saddle";
    case EquilibriumKind::degenerate: return "degenerate";
  }
  return "?";
}

std::array<double, 4> jacobian(const FlagSpace& space, double x, double y) {
  Field2 f = projected_field(space);
  std::map<std::string, double> at = {{"x", x}, {"y", y}};
  return {
      f.u.partial_derivative("x").evaluate_double(at),
      f.u.partial_derivative("y").evaluate_double(at),
      f.v.partial_derivative("x").evaluate_double(at),
      f.v.partial_derivative("y").evaluate_double(at),
  };
}

std::array<Rational, 4> jacobian_exact(const Field2& f, const Rational& x, const Rational& y) {
  std::map<std::string, Rational> at = {{"x", x}, {"y", y}};
  return {
      f.u.partial_derivative("x").evaluate(at),
      f.u.partial_derivative("y").evaluate(at),
      f.v.partial_derivative("x").evaluate(at),
      f.v.partial_derivative("y").evaluate(at),
  };
}

std::array<std::complex<double>, 2> eigenvalues_2x2(const std::array<double, 4>& j) {
  double tr = j[0] + j[3];
  double det = j[0] * j[3] - j[1] * j[2];
  double disc = tr * tr - 4.0 * det;
  if (disc >= 0.0) {
    double s = std::sqrt(disc);
    return {std::complex<double>((tr - s) / 2.0, 0.0), std::complex<double>((tr + s) / 2.0, 0.0)};
  }
  double s = std::sqrt(-disc) / 2.0;
  return {std::complex<double>(tr / 2.0, -s), std::complex<double>(tr / 2.0, s)};
}

EquilibriumKind classify(const std::array<std::complex<double>, 2>& ev) {
  constexpr double kBand = 1e-9;
  double re0 = ev[0].real(), re1 = ev[1].real();
  if (std::abs(re0) < kBand || std::abs(re1) < kBand) return EquilibriumKind::degenerate;
  if (re0 > 0.0 && re1 > 0.0) return EquilibriumKind::repeller;
  if (re0 < 0.0 && re1 < 0.0) return EquilibriumKind::attractor;
  return EquilibriumKind::saddle;
}

namespace {

constexpr double kInteriorMargin = 1e-4;
constexpr double kResidualTol = 1e-12;
constexpr double kDedupe = 1e-8;

bool newton(const CompiledField& cf, const std::array<RatPoly, 4>& parts, double& x, double& y) {
  auto fnorm = [&](double a, double b) {
    auto [u, v] = cf.eval(a, b);
    return std::hypot(u, v);
  };
  for (int iter = 0; iter < 60; ++iter) {
    auto [u, v] = cf.eval(x, y);
    if (std::hypot(u, v) < 1e-14) return true;
    std::map<std::string, double> at = {{"x", x}, {"y", y}};
    double a = parts[0].evaluate_double(at), b = parts[1].evaluate_double(at);
    double c = parts[2].evaluate_double(at), d = parts[3].evaluate_double(at);
    double det = a * d - b * c;
    if (std::abs(det) < 1e-14) return false;
    double sx = (-u * d + v * b) / det;
    double sy = (-v * a + u * c) / det;
    double base = std::hypot(u, v);
    double lam = 1.0;
    while (lam > 1e-4 && fnorm(x + lam * sx, y + lam * sy) > base) lam *= 0.5;
    x += lam * sx;
    y += lam * sy;
    if (!std::isfinite(x) || !std::isfinite(y) || std::abs(x) > 10 || std::abs(y) > 10)
      return false;
  }
  return fnorm(x, y) < 1e-13;
}

}  // namespace

std::vector<Equilibrium> find_equilibria(const FlagSpace& space) {
  Field2 f = projected_field(space);
  CompiledField cf = CompiledField::compile(f);
  std::array<RatPoly, 4> parts = {
      f.u.partial_derivative("x"),
      f.u.partial_derivative("y"),
      f.v.partial_derivative("x"),
      f.v.partial_derivative("y"),
  };

  std::vector<std::array<double, 2>> roots;
  const int grid = 40;
  for (int i = 1; i <= grid; ++i) {
    for (int j = 1; j <= grid; ++j) {
      double x = i / double(grid + 1), y = j / double(grid + 1);
      if (x + y >= 1.0) continue;
      if (!newton(cf, parts, x, y)) continue;
      auto [u, v] = cf.eval(x, y);
      if (std::abs(u) >= kResidualTol || std::abs(v) >= kResidualTol) continue;
      if (x < kInteriorMargin || y < kInteriorMargin || 1.0 - x - y < kInteriorMargin) continue;
      bool dup = false;
      for (const auto& r : roots)
        if (std::hypot(r[0] - x, r[1] - y) < kDedupe) {
          dup = true;
          break;
        }
      if (!dup) roots.push_back({x, y});
    }
  }
  std::sort(roots.begin(), roots.end());

  std::vector<Equilibrium> eqs;
  const double kLabel = 1e-6;
  const double diag_k = (space.m + space.p) / (2.0 * (space.m + 2.0 * space.p));
  for (const auto& r : roots) {
    Equilibrium e;
    e.point = SimplexPoint(r[0], r[1]);
    std::map<std::string, double> at = {{"x", r[0]}, {"y", r[1]}};
    e.jac = {parts[0].evaluate_double(at), parts[1].evaluate_double(at),
             parts[2].evaluate_double(at), parts[3].evaluate_double(at)};
    e.eigenvalues = eigenvalues_2x2(e.jac);
    e.kind = classify(e.eigenvalues);
    auto near = [&](double a, double b) {
      return std::abs(r[0] - a) < kLabel && std::abs(r[1] - b) < kLabel;
    };
    if (space.is_wallach()) {
      if (near(0.25, 0.25)) e.label = "A";
      else if (near(1.0 / 3.0, 1.0 / 3.0)) e.label = "B";
      else if (near(0.25, 0.5)) e.label = "C";
      else if (near(0.5, 0.25)) e.label = "D";
    } else if (near(diag_k, diag_k)) {
      e.label = "K";
    }
    eqs.push_back(std::move(e));
  }
  return eqs;
}

LineCheck invariant_line_check(const Field2& f, const AffineLine& line) {
  RatPoly s = var("s");
  std::map<std::string, RatPoly> sub = {
      {"x", RatPoly(line.x0) + RatPoly(line.dx) * s},
      {"y", RatPoly(line.y0) + RatPoly(line.dy) * s},
  };
  RatPoly residual =
      RatPoly(line.nx) * f.u.substitute(sub) + RatPoly(line.ny) * f.v.substitute(sub);
  return {residual.is_zero(), residual};
}

nlohmann::ordered_json equilibria_json(const std::vector<Equilibrium>& eqs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Equilibrium& e : eqs) {
    nlohmann::ordered_json j;
    j["label"] = e.label;
    j["x"] = e.point.x;
    j["y"] = e.point.y;
    nlohmann::ordered_json evs = nlohmann::ordered_json::array();
    for (const auto& ev : e.eigenvalues) {
      evs.push_back({{"re", ev.real()}, {"im", ev.imag()}});
    }
    j["eigenvalues"] = evs;
    j["kind"] = to_string(e.kind);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace flagflow
