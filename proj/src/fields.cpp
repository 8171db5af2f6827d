#include "flagflow/fields.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "flagflow/curvature.hpp"

namespace flagflow {

namespace {

Field2 wallach_field() {
  RatPoly x = var("x"), y = var("y");
  RatPoly u = 2 * x * (x * x * (2 - 12 * y) - 3 * x * (4 * y * y - 6 * y + 1) + 6 * y * y - 6 * y + 1);
  RatPoly v = -2 * y * (2 * y - 1) * (6 * x * x + 6 * x * (y - 1) - y + 1);
  return {u, v};
}

}  // namespace

Field2 projected_field_symbolic() {
  RatPoly x = var("x"), y = var("y"), m = var("m"), p = var("p");
  RatPoly u = -x * (2 * x - 1) *
              (m * (4 * y - 1) * (x + y - 1) + p * (x * (8 * y - 1) + 8 * y * y - 7 * y + 1));
  RatPoly v = -y * (2 * y - 1) *
              (m * (4 * x - 1) * (x + y - 1) + p * (8 * x * x + x * (8 * y - 7) - y + 1));
  return {u, v};
}

Field2 projected_field(const FlagSpace& space) {
  if (space.is_wallach()) return wallach_field();
  Field2 f = projected_field_symbolic();
  std::map<std::string, RatPoly> mp = {{"m", RatPoly(space.m)}, {"p", RatPoly(space.p)}};
  return {f.u.substitute(mp), f.v.substitute(mp)};
}

std::array<RatPoly, 3> ricci_numerators_symbolic() {
  RatPoly x = var("x"), y = var("y"), z = var("z"), m = var("m"), p = var("p");
  RatPoly c = 2 * (m + 2 * p);
  return {
      c * y * z + p * (x * x - y * y - z * z),
      c * x * z + p * (y * y - x * x - z * z),
      c * x * y + m * (z * z - x * x - y * y),
  };
}

std::array<RatPoly, 3> ricci_numerators(const FlagSpace& space) {
  auto sym = ricci_numerators_symbolic();
  std::map<std::string, RatPoly> mp = {{"m", RatPoly(space.m)}, {"p", RatPoly(space.p)}};
  return {sym[0].substitute(mp), sym[1].substitute(mp), sym[2].substitute(mp)};
}

RatPoly segment_restrict(const RatPoly& poly_xyz) {
  RatPoly t = var("t");
  return poly_xyz.substitute({{"x", t}, {"y", t}, {"z", 1 - 2 * t}});
}

RatPoly scalar_segment_numerator(const FlagSpace& space) {
  auto n = ricci_numerators(space);
  RatPoly acc = space.n1() * segment_restrict(n[0]) + space.n2() * segment_restrict(n[1]) +
                space.n3() * segment_restrict(n[2]);
  return acc;
}

std::array<double, 3> unnormalized_field(const FlagSpace& space, const Metric3& g) {
  RicciSpectrum r = ricci_components(space, g);
  return {-2.0 * g.x * r.r_x, -2.0 * g.y * r.r_y, -2.0 * g.z * r.r_z};
}

WeightSpec trace_weight() {
  WeightSpec w;
  w.value = [](const std::array<double, 3>& g) { return g[0] + g[1] + g[2]; };
  w.gradient = [](const std::array<double, 3>&) { return std::array<double, 3>{1.0, 1.0, 1.0}; };
  w.degree = 1.0;
  return w;
}

WeightSpec volume_weight(const FlagSpace& space) {
  const double n1 = space.n1(), n2 = space.n2(), n3 = space.n3();
  const double n = n1 + n2 + n3;
  WeightSpec w;
  w.value = [=](const std::array<double, 3>& g) {
    return std::pow(g[0], n1 / n) * std::pow(g[1], n2 / n) * std::pow(g[2], n3 / n);
  };
  w.gradient = [=](const std::array<double, 3>& g) {
    double val = std::pow(g[0], n1 / n) * std::pow(g[1], n2 / n) * std::pow(g[2], n3 / n);
    return std::array<double, 3>{val * n1 / (n * g[0]), val * n2 / (n * g[1]),
                                 val * n3 / (n * g[2])};
  };
  w.degree = 1.0;
  return w;
}

std::array<double, 3> normalized_field(const std::array<double, 3>& field,
                                       const WeightSpec& weight,
                                       const std::array<double, 3>& at) {
  auto grad = weight.gradient(at);
  double rho = (grad[0] * field[0] + grad[1] * field[1] + grad[2] * field[2]) / weight.degree;
  return {field[0] - rho * at[0], field[1] - rho * at[1], field[2] - rho * at[2]};
}

ConsistencyReport field_consistency(const FlagSpace& space, int n_samples, unsigned seed) {
  Field2 f = projected_field(space);
  CompiledField cf = CompiledField::compile(f);
  WeightSpec tw = trace_weight();
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.02, 0.96);
  ConsistencyReport rep;
  while (rep.samples < n_samples) {
    double x = uni(rng), y = uni(rng);
    if (1.0 - x - y < 0.02) continue;
    ++rep.samples;
    auto [u, v] = cf.eval(x, y);
    std::array<double, 3> g = {x, y, 1.0 - x - y};
    auto G = normalized_field(unnormalized_field(space, Metric3(x, y, 1.0 - x - y)), tw, g);
    double np = std::hypot(u, v);
    double ng = std::hypot(G[0], G[1]);
    if (np < 1e-13 || ng < 1e-13) {
      ++rep.skipped;
      continue;
    }
    double cross = std::abs(u * G[1] - v * G[0]) / (np * ng);
    double dot = (u * G[0] + v * G[1]) / (np * ng);
    rep.max_cross = std::max(rep.max_cross, cross);
    rep.min_dot = std::min(rep.min_dot, dot);
  }
  return rep;
}

std::vector<CompiledField::Term> CompiledField::lower(const RatPoly& p) {
  const auto& vars = p.variables();
  int ix = -1, iy = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == "x")
      ix = static_cast<int>(i);
    else if (vars[i] == "y")
      iy = static_cast<int>(i);
    else
      throw std::invalid_argument("CompiledField: variables must be within {x, y}");
  }
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Term ct{0, 0, to_double(t.coeff)};
    if (ix >= 0) ct.ex = t.exps[ix];
    if (iy >= 0) ct.ey = t.exps[iy];
    out.push_back(ct);
  }
  return out;
}

double CompiledField::eval_terms(const std::vector<Term>& terms, double x, double y) {
  double acc = 0.0;
  for (const Term& t : terms) {
    double v = t.c;
    for (unsigned k = 0; k < t.ex; ++k) v *= x;
    for (unsigned k = 0; k < t.ey; ++k) v *= y;
    acc += v;
  }
  return acc;
}

CompiledField CompiledField::compile(const Field2& f) {
  CompiledField cf;
  cf.u_ = lower(f.u);
  RatPoly swapped = f.u.substitute({{"x", var("y")}, {"y", var("x")}});
  if (swapped == f.v) {
    cf.swap_symmetric_ = true;
  } else {
    cf.v_ = lower(f.v);
  }
  return cf;
}

std::array<double, 2> CompiledField::eval(double x, double y) const {
  double u = eval_terms(u_, x, y);
  double v = swap_symmetric_ ? eval_terms(u_, y, x) : eval_terms(v_, x, y);
  return {u, v};
}

}  // namespace flagflow
