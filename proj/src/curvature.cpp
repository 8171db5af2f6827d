#include "flagflow/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flagflow {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int summand_of(int i) { return (i - 1) / 2; }  // 0, 1, 2

int partner_of(int i) { return ((i - 1) ^ 1) + 1; }

}  // namespace

RicciSpectrum ricci_components(const FlagSpace& space, const Metric3& g) {
  const double x = g.x, y = g.y, z = g.z;
  const double q1 = space.p / (4.0 * (space.m + 2.0 * space.p));
  const double q3 = space.m / (4.0 * (space.m + 2.0 * space.p));
  RicciSpectrum r;
  r.r_x = 1.0 / (2.0 * x) + q1 * (x / (y * z) - z / (x * y) - y / (x * z));
  r.r_y = 1.0 / (2.0 * y) + q1 * (y / (x * z) - z / (x * y) - x / (y * z));
  r.r_z = 1.0 / (2.0 * z) + q3 * (z / (x * y) - y / (x * z) - x / (y * z));
  return r;
}

double scalar_curvature(const FlagSpace& space, const Metric3& g) {
  RicciSpectrum r = ricci_components(space, g);
  return space.n1() * r.r_x + space.n2() * r.r_y + space.n3() * r.r_z;
}

double SectionalTable::value(int i, int j) const {
  if (i < 1 || i > 6 || j < 1 || j > 6 || i == j)
    throw std::domain_error("SectionalTable::value: need distinct indices in 1..6");
  return k_[i - 1][j - 1];
}

double SectionalTable::min() const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) m = std::min(m, k_[i][j]);
  return m;
}

SectionalTable sectional_table(const FlagSpace& space, const Metric3& g) {
  if (!space.is_wallach())
    throw std::domain_error("sectional_table is defined for the Wallach space only");
  const double x = g.x, y = g.y, z = g.z;
  const double xyz = x * y * z;
  const double k_xy =
      -3.0 / 16.0 * z / (x * y) + 1.0 / (8.0 * x) + 1.0 / (8.0 * y) + (x - y) * (x - y) / (16.0 * xyz);
  const double k_xz =
      -3.0 / 16.0 * y / (x * z) + 1.0 / (8.0 * x) + 1.0 / (8.0 * z) + (z - x) * (z - x) / (16.0 * xyz);
  const double k_yz =
      -3.0 / 16.0 * x / (y * z) + 1.0 / (8.0 * y) + 1.0 / (8.0 * z) + (y - z) * (y - z) / (16.0 * xyz);
  const std::array<double, 3> same = {1.0 / x, 1.0 / y, 1.0 / z};
  const std::array<std::array<double, 3>, 3> mixed = {{
      {0.0, k_xy, k_xz},
      {k_xy, 0.0, k_yz},
      {k_xz, k_yz, 0.0},
  }};
  SectionalTable t;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      int si = summand_of(i), sj = summand_of(j);
      t.k_[i - 1][j - 1] = (si == sj) ? same[si] : mixed[si][sj];
    }
  return t;
}

RicDChoice RicDChoice::from_subset(int base, std::vector<int> subset) {
  if (base < 1 || base > 6) throw std::domain_error("RicDChoice: base must be in 1..6");
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::domain_error("RicDChoice: subset indices must be distinct");
  RicDChoice ch;
  ch.base = base;
  ch.subset = std::move(subset);
  int sb = summand_of(base);
  for (int idx : ch.subset) {
    if (idx < 1 || idx > 6 || idx == base)
      throw std::domain_error("RicDChoice: subset indices must be in 1..6 and differ from base");
    int s = summand_of(idx);
    if (s == sb)
      ch.a += 1;
    else {
      // lower- vs higher-indexed of the two other summands
      int lo = (sb == 0) ? 1 : 0;
      int hi = (sb == 2) ? 1 : 2;
      if (s == lo)
        ch.b += 1;
      else if (s == hi)
        ch.c += 1;
    }
  }
  return ch;
}

RicDChoice RicDChoice::from_counts(int base, int a, int b, int c) {
  if (base < 1 || base > 6) throw std::domain_error("RicDChoice: base must be in 1..6");
  if (a < 0 || a > 1 || b < 0 || b > 2 || c < 0 || c > 2 || a + b + c < 1)
    throw std::domain_error("RicDChoice: counts must satisfy a<=1, b<=2, c<=2, a+b+c>=1");
  int sb = summand_of(base);
  int lo = (sb == 0) ? 1 : 0;
  int hi = (sb == 2) ? 1 : 2;
  std::vector<int> subset;
  if (a) subset.push_back(partner_of(base));
  for (int k = 0; k < b; ++k) subset.push_back(2 * lo + 1 + k);
  for (int k = 0; k < c; ++k) subset.push_back(2 * hi + 1 + k);
  return from_subset(base, std::move(subset));
}

double ric_d_basis(const SectionalTable& table, const RicDChoice& choice) {
  double s = 0.0;
  for (int j : choice.subset) s += table.value(choice.base, j);
  return s;
}

double ric_d_basis(const FlagSpace& space, const Metric3& g, const RicDChoice& choice) {
  return ric_d_basis(sectional_table(space, g), choice);
}

double ric_d_min(const FlagSpace& space, const Metric3& g, int d) {
  if (d < 1 || d > 5) throw std::domain_error("ric_d_min: d must be in 1..5");
  SectionalTable table = sectional_table(space, g);
  double best = std::numeric_limits<double>::infinity();
  for (int base = 1; base <= 6; ++base) {
    std::vector<int> others;
    for (int j = 1; j <= 6; ++j)
      if (j != base) others.push_back(j);
    // all d-subsets of the 5 others
    std::vector<int> pick(d);
    auto rec = [&](auto&& self, int start, int depth) -> void {
      if (depth == d) {
        double s = 0.0;
        for (int idx : pick) s += table.value(base, idx);
        best = std::min(best, s);
        return;
      }
      for (int k = start; k < 5; ++k) {
        pick[depth] = others[k];
        self(self, k + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return best;
}

Rational ric_d_segment_mixed(int a, int b, int c, const Rational& t) {
  return Rational(-3 * b + c) + Rational(2 * (8 * a + 5 * b - c)) * t;
}

Rational ric_d_segment_third(int a, int d, const Rational& t) {
  Rational one_2t = Rational(1) - 2 * t;
  return Rational(16 * a) * t * t + Rational(d - a) * one_2t * one_2t;
}

namespace {

// sup of {t in (0,1/2): f0 + f1 t <= 0}, or 0 if empty, 1/2 if it reaches 1/2
Rational last_bad_linear(long f0, long f1) {
  const Rational half(1, 2);
  if (f1 == 0) return f0 <= 0 ? half : Rational(0);
  Rational r = Rational(-f0) / Rational(f1);
  if (f1 > 0) {  // bad on (0, r]
    if (r <= 0) return Rational(0);
    return std::min(r, half);
  }
  // bad on [r, 1/2)
  return r < half ? half : Rational(0);
}

// same for A t^2 + B t + C with A > 0 (bad set is the root interval)
Rational last_bad_quadratic(long A, long B, long C) {
  const Rational half(1, 2);
  Rational disc = Rational(B) * B - Rational(4) * A * C;
  if (disc < 0) return Rational(0);
  Rational vertex = Rational(-B) / (2 * A);
  if (disc == 0) return (vertex > 0 && vertex < half) ? vertex : Rational(0);
  // Cannot happen for the segment families (disc = -64a(d-a) <= 0); an exact
  // irrational endpoint would need root isolation this module does not do.
  throw std::logic_error("ric_d_threshold: unexpected positive discriminant");
}

}  // namespace

Rational ric_d_threshold(int d) {
  if (d < 1 || d > 4) throw std::domain_error("ric_d_threshold: d must be in 1..4");
  Rational best(0);
  for (int a = 0; a <= std::min(1, d); ++a) {
    for (int b = 0; b <= 2; ++b) {
      int c = d - a - b;
      if (c < 0 || c > 2) continue;
      best = std::max(best, last_bad_linear(-3 * b + c, 2 * (8 * a + 5 * b - c)));
    }
    int bc = d - a;
    if (bc >= 0 && bc <= 4)
      best = std::max(best, last_bad_quadratic(16 * a + 4 * bc, -4 * bc, bc));
  }
  return best;
}

double d_positive_sum(const FlagSpace& space, const Metric3& g, int d) {
  if (d < 1 || d > space.n())
    throw std::domain_error("d_positive_sum: d must be in 1..n");
  RicciSpectrum r = ricci_components(space, g);
  std::array<std::pair<double, int>, 3> eig = {{
      {r.r_x, space.n1()},
      {r.r_y, space.n2()},
      {r.r_z, space.n3()},
  }};
  std::sort(eig.begin(), eig.end());
  double s = 0.0;
  int left = d;
  for (const auto& [val, mult] : eig) {
    int take = std::min(left, mult);
    s += take * val;
    left -= take;
    if (left == 0) break;
  }
  return s;
}

CurvatureSignature signature(const FlagSpace& space, const Metric3& g) {
  CurvatureSignature sig;
  sig.ricci = ricci_components(space, g);
  sig.scalar = scalar_curvature(space, g);
  sig.wallach = space.is_wallach();
  if (sig.wallach) {
    SectionalTable table = sectional_table(space, g);
    sig.min_sec = table.min();
    for (int d = 1; d <= 5; ++d) sig.ricd_min[d - 1] = ric_d_min(space, g, d);
  } else {
    sig.min_sec = kNaN;
    sig.ricd_min.fill(kNaN);
  }
  sig.dpos.resize(space.n());
  for (int d = 1; d <= space.n(); ++d) sig.dpos[d - 1] = d_positive_sum(space, g, d);
  return sig;
}

nlohmann::ordered_json signature_json(const CurvatureSignature& sig) {
  nlohmann::ordered_json j;
  j["r_x"] = sig.ricci.r_x;
  j["r_y"] = sig.ricci.r_y;
  j["r_z"] = sig.ricci.r_z;
  j["scalar"] = sig.scalar;
  if (sig.wallach) {
    j["min_sec"] = sig.min_sec;
    for (int d = 1; d <= 5; ++d) j["ricd_min_" + std::to_string(d)] = sig.ricd_min[d - 1];
  }
  for (std::size_t d = 1; d <= sig.dpos.size(); ++d)
    j["dpos_" + std::to_string(d)] = sig.dpos[d - 1];
  return j;
}

}  // namespace flagflow
