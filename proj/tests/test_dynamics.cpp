#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "flagflow/dynamics.hpp"

using namespace flagflow;

namespace {

const Equilibrium* by_label(const std::vector<Equilibrium>& eqs, const std::string& label) {
  for (const auto& e : eqs)
    if (e.label == label) return &e;
  return nullptr;
}

double dist(const Equilibrium& e, double x, double y) {
  return std::hypot(e.point.x - x, e.point.y - y);
}

}  // namespace

TEST_CASE("Wallach space has exactly the four known equilibria") {
  auto eqs = find_equilibria(FlagSpace::wallach());
  REQUIRE(eqs.size() == 4);

  const Equilibrium* A = by_label(eqs, "A");
  const Equilibrium* B = by_label(eqs, "B");
  const Equilibrium* C = by_label(eqs, "C");
  const Equilibrium* D = by_label(eqs, "D");
  REQUIRE(A);
  REQUIRE(B);
  REQUIRE(C);
  REQUIRE(D);

  CHECK(dist(*A, 0.25, 0.25) < 1e-10);
  CHECK(dist(*B, 1.0 / 3.0, 1.0 / 3.0) < 1e-10);
  CHECK(dist(*C, 0.25, 0.5) < 1e-10);
  CHECK(dist(*D, 0.5, 0.25) < 1e-10);

  CHECK(A->kind == EquilibriumKind::saddle);
  CHECK(B->kind == EquilibriumKind::repeller);
  CHECK(C->kind == EquilibriumKind::saddle);
  CHECK(D->kind == EquilibriumKind::saddle);

  // A has simple real rates -1/4 and 1/2; B is the isotropic repeller 2/9
  std::array<double, 2> a_rates = {A->eigenvalues[0].real(), A->eigenvalues[1].real()};
  std::sort(a_rates.begin(), a_rates.end());
  CHECK(a_rates[0] == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(a_rates[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(A->eigenvalues[0].imag() == 0.0);
  for (const auto& ev : B->eigenvalues) {
    CHECK(ev.real() == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
    CHECK(ev.imag() == 0.0);
  }
}

TEST_CASE("exact Jacobian at the normal equilibrium is (2/9) I") {
  Field2 f = projected_field(FlagSpace::wallach());
  auto j = jacobian_exact(f, Rational(1, 3), Rational(1, 3));
  CHECK(j[0] == Rational(2, 9));
  CHECK(j[1] == Rational(0));
  CHECK(j[2] == Rational(0));
  CHECK(j[3] == Rational(2, 9));

  // and at the Kaehler equilibrium A the exact rates are -1/4 and 1/2
  auto ja = jacobian_exact(f, Rational(1, 4), Rational(1, 4));
  Rational tr = ja[0] + ja[3];
  Rational det = ja[0] * ja[3] - ja[1] * ja[2];
  CHECK(tr == Rational(1, 4));
  CHECK(det == Rational(-1, 8));  // eigenvalues -1/4 and 1/2
}

TEST_CASE("double-precision Jacobian matches central differences") {
  FlagSpace w = FlagSpace::wallach();
  CompiledField cf = CompiledField::compile(projected_field(w));
  double x = 0.2, y = 0.3, h = 1e-6;
  auto j = jacobian(w, x, y);
  auto fxp = cf.eval(x + h, y), fxm = cf.eval(x - h, y);
  auto fyp = cf.eval(x, y + h), fym = cf.eval(x, y - h);
  CHECK(j[0] == doctest::Approx((fxp[0] - fxm[0]) / (2 * h)).epsilon(1e-7));
  CHECK(j[1] == doctest::Approx((fyp[0] - fym[0]) / (2 * h)).epsilon(1e-7));
  CHECK(j[2] == doctest::Approx((fxp[1] - fxm[1]) / (2 * h)).epsilon(1e-7));
  CHECK(j[3] == doctest::Approx((fyp[1] - fym[1]) / (2 * h)).epsilon(1e-7));
}

TEST_CASE("eigenvalue and classification helpers") {
  auto rot = eigenvalues_2x2({0.0, -1.0, 1.0, 0.0});
  CHECK(rot[0].real() == doctest::Approx(0.0));
  CHECK(std::abs(rot[0].imag()) == doctest::Approx(1.0));
  CHECK(classify(rot) == EquilibriumKind::degenerate);

  CHECK(classify(eigenvalues_2x2({1.0, 0.0, 0.0, 2.0})) == EquilibriumKind::repeller);
  CHECK(classify(eigenvalues_2x2({-1.0, 0.0, 0.0, -2.0})) == EquilibriumKind::attractor);
  CHECK(classify(eigenvalues_2x2({-1.0, 0.0, 0.0, 2.0})) == EquilibriumKind::saddle);
  CHECK(classify(eigenvalues_2x2({0.0, 0.0, 0.0, 0.0})) == EquilibriumKind::degenerate);
}

TEST_CASE("family diagonal equilibrium sits at (m+p)/(2(m+2p))") {
  struct Row {
    int m, p;
    Rational k;
  };
  for (Row row : {Row{1, 1, Rational(1, 3)}, Row{2, 1, Rational(3, 8)}, Row{3, 2, Rational(5, 14)}}) {
    auto eqs = find_equilibria(FlagSpace(row.m, row.p));
    const Equilibrium* K = by_label(eqs, row.m == 1 && row.p == 1 ? "B" : "K");
    REQUIRE(K);
    CHECK(dist(*K, to_double(row.k), to_double(row.k)) < 1e-10);
    CHECK(K->kind == EquilibriumKind::repeller);
  }
}

TEST_CASE("the (2,1) family keeps the Kaehler-type saddles") {
  auto eqs = find_equilibria(FlagSpace(2, 1));
  REQUIRE(eqs.size() == 4);
  bool has_quarter = false, has_c = false, has_d = false;
  for (const auto& e : eqs) {
    if (dist(e, 0.25, 0.25) < 1e-9) {
      has_quarter = true;
      CHECK(e.kind == EquilibriumKind::saddle);
    }
    if (dist(e, 0.3, 0.5) < 1e-9) {
      has_c = true;
      CHECK(e.kind == EquilibriumKind::saddle);
    }
    if (dist(e, 0.5, 0.3) < 1e-9) {
      has_d = true;
      CHECK(e.kind == EquilibriumKind::saddle);
    }
  }
  CHECK(has_quarter);
  CHECK(has_c);
  CHECK(has_d);
}

TEST_CASE("invariant lines of the Wallach field") {
  Field2 f = projected_field(FlagSpace::wallach());
  AffineLine diag{Rational(0), Rational(0), Rational(1), Rational(1), Rational(1), Rational(-1)};
  AffineLine half_x{Rational(1, 2), Rational(0), Rational(0), Rational(1), Rational(1), Rational(0)};
  AffineLine half_y{Rational(0), Rational(1, 2), Rational(1), Rational(0), Rational(0), Rational(1)};
  CHECK(invariant_line_check(f, diag).invariant);
  CHECK(invariant_line_check(f, half_x).invariant);
  CHECK(invariant_line_check(f, half_y).invariant);

  // control: a generic vertical line is not invariant
  AffineLine off{Rational(3, 10), Rational(0), Rational(0), Rational(1), Rational(1), Rational(0)};
  LineCheck lc = invariant_line_check(f, off);
  CHECK(!lc.invariant);
  CHECK(!lc.residual.is_zero());
}

TEST_CASE("the family diagonal is invariant symbolically") {
  Field2 fam = projected_field_symbolic();
  AffineLine diag{Rational(0), Rational(0), Rational(1), Rational(1), Rational(1), Rational(-1)};
  LineCheck lc = invariant_line_check(fam, diag);
  CHECK(lc.invariant);
  CHECK(lc.residual.is_zero());
}

TEST_CASE("equilibria serialize with labels and kinds") {
  auto j = equilibria_json(find_equilibria(FlagSpace::wallach()));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  bool saw_b = false;
  for (const auto& e : j) {
    CHECK(e.contains("label"));
    CHECK(e.contains("x"));
    CHECK(e.contains("eigenvalues"));
    CHECK(e.contains("kind"));
    if (e["label"] == "B") {
      saw_b = true;
      CHECK(e["kind"] == "repeller");
    }
  }
  CHECK(saw_b);
}
