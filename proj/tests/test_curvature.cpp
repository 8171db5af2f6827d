#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "flagflow/curvature.hpp"

using namespace flagflow;

namespace {
const FlagSpace kWallach = FlagSpace::wallach();
}

TEST_CASE("Ricci spectrum at reference metrics") {
  RicciSpectrum r = ricci_components(kWallach, Metric3(1, 1, 1));
  CHECK(r.r_x == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
  CHECK(r.r_y == doctest::Approx(5.0 / 12.0).epsilon(1e-15));
  CHECK(r.r_z == doctest::Approx(5.0 / 12.0).epsilon(1e-15));

  // Ricci-flat pair of directions at the segment endpoint t = 1/8
  RicciSpectrum r2 = ricci_components(kWallach, Metric3(0.125, 0.125, 0.75));
  CHECK(std::abs(r2.r_x) < 1e-14);
  CHECK(std::abs(r2.r_y) < 1e-14);
  CHECK(r2.r_z == doctest::Approx(40.0 / 9.0).epsilon(1e-13));

  RicciSpectrum r3 = ricci_components(FlagSpace(2, 1), Metric3(1, 1, 1));
  CHECK(r3.r_x == doctest::Approx(7.0 / 16.0).epsilon(1e-15));
  CHECK(r3.r_y == doctest::Approx(7.0 / 16.0).epsilon(1e-15));
  CHECK(r3.r_z == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
}

TEST_CASE("scalar curvature sums the spectrum with multiplicities") {
  CHECK(scalar_curvature(kWallach, Metric3(1, 1, 1)) == doctest::Approx(2.5).epsilon(1e-15));
  FlagSpace f(2, 1);
  double s = scalar_curvature(f, Metric3(1, 1, 1));
  CHECK(s == doctest::Approx(4 * (7.0 / 16.0) + 4 * (7.0 / 16.0) + 2 * (3.0 / 8.0)).epsilon(1e-14));
}

TEST_CASE("Ricci scales inversely with the metric") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uni(0.05, 1.5);
  for (int k = 0; k < 20; ++k) {
    double x = uni(rng), y = uni(rng), z = uni(rng);
    RicciSpectrum a = ricci_components(kWallach, Metric3(x, y, z));
    RicciSpectrum b = ricci_components(kWallach, Metric3(2 * x, 2 * y, 2 * z));
    // dyadic scaling keeps the arithmetic exact
    CHECK(b.r_x == a.r_x / 2);
    CHECK(b.r_y == a.r_y / 2);
    CHECK(b.r_z == a.r_z / 2);
  }
}

TEST_CASE("sectional table at the normal metric") {
  SectionalTable t = sectional_table(kWallach, Metric3(1, 1, 1));
  // same-summand planes have curvature 1/x = 1, all mixed planes 1/16
  CHECK(t.value(1, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.value(3, 4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.value(5, 6) == doctest::Approx(1.0).epsilon(1e-15));
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j || (i - 1) / 2 == (j - 1) / 2) continue;
      CHECK(t.value(i, j) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
    }
  CHECK(t.min() == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(t.value(2, 5) == t.value(1, 5));  // shared mixed expression
  CHECK_THROWS_AS(t.value(0, 1), std::domain_error);
  CHECK_THROWS_AS(t.value(1, 1), std::domain_error);
}

TEST_CASE("sectional table is symmetric and Wallach-only") {
  SectionalTable t = sectional_table(kWallach, Metric3(0.3, 0.5, 0.2));
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) CHECK(t.value(i, j) == t.value(j, i));
  CHECK_THROWS_AS(sectional_table(FlagSpace(2, 1), Metric3(1, 1, 1)), std::domain_error);
}

TEST_CASE("Ric_d subset and count encodings agree") {
  Metric3 g(0.37, 0.81, 1.13);
  SectionalTable t = sectional_table(kWallach, g);
  for (int base = 1; base <= 6; ++base)
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) {
          if (a + b + c < 1) continue;
          RicDChoice byCounts = RicDChoice::from_counts(base, a, b, c);
          RicDChoice bySubset = RicDChoice::from_subset(base, byCounts.subset);
          CHECK(bySubset.a == a);
          CHECK(bySubset.b == b);
          CHECK(bySubset.c == c);
          CHECK(ric_d_basis(t, byCounts) == ric_d_basis(t, bySubset));
        }
}

TEST_CASE("ric_d_min agrees with exhaustive enumeration") {
  Metric3 g(0.31, 0.31, 0.38);
  SectionalTable t = sectional_table(kWallach, g);
  for (int d = 1; d <= 5; ++d) {
    double best = 1e300;
    for (int base = 1; base <= 6; ++base)
      for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 2; ++b)
          for (int c = 0; c <= 2; ++c) {
            if (a + b + c != d) continue;
            best = std::min(best, ric_d_basis(t, RicDChoice::from_counts(base, a, b, c)));
          }
    CHECK(ric_d_min(kWallach, g, d) == doctest::Approx(best).epsilon(1e-14));
  }
}

TEST_CASE("segment families reproduce the table values") {
  // on (t, t, 1-2t) the exact families carry the sign of every Ric_d choice
  for (Rational t : {Rational(3, 20), Rational(27, 100), Rational(3, 10), Rational(7, 20),
                     Rational(9, 20)}) {
    double tv = to_double(t);
    Metric3 g(tv, tv, 1.0 - 2.0 * tv);
    SectionalTable table = sectional_table(kWallach, g);
    double scale_mixed = 16.0 * tv * tv;
    double scale_third = scale_mixed * (1.0 - 2.0 * tv);
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) {
          if (a + b + c < 1) continue;
          double mixed = ric_d_basis(table, RicDChoice::from_counts(1, a, b, c));
          CHECK(to_double(ric_d_segment_mixed(a, b, c, t)) ==
                doctest::Approx(scale_mixed * mixed).epsilon(1e-12));
          double third = ric_d_basis(table, RicDChoice::from_counts(5, a, b, c));
          CHECK(to_double(ric_d_segment_third(a, a + b + c, t)) ==
                doctest::Approx(scale_third * third).epsilon(1e-12));
        }
  }
}

TEST_CASE("Ric_d positivity thresholds on the segment are exact") {
  CHECK(ric_d_threshold(1) == Rational(3, 10));
  CHECK(ric_d_threshold(2) == Rational(3, 10));
  CHECK(ric_d_threshold(3) == Rational(5, 18));
  CHECK(ric_d_threshold(4) == Rational(1, 4));
  CHECK_THROWS_AS(ric_d_threshold(5), std::domain_error);
  CHECK_THROWS_AS(ric_d_threshold(0), std::domain_error);
}

TEST_CASE("the d = 3 boundary case evaluates to 2/5, not zero") {
  // choice (a,b,c) = (0,2,1) at t = 3/10: the scaled value is exactly 2/5,
  // strictly positive; the d = 3 sign change happens later, at t = 5/18
  CHECK(ric_d_segment_mixed(0, 2, 1, Rational(3, 10)) == Rational(2, 5));
  CHECK(ric_d_segment_mixed(0, 2, 1, Rational(5, 18)) == Rational(0));
  // d = 1, 2 do change sign at 3/10; d = 3 changes sign only at 5/18
  CHECK(ric_d_min(kWallach, submersion_metric(0.3 - 1e-9), 1) < 0);
  CHECK(ric_d_min(kWallach, submersion_metric(0.3 + 1e-9), 1) > 0);
  CHECK(ric_d_min(kWallach, submersion_metric(0.3 - 1e-9), 2) < 0);
  CHECK(ric_d_min(kWallach, submersion_metric(0.3 - 1e-9), 3) > 0);
  CHECK(ric_d_min(kWallach, submersion_metric(5.0 / 18.0 + 1e-9), 3) > 0);
  CHECK(ric_d_min(kWallach, submersion_metric(5.0 / 18.0 - 1e-9), 3) < 0);
}

TEST_CASE("d-positivity sums the smallest Ricci eigenvalues") {
  double v = 5.0 / 12.0;
  for (int d = 1; d <= 6; ++d)
    CHECK(d_positive_sum(kWallach, Metric3(1, 1, 1), d) == doctest::Approx(d * v).epsilon(1e-14));

  FlagSpace f(2, 1);
  // spectrum 7/16 (x8) and 3/8 (x2), ascending
  CHECK(d_positive_sum(f, Metric3(1, 1, 1), 1) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  CHECK(d_positive_sum(f, Metric3(1, 1, 1), 2) == doctest::Approx(3.0 / 4.0).epsilon(1e-15));
  CHECK(d_positive_sum(f, Metric3(1, 1, 1), 3) ==
        doctest::Approx(3.0 / 4.0 + 7.0 / 16.0).epsilon(1e-15));
  CHECK(d_positive_sum(f, Metric3(1, 1, 1), 10) ==
        doctest::Approx(scalar_curvature(f, Metric3(1, 1, 1))).epsilon(1e-14));
  CHECK_THROWS_AS(d_positive_sum(f, Metric3(1, 1, 1), 11), std::domain_error);
}

TEST_CASE("signature carries the right fields") {
  CurvatureSignature sig = signature(kWallach, Metric3(1, 1, 1));
  CHECK(sig.wallach);
  CHECK(sig.scalar == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(sig.min_sec == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(sig.dpos.size() == 6);

  auto j = signature_json(sig);
  CHECK(j.contains("r_x"));
  CHECK(j.contains("min_sec"));
  CHECK(j.contains("ricd_min_5"));
  CHECK(j.contains("dpos_6"));
  CHECK(!j.contains("dpos_7"));

  CurvatureSignature fam = signature(FlagSpace(2, 1), Metric3(1, 1, 1));
  CHECK(!fam.wallach);
  CHECK(std::isnan(fam.min_sec));
  CHECK(fam.dpos.size() == 10);
  auto jf = signature_json(fam);
  CHECK(!jf.contains("min_sec"));
  CHECK(jf.contains("dpos_10"));
}
