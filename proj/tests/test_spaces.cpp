#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "flagflow/spaces.hpp"

using namespace flagflow;

TEST_CASE("summand dimensions") {
  FlagSpace w = FlagSpace::wallach();
  CHECK(w.n1() == 2);
  CHECK(w.n2() == 2);
  CHECK(w.n3() == 2);
  CHECK(w.n() == 6);
  CHECK(w.is_wallach());

  FlagSpace f(2, 1);
  CHECK(f.n1() == 4);
  CHECK(f.n2() == 4);
  CHECK(f.n3() == 2);
  CHECK(f.n() == 10);
  CHECK(!f.is_wallach());

  FlagSpace g(3, 2);
  CHECK(g.n1() == 12);
  CHECK(g.n3() == 8);
  CHECK(g.n() == 32);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FlagSpace(0, 1), std::domain_error);
  CHECK_THROWS_AS(FlagSpace(1, 0), std::domain_error);
  CHECK_THROWS_AS(FlagSpace(1, 2), std::domain_error);  // needs m >= p
  CHECK_THROWS_AS(FlagSpace(-2, -1), std::domain_error);
}

TEST_CASE("metric validation") {
  CHECK_NOTHROW(Metric3(0.1, 2.0, 30.0));
  CHECK_THROWS_AS(Metric3(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Metric3(1.0, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Metric3(1.0, 1.0, std::nan("")), std::domain_error);
}

TEST_CASE("simplex points stay interior") {
  SimplexPoint p(0.25, 0.25);
  CHECK(p.z() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(SimplexPoint(0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(SimplexPoint(0.0, 0.2), std::domain_error);
  CHECK_THROWS_AS(SimplexPoint(-0.1, 0.2), std::domain_error);
}

TEST_CASE("projection is exactly scale invariant for dyadic scalings") {
  Metric3 g(0.3, 0.45, 1.2);
  Metric3 g2(0.6, 0.9, 2.4);
  SimplexPoint p = project(g), q = project(g2);
  CHECK(p.x == q.x);
  CHECK(p.y == q.y);
}

TEST_CASE("project and lift round-trip") {
  SimplexPoint p(0.2, 0.35);
  Metric3 g = lift(p);
  SimplexPoint q = project(g);
  CHECK(q.x == doctest::Approx(p.x).epsilon(1e-15));
  CHECK(q.y == doctest::Approx(p.y).epsilon(1e-15));
}

TEST_CASE("exact projection is scale invariant and sums to one") {
  std::array<Rational, 3> g = {Rational(1, 5), Rational(7, 20), Rational(9, 20)};
  auto s = project_exact(g);
  CHECK(s[0] == Rational(1, 5));
  CHECK(s[1] == Rational(7, 20));

  std::array<Rational, 3> scaled = {g[0] * 7, g[1] * 7, g[2] * 7};
  auto s2 = project_exact(scaled);
  CHECK(s2 == s);

  auto back = lift_exact(s);
  CHECK(back[0] + back[1] + back[2] == Rational(1));
}

TEST_CASE("submersion segment") {
  Metric3 g = submersion_metric(0.2);
  CHECK(g.x == 0.2);
  CHECK(g.y == 0.2);
  CHECK(g.z == doctest::Approx(0.6).epsilon(1e-15));
  CHECK_THROWS_AS(submersion_metric(0.5), std::domain_error);
  CHECK_THROWS_AS(submersion_metric(0.0), std::domain_error);
}
