#pragma once

#include <array>

#include "flagflow/rational.hpp"

namespace flagflow {

// Generalized flag manifold SU(m+2p)/S(U(m) x U(p) x U(p)) with its three
// isotropy summands. m = p = 1 is the six-dimensional Wallach space SU(3)/T^2,
// the only member with a full sectional-curvature table.
struct FlagSpace {
  int m = 1;
  int p = 1;

  FlagSpace() = default;
  FlagSpace(int m_, int p_);  // throws std::domain_error unless m >= p >= 1

  static FlagSpace wallach() { return FlagSpace(1, 1); }
  bool is_wallach() const { return m == 1 && p == 1; }

  // real dimensions of the three irreducible summands and their total
  int n1() const { return 2 * m * p; }
  int n2() const { return 2 * m * p; }
  int n3() const { return 2 * p * p; }
  int n() const { return n1() + n2() + n3(); }

  bool operator==(const FlagSpace&) const = default;
};

// Invariant metric: the triple of positive weights on the three summands.
struct Metric3 {
  double x = 1.0, y = 1.0, z = 1.0;

  Metric3() = default;
  Metric3(double x_, double y_, double z_);  // throws std::domain_error unless all > 0

  double trace() const { return x + y + z; }
};

// Point of the open planar simplex {x > 0, y > 0, x + y < 1}; the implicit
// third coordinate is z = 1 - x - y.
struct SimplexPoint {
  double x = 1.0 / 3.0, y = 1.0 / 3.0;

  SimplexPoint() = default;
  SimplexPoint(double x_, double y_);  // throws std::domain_error if not interior

  double z() const { return 1.0 - x - y; }
};

SimplexPoint project(const Metric3& g);        // scale to trace one
Metric3 lift(const SimplexPoint& s);           // (x, y, 1-x-y)
Metric3 submersion_metric(double t);           // (t, t, 1-2t), 0 < t < 1/2

// Exact counterparts for scale-invariance properties.
std::array<Rational, 2> project_exact(const std::array<Rational, 3>& g);
std::array<Rational, 3> lift_exact(const std::array<Rational, 2>& s);

}  // namespace flagflow
