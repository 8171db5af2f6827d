#include "flagflow/spaces.hpp"

#include <stdexcept>
#include <string>

namespace flagflow {

FlagSpace::FlagSpace(int m_, int p_) : m(m_), p(p_) {
  if (m < p || p < 1)
    throw std::domain_error("FlagSpace requires m >= p >= 1, got m=" + std::to_string(m_) +
                            " p=" + std::to_string(p_));
}

Metric3::Metric3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0))
    throw std::domain_error("Metric3 weights must be positive");
}

SimplexPoint::SimplexPoint(double x_, double y_) : x(x_), y(y_) {
  if (!(x > 0.0 && y > 0.0 && x + y < 1.0))
    throw std::domain_error("SimplexPoint must lie in the open simplex x,y > 0, x + y < 1");
}

SimplexPoint project(const Metric3& g) {
  double t = g.trace();
  return SimplexPoint(g.x / t, g.y / t);
}

Metric3 lift(const SimplexPoint& s) { return Metric3(s.x, s.y, s.z()); }

Metric3 submersion_metric(double t) {
  if (!(t > 0.0 && t < 0.5))
    throw std::domain_error("submersion_metric requires 0 < t < 1/2");
  return Metric3(t, t, 1.0 - 2.0 * t);
}

std::array<Rational, 2> project_exact(const std::array<Rational, 3>& g) {
  Rational t = g[0] + g[1] + g[2];
  if (t == 0) throw std::domain_error("project_exact: zero trace");
  return {g[0] / t, g[1] / t};
}

std::array<Rational, 3> lift_exact(const std::array<Rational, 2>& s) {
  return {s[0], s[1], Rational(1) - s[0] - s[1]};
}

}  // namespace flagflow
