#include "flagflow/su3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flagflow::su3 {

namespace {
constexpr cplx kI{0.0, 1.0};
}

Matrix3c Matrix3c::operator+(const Matrix3c& o) const {
  Matrix3c r;
  for (int i = 0; i < 9; ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix3c Matrix3c::operator-(const Matrix3c& o) const {
  Matrix3c r;
  for (int i = 0; i < 9; ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix3c Matrix3c::operator*(const Matrix3c& o) const {
  Matrix3c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx s = 0;
      for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Matrix3c Matrix3c::operator*(double s) const {
  Matrix3c r;
  for (int i = 0; i < 9; ++i) r.a_[i] = a_[i] * s;
  return r;
}

Matrix3c Matrix3c::operator*(cplx s) const {
  Matrix3c r;
  for (int i = 0; i < 9; ++i) r.a_[i] = a_[i] * s;
  return r;
}

double Matrix3c::max_abs() const {
  double m = 0.0;
  for (const cplx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

Matrix3c Matrix3c::elem(int j, int k) {
  Matrix3c r;
  r.at(j - 1, k - 1) = 1.0;
  return r;
}

Matrix3c commutator(const Matrix3c& a, const Matrix3c& b) { return a * b - b * a; }

double trace_form(const Matrix3c& a, const Matrix3c& b) { return -(a * b).trace().real(); }

double su_defect(const Matrix3c& v) {
  double d = std::abs(v.trace());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) d = std::max(d, std::abs(v.at(r, c) + std::conj(v.at(c, r))));
  return d;
}

Matrix3c antisym(int j, int k) { return Matrix3c::elem(j, k) - Matrix3c::elem(k, j); }

Matrix3c sym(int j, int k) { return (Matrix3c::elem(j, k) + Matrix3c::elem(k, j)) * kI; }

const std::array<Matrix3c, 2>& torus_basis() {
  static const std::array<Matrix3c, 2> basis = [] {
    Matrix3c t1, t2;
    t1.at(0, 0) = kI;
    t1.at(1, 1) = -0.5 * kI;
    t1.at(2, 2) = -0.5 * kI;
    t2.at(1, 1) = 0.5 * kI;
    t2.at(2, 2) = -0.5 * kI;
    return std::array<Matrix3c, 2>{t1, t2};
  }();
  return basis;
}

const std::array<Matrix3c, 6>& half_basis() {
  static const std::array<Matrix3c, 6> basis = {
      antisym(1, 2) * 0.5, sym(1, 2) * 0.5, antisym(1, 3) * 0.5,
      sym(1, 3) * 0.5,     antisym(2, 3) * 0.5, sym(2, 3) * 0.5,
  };
  return basis;
}

std::array<double, 6> m_coords(const Matrix3c& v) {
  // the half basis is trace-form orthogonal with norm^2 = 1/2
  std::array<double, 6> c;
  const auto& basis = half_basis();
  for (int i = 0; i < 6; ++i) c[i] = 2.0 * trace_form(v, basis[i]);
  return c;
}

Matrix3c project_m(const Matrix3c& v) {
  auto c = m_coords(v);
  const auto& basis = half_basis();
  Matrix3c r;
  for (int i = 0; i < 6; ++i) r = r + basis[i] * c[i];
  return r;
}

Matrix3c project_k(const Matrix3c& v) { return v - project_m(v); }

std::array<Matrix3c, 6> unit_basis(const Metric3& g) {
  const std::array<double, 6> w = {g.x, g.x, g.y, g.y, g.z, g.z};
  const auto& basis = half_basis();
  std::array<Matrix3c, 6> r;
  for (int i = 0; i < 6; ++i) r[i] = basis[i] * (1.0 / std::sqrt(w[i]));
  return r;
}

double metric_inner(const Matrix3c& a, const Matrix3c& b, const Metric3& g) {
  const std::array<double, 6> w = {g.x, g.x, g.y, g.y, g.z, g.z};
  auto ca = m_coords(a);
  auto cb = m_coords(b);
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += w[i] * ca[i] * cb[i];
  return s;
}

Matrix3c u_tensor(const Matrix3c& x, const Matrix3c& y, const Metric3& g) {
  auto basis = unit_basis(g);
  Matrix3c u;
  for (const Matrix3c& z : basis) {
    double coeff = 0.5 * (metric_inner(project_m(commutator(z, x)), y, g) +
                          metric_inner(x, project_m(commutator(z, y)), g));
    u = u + z * coeff;
  }
  return u;
}

double sectional(int i, int j, const Metric3& g) {
  if (i < 1 || i > 6 || j < 1 || j > 6 || i == j)
    throw std::domain_error("sectional: need distinct basis indices in 1..6");
  auto basis = unit_basis(g);
  const Matrix3c& x = basis[i - 1];
  const Matrix3c& y = basis[j - 1];
  Matrix3c bxy = commutator(x, y);
  Matrix3c bm = project_m(bxy);
  double t1 = -0.75 * metric_inner(bm, bm, g);
  double t2 = -0.5 * metric_inner(project_m(commutator(x, bxy)), y, g);
  double t3 = -0.5 * metric_inner(project_m(commutator(y, commutator(y, x))), x, g);
  Matrix3c uxy = u_tensor(x, y, g);
  double t4 = metric_inner(uxy, uxy, g);
  double t5 = -metric_inner(u_tensor(x, x, g), u_tensor(y, y, g), g);
  return t1 + t2 + t3 + t4 + t5;
}

double plane_sum(int i, const Metric3& g) {
  double s = 0.0;
  for (int j = 1; j <= 6; ++j)
    if (j != i) s += sectional(i, j, g);
  return s;
}

}  // namespace flagflow::su3
