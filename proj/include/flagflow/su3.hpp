#pragma once

#include <array>
#include <complex>

#include "flagflow/spaces.hpp"

// First-principles curvature oracle on SU(3)/T^2, built directly from 3x3
// matrix arithmetic in the Weyl basis. Everything here is independent of the
// closed-form expressions in curvature.hpp so the two can be checked against
// each other.
//
// Conventions:
//   A_jk = E_jk - E_kj,  S_jk = i(E_jk + E_kj)  (1 <= j < k <= 3)
//   torus: (1/2)diag(2i,-i,-i), (1/2)diag(0,i,-i)
//   half basis of the isotropy complement: A12/2, S12/2, A13/2, S13/2,
//   A23/2, S23/2, grouped in pairs into the three summands
//   trace form <a,b> = -Re tr(ab); each half-basis element has norm^2 = 1/2
//   metric (x,y,z): g = 2x<.,.> on the first summand, etc., so that
//   g(A12/2, A12/2) = x
namespace flagflow::su3 {

using cplx = std::complex<double>;

class Matrix3c {
 public:
  Matrix3c() = default;

  cplx& at(int r, int c) { return a_[3 * r + c]; }
  const cplx& at(int r, int c) const { return a_[3 * r + c]; }

  Matrix3c operator+(const Matrix3c& o) const;
  Matrix3c operator-(const Matrix3c& o) const;
  Matrix3c operator*(const Matrix3c& o) const;
  Matrix3c operator*(double s) const;
  Matrix3c operator*(cplx s) const;

  cplx trace() const { return a_[0] + a_[4] + a_[8]; }
  double max_abs() const;

  // 1-based elementary matrix E_jk
  static Matrix3c elem(int j, int k);

 private:
  std::array<cplx, 9> a_{};
};

Matrix3c commutator(const Matrix3c& a, const Matrix3c& b);

// -Re tr(ab); the Ad-invariant inner product scale used throughout
double trace_form(const Matrix3c& a, const Matrix3c& b);

// max deviation from skew-Hermitian tracelessness; 0 for su(3) elements
double su_defect(const Matrix3c& v);

Matrix3c antisym(int j, int k);  // A_jk
Matrix3c sym(int j, int k);      // S_jk

const std::array<Matrix3c, 2>& torus_basis();
const std::array<Matrix3c, 6>& half_basis();

// coordinates of v's isotropy-complement part in the half basis
std::array<double, 6> m_coords(const Matrix3c& v);
Matrix3c project_m(const Matrix3c& v);
Matrix3c project_k(const Matrix3c& v);

// g-orthonormal basis X_1..X_6 (half basis scaled by 1/sqrt of its weight)
std::array<Matrix3c, 6> unit_basis(const Metric3& g);

// g on the isotropy complement (arguments are projected first)
double metric_inner(const Matrix3c& a, const Matrix3c& b, const Metric3& g);

// U(X,Y) defined by 2g(U(X,Y),Z) = g([Z,X]_m, Y) + g(X, [Z,Y]_m)
Matrix3c u_tensor(const Matrix3c& x, const Matrix3c& y, const Metric3& g);

// sectional curvature of the plane (X_i, X_j), 1-based indices, i != j
double sectional(int i, int j, const Metric3& g);

// sum over j != i of sectional(i, j); see curvature.hpp for its relation to
// the closed-form Ricci spectrum
double plane_sum(int i, const Metric3& g);

}  // namespace flagflow::su3
