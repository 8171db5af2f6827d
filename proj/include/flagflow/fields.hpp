#pragma once

#include <array>
#include <functional>
#include <vector>

#include "flagflow/polynomial.hpp"
#include "flagflow/spaces.hpp"

namespace flagflow {

// Planar polynomial vector field in the simplex coordinates (x, y).
struct Field2 {
  RatPoly u, v;
};

// The projected Ricci flow field on the trace-one simplex, after the positive
// time reparametrization that clears denominators: a cubic (Wallach) or
// quartic (general family) polynomial field. The family at m = p = 1 equals
// the Wallach field exactly (constant factor 1).
Field2 projected_field(const FlagSpace& space);

// Same, with m and p kept as variables (x, y, m, p).
Field2 projected_field_symbolic();

// Cleared Ricci components over the common positive denominator 4(m+2p)xyz:
//   N_x = 2(m+2p)yz + p(x^2 - y^2 - z^2)
//   N_y = 2(m+2p)xz + p(y^2 - x^2 - z^2)
//   N_z = 2(m+2p)xy + m(z^2 - x^2 - y^2)
std::array<RatPoly, 3> ricci_numerators(const FlagSpace& space);
std::array<RatPoly, 3> ricci_numerators_symbolic();

// Substitute x = t, y = t, z = 1 - 2t (the submersion segment).
RatPoly segment_restrict(const RatPoly& poly_xyz);

// Scalar curvature along the segment, cleared by 4(m+2p)t^2(1-2t) > 0.
RatPoly scalar_segment_numerator(const FlagSpace& space);

// dx_k/dt = -2 x_k r_k
std::array<double, 3> unnormalized_field(const FlagSpace& space, const Metric3& g);

// A positive homogeneous weight W used to slice the flow: the normalized
// field R - (W'(g).R(g)/degree) g is tangent to {W = 1} and positively
// parallel to the unnormalized field's projection elsewhere.
struct WeightSpec {
  std::function<double(const std::array<double, 3>&)> value;
  std::function<std::array<double, 3>(const std::array<double, 3>&)> gradient;
  double degree = 1.0;  // Euler degree, nonzero
};

WeightSpec trace_weight();                          // W = x + y + z
WeightSpec volume_weight(const FlagSpace& space);   // W = prod x_i^(n_i/n)

std::array<double, 3> normalized_field(const std::array<double, 3>& field,
                                       const WeightSpec& weight,
                                       const std::array<double, 3>& at);

// Direction comparison between the polynomial field and the trace-weight
// normalization of -2 x_k r_k at random interior samples. skipped counts
// samples where either side vanishes (equilibria).
struct ConsistencyReport {
  int samples = 0;
  int skipped = 0;
  double max_cross = 0.0;  // max |P x G| / (|P| |G|)
  double min_dot = 1.0;    // min P.G / (|P| |G|)
};

ConsistencyReport field_consistency(const FlagSpace& space, int n_samples, unsigned seed);

// Double-precision evaluator for the integrator. When v(x,y) = u(y,x) holds
// exactly (true for every space here) v is evaluated as u with swapped
// arguments, which keeps diagonal starts bitwise on the diagonal.
class CompiledField {
 public:
  static CompiledField compile(const Field2& f);
  std::array<double, 2> eval(double x, double y) const;
  bool swap_symmetric() const { return swap_symmetric_; }

 private:
  struct Term {
    unsigned ex, ey;
    double c;
  };
  static std::vector<Term> lower(const RatPoly& p);
  static double eval_terms(const std::vector<Term>& terms, double x, double y);

  std::vector<Term> u_, v_;
  bool swap_symmetric_ = false;
};

}  // namespace flagflow
