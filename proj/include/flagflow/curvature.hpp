#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "flagflow/rational.hpp"
#include "flagflow/spaces.hpp"

namespace flagflow {

// Ricci eigenvalues on the three summands, in the same scale as the scalar
// curvature and the flow right-hand side.
struct RicciSpectrum {
  double r_x = 0.0, r_y = 0.0, r_z = 0.0;
};

RicciSpectrum ricci_components(const FlagSpace& space, const Metric3& g);

// sum of n_i * r_i
double scalar_curvature(const FlagSpace& space, const Metric3& g);

// Basis-plane sectional curvatures K(X_i, X_j) of the Wallach space, indices
// 1..6 grouped in pairs into the summands. Closed forms; the commutator
// oracle in su3.hpp reproduces them to 1e-10. The four planes mixing the
// first and third summands share one expression with coefficient 1/16 on
// (z-x)^2/(xyz), matching the other mixed blocks (a published 1/8 variant for
// one of those planes is inconsistent with the oracle).
class SectionalTable {
 public:
  double value(int i, int j) const;  // 1-based, i != j
  double min() const;

 private:
  friend SectionalTable sectional_table(const FlagSpace&, const Metric3&);
  std::array<std::array<double, 6>, 6> k_{};
};

// Wallach only: throws std::domain_error for other spaces.
SectionalTable sectional_table(const FlagSpace& space, const Metric3& g);

// The closed-form spectrum above is stated in the Killing scale of su(3)
// while the table's planes are unit in the basis scale; summing the five
// K(X_i, X_j) over j therefore gives exactly this multiple of r_i (the
// norm-square of a half-basis element under the negative Killing form).
inline constexpr double kRicciPlaneSumScale = 3.0;

// A choice of d basis directions against a base direction, in the two
// equivalent encodings: an explicit subset of {1..6}\{i}, or the counts
// (a, b, c) = (partner picks, picks from the lower-indexed other summand,
// picks from the higher-indexed other summand).
struct RicDChoice {
  int base = 1;
  std::vector<int> subset;  // sorted
  int a = 0, b = 0, c = 0;

  int d() const { return a + b + c; }

  static RicDChoice from_subset(int base, std::vector<int> subset);
  // canonical subset: partner first, then lowest-index picks of each summand
  static RicDChoice from_counts(int base, int a, int b, int c);
};

// d-th intermediate Ricci curvature of the base direction against the chosen
// d directions: the sum of the corresponding table entries. Wallach only.
double ric_d_basis(const FlagSpace& space, const Metric3& g, const RicDChoice& choice);
double ric_d_basis(const SectionalTable& table, const RicDChoice& choice);

// minimum over all base directions and all subsets of size d (1 <= d <= 5)
double ric_d_min(const FlagSpace& space, const Metric3& g, int d);

// On the submersion segment (t, t, 1-2t) every Ric_d choice reduces to one of
// two exact families; both are scaled by positive factors so signs carry over.
//   base in summand 1 or 2:  16t^2 * Ric_d = -3b + c + 2(8a + 5b - c) t
//   base in summand 3:       16t^2 (1-2t) * Ric_d = 16a t^2 + (d-a)(1-2t)^2
Rational ric_d_segment_mixed(int a, int b, int c, const Rational& t);
Rational ric_d_segment_third(int a, int d, const Rational& t);

// Largest t in (0, 1/2) at which some Ric_d choice is nonpositive: below it
// d-positivity fails somewhere, above it every choice is positive. Exact
// rational enumeration of the segment families; d in 1..4.
Rational ric_d_threshold(int d);

// sum of the d smallest Ricci eigenvalues counted with multiplicity, d in 1..n
double d_positive_sum(const FlagSpace& space, const Metric3& g, int d);

// Everything the flow tracks at one metric. Sectional and Ric_d minima exist
// only for the Wallach space and are NaN otherwise.
struct CurvatureSignature {
  RicciSpectrum ricci;
  double scalar = 0.0;
  double min_sec = 0.0;
  std::array<double, 5> ricd_min{};
  std::vector<double> dpos;  // size n
  bool wallach = true;
};

CurvatureSignature signature(const FlagSpace& space, const Metric3& g);

// Flat JSON with fixed field names: r_x, r_y, r_z, scalar, then for Wallach
// min_sec and ricd_min_1..5, then dpos_1..dpos_n.
nlohmann::ordered_json signature_json(const CurvatureSignature& sig);

}  // namespace flagflow
