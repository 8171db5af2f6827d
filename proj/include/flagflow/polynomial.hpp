#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagflow/rational.hpp"

namespace flagflow {

// Sparse multivariate polynomial with exact rational coefficients.
//
// Canonical form: the variable list is sorted and contains exactly the
// variables that occur with a nonzero exponent in some term; terms are kept
// in graded-lexicographic order (highest total degree first) and never carry
// a zero coefficient. Two polynomials are equal iff their canonical forms
// coincide, so is_zero() is just "no terms".
class RatPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct Term {
    Exponents exps;  // parallel to variables()
    Rational coeff;
  };

  RatPoly() = default;  // zero polynomial
  RatPoly(long long c) : RatPoly(Rational(c)) {}
  RatPoly(const Rational& c);

  static RatPoly constant(const Rational& c) { return RatPoly(c); }
  static RatPoly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  long total_degree() const;
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  std::vector<Term> terms() const;

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator-(const RatPoly& rhs) const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly& operator+=(const RatPoly& rhs) { return *this = *this + rhs; }
  RatPoly& operator-=(const RatPoly& rhs) { return *this = *this - rhs; }
  RatPoly& operator*=(const RatPoly& rhs) { return *this = *this * rhs; }
  RatPoly pow(unsigned e) const;

  bool operator==(const RatPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
  }
  bool operator!=(const RatPoly& rhs) const { return !(*this == rhs); }

  // Simultaneous substitution; bound variables disappear from the result.
  RatPoly substitute(const std::map<std::string, RatPoly>& bindings) const;

  RatPoly partial_derivative(const std::string& var) const;

  // Every variable in variables() must be bound; throws std::invalid_argument.
  Rational evaluate(const std::map<std::string, Rational>& bindings) const;
  double evaluate_double(const std::map<std::string, double>& bindings) const;

  // Graded-lex descending, exact fractions: "-24*t^3 + 26*t^2 - 9*t + 1".
  std::string to_string() const;

 private:
  struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GrlexDesc>;

  RatPoly(std::vector<std::string> vars, TermMap terms);
  void prune();  // drop zero coefficients and unused variables

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline RatPoly operator*(const Rational& c, const RatPoly& p) { return RatPoly(c) * p; }
inline RatPoly operator*(long long c, const RatPoly& p) { return RatPoly(c) * p; }
inline RatPoly operator+(long long c, const RatPoly& p) { return RatPoly(c) + p; }
inline RatPoly operator-(long long c, const RatPoly& p) { return RatPoly(c) - p; }

// Convenience for building expressions.
RatPoly var(const std::string& name);

// Largest root bracket of a univariate polynomial by sign-change bisection:
// requires p(lo) and p(hi) of opposite (nonzero) sign; returns [a, b] with
// b - a <= width and a sign change inside. Exact arithmetic throughout.
std::pair<Rational, Rational> bisect_sign_change(const RatPoly& p, const std::string& var,
                                                 Rational lo, Rational hi,
                                                 const Rational& width);

}  // namespace flagflow
