#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagflow/fields.hpp"
#include "flagflow/spaces.hpp"

namespace flagflow {

enum class EquilibriumKind { repeller, attractor, saddle, degenerate };
const char* to_string(EquilibriumKind kind);

struct Equilibrium {
  SimplexPoint point;
  std::array<double, 4> jac{};  // row-major d(u,v)/d(x,y)
  std::array<std::complex<double>, 2> eigenvalues{};
  EquilibriumKind kind = EquilibriumKind::degenerate;
  std::string label;  // "A".."D" on the Wallach space, "K" for the family
                      // diagonal equilibrium, empty otherwise
};

// Interior equilibria of the projected field: damped Newton from a 40x40
// grid of seeds, deduplicated to 1e-8, residual verified below 1e-12,
// classified by the exact-polynomial Jacobian. Sorted by (x, y).
std::vector<Equilibrium> find_equilibria(const FlagSpace& space);

std::array<double, 4> jacobian(const FlagSpace& space, double x, double y);
std::array<Rational, 4> jacobian_exact(const Field2& f, const Rational& x, const Rational& y);

std::array<std::complex<double>, 2> eigenvalues_2x2(const std::array<double, 4>& j);
EquilibriumKind classify(const std::array<std::complex<double>, 2>& eigenvalues);

// Parametrized line s -> (x0 + s dx, y0 + s dy) with conormal (nx, ny).
struct AffineLine {
  Rational x0, y0;
  Rational dx, dy;
  Rational nx, ny;
};

struct LineCheck {
  bool invariant = false;
  RatPoly residual;  // normal component of the field along the line
};

// The line is flow-invariant iff the residual polynomial is exactly zero.
// Works for the symbolic field too (residual then keeps m, p).
LineCheck invariant_line_check(const Field2& f, const AffineLine& line);

nlohmann::ordered_json equilibria_json(const std::vector<Equilibrium>& eqs);

}  // namespace flagflow
