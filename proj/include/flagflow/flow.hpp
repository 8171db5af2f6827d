#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flagflow/curvature.hpp"
#include "flagflow/fields.hpp"
#include "flagflow/spaces.hpp"

namespace flagflow {

enum class Direction { forward, backward };
enum class FlowStatus { converged, boundary, horizon, step_underflow };
const char* to_string(Direction d);
const char* to_string(FlowStatus s);

struct TrajectorySample {
  double time = 0.0;
  SimplexPoint point;
  CurvatureSignature sig;
};

// A sign change of one tracked curvature quantity, located by bisecting the
// dense output of the step that brackets it.
struct FlowEvent {
  std::string channel;
  double time = 0.0;
  double x = 0.0, y = 0.0;
};

struct Trajectory {
  Direction direction = Direction::forward;
  FlowStatus status = FlowStatus::horizon;
  std::vector<TrajectorySample> samples;  // strictly increasing times
  std::vector<FlowEvent> events;
  double terminal_time = 0.0;
};

struct IntegrateOptions {
  Direction direction = Direction::forward;
  double horizon = 200.0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double sample_stride = 0.0;  // <= 0 picks horizon / 512
  double max_step = 0.0;       // <= 0 picks horizon / 64
  double boundary_collar = 1e-3;
  double convergence_field = 1e-12;
  double convergence_ball = 1e-8;
  double event_time_tol = 1e-10;
  // convergence targets; discovered via find_equilibria when left empty
  std::vector<SimplexPoint> equilibria;
};

// Projected Ricci flow trajectory by adaptive Dormand-Prince 5(4) with dense
// output. Backward means integrating the negated field; reported times grow
// from 0 either way. Terminates at the horizon, inside the boundary collar,
// or once the field norm and the distance to a known equilibrium are both
// below their thresholds.
Trajectory integrate(const FlagSpace& space, const SimplexPoint& start,
                     IntegrateOptions opts = {});

// Header: time,x,y,z,r_x,r_y,r_z,scalar,min_sec,ricd1..ricd4,dpos1..dposN
// (Wallach-only columns are nan for the family); events appended as
// "# event,<channel>,<time>,<x>,<y>" comment lines.
void write_trajectory_csv(std::ostream& os, const FlagSpace& space, const Trajectory& tr);

}  // namespace flagflow
