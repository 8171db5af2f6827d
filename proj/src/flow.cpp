#include "flagflow/flow.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "flagflow/dynamics.hpp"

namespace flagflow {

const char* to_string(Direction d) {
  return d == Direction::forward ? "forward" : "backward";
}

const char* to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::converged: return "converged";
    case FlowStatus::boundary: return "boundary";
    case FlowStatus::horizon: return "horizon";
    case FlowStatus::step_underflow: return "step_underflow";
  }
  return "?";
}

namespace {

// Dormand-Prince 5(4) tableau with the classic quartic continuous extension.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

using Vec2 = std::array<double, 2>;

Vec2 axpy(const Vec2& y, double h, const Vec2& k) { return {y[0] + h * k[0], y[1] + h * k[1]}; }

struct DenseStep {
  double t0 = 0.0, h = 0.0;
  Vec2 r1{}, r2{}, r3{}, r4{}, r5{};

  Vec2 at(double theta) const {
    double th1 = 1.0 - theta;
    Vec2 y;
    for (int i = 0; i < 2; ++i)
      y[i] = r1[i] + theta * (r2[i] + th1 * (r3[i] + theta * (r4[i] + th1 * r5[i])));
    return y;
  }
};

struct Channel {
  std::string name;
  std::function<double(const CurvatureSignature&)> get;
};

std::vector<Channel> make_channels(const FlagSpace& space) {
  std::vector<Channel> ch;
  ch.push_back({"r_x", [](const CurvatureSignature& s) { return s.ricci.r_x; }});
  ch.push_back({"r_y", [](const CurvatureSignature& s) { return s.ricci.r_y; }});
  ch.push_back({"r_z", [](const CurvatureSignature& s) { return s.ricci.r_z; }});
  ch.push_back({"scalar", [](const CurvatureSignature& s) { return s.scalar; }});
  if (space.is_wallach()) {
    ch.push_back({"min_sec", [](const CurvatureSignature& s) { return s.min_sec; }});
    for (int d = 1; d <= 5; ++d)
      ch.push_back({"ricd_min_" + std::to_string(d),
                    [d](const CurvatureSignature& s) { return s.ricd_min[d - 1]; }});
  }
  for (int d = 1; d <= space.n(); ++d)
    ch.push_back({"dpos_" + std::to_string(d),
                  [d](const CurvatureSignature& s) { return s.dpos[d - 1]; }});
  return ch;
}

double collar_gap(const Vec2& y, double collar) {
  return std::min({y[0], y[1], 1.0 - y[0] - y[1]}) - collar;
}

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

Trajectory integrate(const FlagSpace& space, const SimplexPoint& start, IntegrateOptions opts) {
  if (!(opts.horizon > 0.0)) throw std::domain_error("integrate: horizon must be positive");
  if (!(opts.rel_tol > 0.0 && opts.abs_tol > 0.0))
    throw std::domain_error("integrate: tolerances must be positive");
  if (opts.sample_stride <= 0.0) opts.sample_stride = opts.horizon / 512.0;
  // Bounding the step keeps accepted endpoints frequent enough that the
  // convergence test fires before the state sits numerically on the
  // equilibrium, where sign channels degrade to rounding noise.
  if (opts.max_step <= 0.0) opts.max_step = opts.horizon / 64.0;
  if (opts.equilibria.empty()) {
    for (const Equilibrium& e : find_equilibria(space)) opts.equilibria.push_back(e.point);
  }

  CompiledField cf = CompiledField::compile(projected_field(space));
  const double sign = (opts.direction == Direction::forward) ? 1.0 : -1.0;
  auto rhs = [&](const Vec2& y) -> Vec2 {
    auto [u, v] = cf.eval(y[0], y[1]);
    return {sign * u, sign * v};
  };
  auto sig_at = [&](const Vec2& y) {
    return signature(space, Metric3(y[0], y[1], 1.0 - y[0] - y[1]));
  };

  const std::vector<Channel> channels = make_channels(space);

  Trajectory tr;
  tr.direction = opts.direction;

  Vec2 y = {start.x, start.y};
  double t = 0.0;
  CurvatureSignature sig = sig_at(y);
  tr.samples.push_back({0.0, start, sig});
  double next_sample = opts.sample_stride;

  auto near_equilibrium = [&](const Vec2& pt) {
    for (const SimplexPoint& e : opts.equilibria)
      if (std::hypot(pt[0] - e.x, pt[1] - e.y) < opts.convergence_ball) return true;
    return false;
  };
  auto field_norm = [&](const Vec2& pt) {
    Vec2 f = rhs(pt);
    return std::hypot(f[0], f[1]);
  };

  if (collar_gap(y, opts.boundary_collar) <= 0.0) {
    tr.status = FlowStatus::boundary;
    tr.terminal_time = 0.0;
    return tr;
  }
  if (field_norm(y) < opts.convergence_field && near_equilibrium(y)) {
    tr.status = FlowStatus::converged;
    tr.terminal_time = 0.0;
    return tr;
  }

  Vec2 k1 = rhs(y);
  double h = 1e-4 * std::max(1e-4, std::hypot(y[0], y[1])) /
             std::max(1e-10, std::hypot(k1[0], k1[1]));
  h = std::min(h, opts.max_step);
  bool rejected = false;
  long steps = 0;
  constexpr long kMaxSteps = 5'000'000;

  while (true) {
    if (++steps > kMaxSteps) throw std::runtime_error("integrate: step count exceeded");
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      tr.status = FlowStatus::step_underflow;
      break;
    }
    if (t + h > opts.horizon) h = opts.horizon - t;

    Vec2 k2 = rhs(axpy(y, h * a21, k1));
    Vec2 k3 = rhs({y[0] + h * (a31 * k1[0] + a32 * k2[0]), y[1] + h * (a31 * k1[1] + a32 * k2[1])});
    Vec2 k4 = rhs({y[0] + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
                   y[1] + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1])});
    Vec2 k5 = rhs({y[0] + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
                   y[1] + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1])});
    Vec2 k6 = rhs(
        {y[0] + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] + a65 * k5[0]),
         y[1] + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] + a65 * k5[1])});
    Vec2 y1 = {y[0] + h * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] + b6 * k6[0]),
               y[1] + h * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] + b6 * k6[1])};
    Vec2 k7 = rhs(y1);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(err / 2.0);

    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      rejected = true;
      continue;
    }

    DenseStep dense;
    dense.t0 = t;
    dense.h = h;
    for (int i = 0; i < 2; ++i) {
      double ydiff = y1[i] - y[i];
      double bspl = h * k1[i] - ydiff;
      dense.r1[i] = y[i];
      dense.r2[i] = ydiff;
      dense.r3[i] = bspl;
      dense.r4[i] = ydiff - h * k7[i] - bspl;
      dense.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                         d7 * k7[i]);
    }

    // truncate the step at the collar if it was crossed
    double theta_end = 1.0;
    bool hit_boundary = false;
    if (collar_gap(y1, opts.boundary_collar) <= 0.0) {
      hit_boundary = true;
      double lo = 0.0, hi = 1.0;
      while ((hi - lo) * h > opts.event_time_tol) {
        double mid = 0.5 * (lo + hi);
        (collar_gap(dense.at(mid), opts.boundary_collar) > 0.0 ? lo : hi) = mid;
      }
      theta_end = hi;
    }
    double t_end = t + theta_end * h;
    Vec2 y_end = hit_boundary ? dense.at(theta_end) : y1;
    CurvatureSignature sig_end = sig_at(y_end);

    // event scan on [t, t_end]
    for (const Channel& ch : channels) {
      double s0 = ch.get(sig), s1 = ch.get(sig_end);
      if (std::isnan(s0) || std::isnan(s1)) continue;
      bool crossed = (s0 > 0.0 && s1 <= 0.0) || (s0 < 0.0 && s1 >= 0.0);
      if (!crossed) continue;
      double lo = 0.0, hi = theta_end;
      while ((hi - lo) * h > opts.event_time_tol) {
        double mid = 0.5 * (lo + hi);
        Vec2 ym = dense.at(mid);
        double sm = ch.get(sig_at(ym));
        bool same_side = (s0 > 0.0) ? (sm > 0.0) : (sm < 0.0);
        (same_side ? lo : hi) = mid;
      }
      Vec2 ye = dense.at(hi);
      tr.events.push_back({ch.name, t + hi * h, ye[0], ye[1]});
    }

    // dense samples at the fixed stride
    while (next_sample <= t_end + 1e-15 && next_sample < opts.horizon) {
      double theta = (next_sample - t) / h;
      if (theta >= 0.0 && theta <= theta_end + 1e-12) {
        Vec2 ys = dense.at(std::min(theta, theta_end));
        tr.samples.push_back({next_sample, SimplexPoint(ys[0], ys[1]), sig_at(ys)});
      }
      next_sample += opts.sample_stride;
    }

    t = t_end;
    y = y_end;
    sig = sig_end;

    if (hit_boundary) {
      tr.status = FlowStatus::boundary;
      break;
    }
    if (field_norm(y) < opts.convergence_field && near_equilibrium(y)) {
      tr.status = FlowStatus::converged;
      break;
    }
    if (t >= opts.horizon) {
      tr.status = FlowStatus::horizon;
      break;
    }

    k1 = k7;  // FSAL
    double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
    fac = std::min(rejected ? 1.0 : 5.0, std::max(0.2, fac));
    h = std::min(h * fac, opts.max_step);
    rejected = false;
  }

  if (tr.samples.back().time < t - 1e-15) {
    tr.samples.push_back({t, SimplexPoint(y[0], y[1]), sig});
  }
  tr.terminal_time = t;
  return tr;
}

void write_trajectory_csv(std::ostream& os, const FlagSpace& space, const Trajectory& tr) {
  os << "time,x,y,z,r_x,r_y,r_z,scalar,min_sec,ricd1,ricd2,ricd3,ricd4";
  for (int d = 1; d <= space.n(); ++d) os << ",dpos" << d;
  os << "\n";
  for (const TrajectorySample& s : tr.samples) {
    os << fmt(s.time) << "," << fmt(s.point.x) << "," << fmt(s.point.y) << ","
       << fmt(s.point.z());
    os << "," << fmt(s.sig.ricci.r_x) << "," << fmt(s.sig.ricci.r_y) << ","
       << fmt(s.sig.ricci.r_z) << "," << fmt(s.sig.scalar);
    os << "," << fmt(s.sig.min_sec);
    for (int d = 1; d <= 4; ++d) os << "," << fmt(s.sig.ricd_min[d - 1]);
    for (double v : s.sig.dpos) os << "," << fmt(v);
    os << "\n";
  }
  for (const FlowEvent& e : tr.events) {
    os << "# event," << e.channel << "," << fmt(e.time) << "," << fmt(e.x) << "," << fmt(e.y)
       << "\n";
  }
}

}  // namespace flagflow
