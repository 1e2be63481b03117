// Copyright 2026 The vlab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vlab/paramgeom/trajectory.hpp"

#include <algorithm>
#include <string>

#include "vlab/error.hpp"

namespace vlab {
namespace {

void RequireN(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "parametric geometry needs n >= 2, got " + std::to_string(n));
  }
}

RealEnclosure Scaled(const RealEnclosure& x, long num, long den) {
  return x * num / den;
}

}  // namespace

bool PiecewiseLinearFn::SlopesAdmissible() const {
  const mpq_class down(-1, 2L * n - 2);
  const mpq_class up(1);
  auto ok = [&](const mpq_class& s) { return s == down || s == up; };
  if (!ok(initial_slope)) return false;
  return std::all_of(slopes.begin(), slopes.end(), ok);
}

RealEnclosure PiecewiseLinearFn::Evaluate(const RealEnclosure& q) const {
  const long double at = q.mid_long_double();
  std::size_t seg = breakpoints.size();
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (at < breakpoints[i].q.mid_long_double()) {
      seg = i;
      break;
    }
  }
  if (seg == 0) {
    return value_at_zero + q * RealEnclosure::FromRational(initial_slope, q.precision());
  }
  const auto& bp = breakpoints[seg - 1];
  return bp.value +
         (q - bp.q) * RealEnclosure::FromRational(slopes[seg - 1], q.precision());
}

double PiecewiseLinearFn::Evaluate(double q) const {
  std::size_t seg = breakpoints.size();
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (q < breakpoints[i].q.mid()) {
      seg = i;
      break;
    }
  }
  if (seg == 0) return value_at_zero.mid() + initial_slope.get_d() * q;
  const auto& bp = breakpoints[seg - 1];
  return bp.value.mid() + slopes[seg - 1].get_d() * (q - bp.q.mid());
}

Trajectory::Trajectory(RealEnclosure log_height, RealEnclosure log_abs_value,
                       int n)
    : log_height_(std::move(log_height)),
      log_abs_value_(std::move(log_abs_value)),
      n_(n) {
  RequireN(n);
}

Trajectory Trajectory::Of(const IntPolynomial& p,
                          const RealEnclosure& log_abs_value, int n) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "trajectory of the zero polynomial");
  }
  return Trajectory(
      Log(RealEnclosure::FromInteger(p.Height(), log_abs_value.precision())),
      log_abs_value, n);
}

RealEnclosure Trajectory::Evaluate(const RealEnclosure& q) const {
  return Max(log_height_ - q / (2L * n_ - 2), log_abs_value_ + q);
}

double Trajectory::Evaluate(double q) const {
  return std::max(log_height_.mid() - q / (2.0 * n_ - 2),
                  log_abs_value_.mid() + q);
}

RealEnclosure Trajectory::MinPoint() const {
  return Scaled(log_height_ - log_abs_value_, 2L * n_ - 2, 2L * n_ - 1);
}

RealEnclosure Trajectory::MinValue() const {
  return (log_abs_value_ + log_height_ * (2L * n_ - 2)) / (2L * n_ - 1);
}

PiecewiseLinearFn Trajectory::AsPiecewise() const {
  PiecewiseLinearFn f;
  f.n = n_;
  f.value_at_zero = Max(log_height_, log_abs_value_);
  const RealEnclosure q_star = MinPoint();
  if (q_star.IsPositive()) {
    f.initial_slope = mpq_class(-1, 2L * n_ - 2);
    f.breakpoints.push_back({q_star, MinValue()});
    f.slopes.push_back(mpq_class(1));
  } else {
    f.initial_slope = 1;
  }
  return f;
}

GraphPoint MeetingPoint(const BestApproxRecord& prev, const BestApproxRecord& cur,
                        int n) {
  if (!(prev.height < cur.height) ||
      !cur.log_abs_value.CertainlyLess(prev.log_abs_value)) {
    throw Error(ErrorCode::kDegenerateRecords,
                "records " + std::to_string(prev.k) + ", " + std::to_string(cur.k) +
                    " do not have increasing heights and decreasing values");
  }
  const long bits = std::max(prev.log_abs_value.precision(),
                             cur.log_abs_value.precision());
  return MeetingPoint(cur.k, Log(RealEnclosure::FromInteger(prev.height, bits)),
                      Log(RealEnclosure::FromInteger(cur.height, bits)),
                      prev.log_abs_value, n);
}

GraphPoint MeetingPoint(int k, const RealEnclosure& log_height_prev,
                        const RealEnclosure& log_height,
                        const RealEnclosure& log_abs_prev, int n) {
  RequireN(n);
  GraphPoint g;
  g.k = k;
  g.q = Scaled(log_height - log_abs_prev, 2L * n - 2, 2L * n - 1);
  g.s = Scaled(log_height_prev - log_abs_prev, 2L * n - 2, 2L * n - 1);
  if (!g.q.IsPositive()) {
    throw Error(ErrorCode::kDegenerateRecords,
                "meeting point q_" + std::to_string(k) + " is not positive");
  }
  g.value = log_abs_prev + g.q;
  g.omega = g.value / g.q;
  g.omega_flagged = !g.omega.IsNegative();
  return g;
}

mpq_class OmegaResidual(const mpq_class& mu, const mpq_class& omega, int n) {
  const mpq_class m(2L * n - 2);
  mpq_class out = omega - (m - mu) / (m * (1 + mu));
  out.canonicalize();
  return out;
}

RealEnclosure OmegaResidual(const RealEnclosure& mu, const RealEnclosure& omega,
                            int n) {
  const long m = 2L * n - 2;
  return omega - (m - mu) / ((mu + 1) * m);
}

RealEnclosure MinkowskiConstant(int n, long precision_bits) {
  RequireN(n);
  const long d = 2L * n - 1;
  RealEnclosure log_factorial(precision_bits);
  for (long i = 2; i <= d; ++i) {
    log_factorial += Log(RealEnclosure::FromInteger(i, precision_bits));
  }
  return log_factorial + RealEnclosure::Ln2(precision_bits) * d;
}

RealEnclosure MinkowskiMargin(const std::vector<RealEnclosure>& values, int n) {
  if (static_cast<long>(values.size()) != 2L * n - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "Minkowski margin needs " + std::to_string(2 * n - 1) + " values");
  }
  long bits = kDefaultPrecisionBits;
  for (const auto& v : values) bits = std::max(bits, v.precision());
  RealEnclosure sum(bits);
  for (const auto& v : values) sum += v;
  return Abs(sum) - MinkowskiConstant(n, bits);
}

RealEnclosure LowerBoundGap(const GraphPoint& point,
                            const RealEnclosure& last_minimum, int n) {
  RequireN(n);
  const long m = 2L * n - 2;
  const long gain = 2L * n * n - 5L * n + 2;
  return -(point.value * m) + (point.q - point.s) * gain / m - last_minimum;
}

std::vector<double> GeometricGrid(double q_max, double q0, double r) {
  if (q0 <= 0 || r <= 1) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs q0 > 0 and r > 1");
  }
  std::vector<double> out;
  for (double q = q0; q <= q_max * (1 + 1e-12); q *= r) out.push_back(q);
  return out;
}

}  // namespace vlab
