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

#ifndef VLAB_PARAMGEOM_TRAJECTORY_HPP_
#define VLAB_PARAMGEOM_TRAJECTORY_HPP_

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "vlab/bestapprox/records.hpp"
#include "vlab/int_polynomial.hpp"
#include "vlab/numeric/enclosure.hpp"

namespace vlab {

// Continuous piecewise linear function on q >= 0 with slopes in
// {-1/(2n-2), 1}.
struct PiecewiseLinearFn {
  struct Breakpoint {
    RealEnclosure q;
    RealEnclosure value;
  };
  int n = 2;
  RealEnclosure value_at_zero;
  mpq_class initial_slope;
  std::vector<Breakpoint> breakpoints;
  std::vector<mpq_class> slopes;  // slope after each breakpoint

  // True when every slope is -1/(2n-2) or 1.
  bool SlopesAdmissible() const;
  RealEnclosure Evaluate(const RealEnclosure& q) const;
  double Evaluate(double q) const;
};

// L_P(q) = max{ log H_P - q/(2n-2), log|P(xi)| + q }.
class Trajectory {
 public:
  Trajectory(RealEnclosure log_height, RealEnclosure log_abs_value, int n);
  // Throws kInvalidArgument for n < 2.
  static Trajectory Of(const IntPolynomial& p, const RealEnclosure& log_abs_value,
                       int n);

  int n() const { return n_; }
  const RealEnclosure& log_height() const { return log_height_; }
  const RealEnclosure& log_abs_value() const { return log_abs_value_; }

  RealEnclosure Evaluate(const RealEnclosure& q) const;
  double Evaluate(double q) const;
  // Where the two lines cross: (2n-2)(log H - log|P|)/(2n-1).
  RealEnclosure MinPoint() const;
  // (log|P| + (2n-2) log H)/(2n-1).
  RealEnclosure MinValue() const;
  PiecewiseLinearFn AsPiecewise() const;

 private:
  RealEnclosure log_height_;
  RealEnclosure log_abs_value_;
  int n_;
};

struct GraphPoint {
  int k = 0;
  RealEnclosure q;      // q_k, where L_{P_{k-1}} and L_{P_k} meet
  RealEnclosure s;      // s_k, minimum point of L_{P_{k-1}}
  RealEnclosure value;  // L_{P_{k-1}}(q_k)
  RealEnclosure omega;  // value / q_k
  // omega is not certainly negative: the records do not look like genuine
  // approximations.
  bool omega_flagged = false;
};

// Meeting point data for records P_{k-1} = prev, P_k = cur. Throws
// kDegenerateRecords unless H_{k-1} < H_k and |P_{k-1}(xi)| > |P_k(xi)|.
GraphPoint MeetingPoint(const BestApproxRecord& prev, const BestApproxRecord& cur,
                        int n);
// Same from raw logarithms (log H_{k-1}, log H_k, log|P_{k-1}|).
GraphPoint MeetingPoint(int k, const RealEnclosure& log_height_prev,
                        const RealEnclosure& log_height,
                        const RealEnclosure& log_abs_prev, int n);

// omega - (2n-2-mu)/((2n-2)(1+mu)); vanishes on consistent data.
mpq_class OmegaResidual(const mpq_class& mu, const mpq_class& omega, int n);
RealEnclosure OmegaResidual(const RealEnclosure& mu, const RealEnclosure& omega,
                            int n);

// log((2n-1)!) + (2n-1) log 2.
RealEnclosure MinkowskiConstant(int n, long precision_bits = kDefaultPrecisionBits);
// |sum values| - MinkowskiConstant(n). Throws kInvalidArgument unless there
// are 2n-1 values.
RealEnclosure MinkowskiMargin(const std::vector<RealEnclosure>& values, int n);

// -(2n-2) L_{P_{k-1}}(q_k) + (2n^2-5n+2)/(2n-2) (q_k - s_k) - L_{2n-1}(q_k):
// the smallest constant for which the lower bound on L_{2n-1}(q_k) holds at
// this k.
RealEnclosure LowerBoundGap(const GraphPoint& point,
                            const RealEnclosure& last_minimum, int n);

// q0 r^i for q0 r^i <= q_max.
std::vector<double> GeometricGrid(double q_max, double q0 = 1.0, double r = 1.25);

}  // namespace vlab

#endif  // VLAB_PARAMGEOM_TRAJECTORY_HPP_
