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

#ifndef VLAB_BESTAPPROX_SEARCH_HPP_
#define VLAB_BESTAPPROX_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "vlab/bestapprox/records.hpp"
#include "vlab/int_polynomial.hpp"
#include "vlab/numeric/real_spec.hpp"

namespace vlab {

enum class Execution { kSerial, kParallel };

// Default desk-scale height limits: 10^4 for n=1, 500 for n=2, 60 for n=3,
// 25 for n=4, 12 beyond.
long DefaultHeightLimit(int n);

// Long double image of xi used for screening, with a bound on the error of a
// height-h evaluation.
class ScreeningContext {
 public:
  ScreeningContext(const RealSource& source, int n);

  int n() const { return n_; }
  long double x() const { return powers_[1]; }
  const std::vector<long double>& powers() const { return powers_; }
  // Bound on |computed P(x) - P(xi)| for any degree <= n, height <= h
  // polynomial, for both Horner and power-sum evaluation.
  long double ErrorBound(long h) const;

 private:
  int n_;
  std::vector<long double> powers_;
  long double per_height_error_;
};

struct ScreenedCandidate {
  std::vector<std::int64_t> coeffs;  // canonical sign, constant term first
  long double value = 0;             // approximate |P(xi)|
};

// Every canonical polynomial of height exactly h whose approximate value is
// within 2 * ErrorBound(h) of both the shell minimum and `threshold`,
// sorted by coefficient vector. Empty when the whole shell lies above
// threshold + 2 * ErrorBound(h).
std::vector<ScreenedCandidate> ScreenShell(const ScreeningContext& ctx, long h,
                                           long double threshold,
                                           Execution execution);

struct MinPolyResult {
  IntPolynomial poly;
  RealEnclosure abs_value;
};

// Reference minimiser of |P(xi)| over nonzero integer polynomials of degree
// <= n and height <= h: serial scan of every (a_1..a_n) in [-h, h]^n with
// the best a_0 for each. Ties go to the lexicographically smallest
// coefficient vector. Throws kExactZeroDetected, kPrecisionExhausted.
MinPolyResult MinPolyAtHeight(const RealSource& source, int n, long h,
                              const PrecisionPolicy& policy = {});

struct SearchOptions {
  PrecisionPolicy policy;
  long precision_bits = kDefaultPrecisionBits;  // for stored enclosures
  Execution execution = Execution::kParallel;
};

// Records P_1, P_2, ... with heights <= h_max, complete up to h_max:
// P is listed iff it strictly beats every polynomial of smaller or equal
// height. Exponents are derived; goodness and ell are left empty.
SequenceData BestApproxSequence(const RealSource& source, int n, long h_max,
                                const SearchOptions& options = {});

}  // namespace vlab

#endif  // VLAB_BESTAPPROX_SEARCH_HPP_
