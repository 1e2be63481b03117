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

#ifndef VLAB_PARAMGEOM_MINIMA_HPP_
#define VLAB_PARAMGEOM_MINIMA_HPP_

#include <string>
#include <vector>

#include "vlab/bestapprox/records.hpp"
#include "vlab/bestapprox/search.hpp"
#include "vlab/int_polynomial.hpp"
#include "vlab/numeric/enclosure.hpp"
#include "vlab/numeric/real_spec.hpp"

namespace vlab {

// log of the norm of P in the lattice/body pair at parameter q:
//   max{ log max_{1<=i<=2n-2} |a_i| - q/(2n-2), log|P(xi)| + q }.
// The constant coefficient does not enter the first term.
RealEnclosure LatticeLogNorm(const IntPolynomial& p, const RealSource& source,
                             int n, const RealEnclosure& q, long precision_bits);

struct MinimaOptions {
  long budget = 10'000'000;  // enumeration nodes
  Execution execution = Execution::kParallel;
  long precision_bits = kDefaultPrecisionBits;
};

struct MinimaResult {
  int n = 2;
  double q = 0;
  std::vector<RealEnclosure> values;  // L_1(q) <= ... <= L_{2n-1}(q)
  std::vector<IntPolynomial> polys;   // realising polynomials
  long enumerated = 0;                // lattice points examined
};

// Successive minima over all integer polynomials of degree <= 2n-2: LLL
// reduction of the lattice basis, enumeration of every lattice point inside
// the sup-norm radius of the reduced basis, greedy selection with exact
// ranks, enclosure re-evaluation of the selected norms. The top level of the
// enumeration runs in parallel. Throws kBudgetExceeded.
MinimaResult SuccessiveMinimaExact(const RealSource& source, int n, double q,
                                   const MinimaOptions& options = {});

// Serial reference: scans the coefficient box |a_i| <= R e^{q/(2n-2)} with
// the matching a_0 window, doubling R until 2n-1 independent polynomials of
// norm <= R exist. Throws kBudgetExceeded.
MinimaResult SuccessiveMinimaReference(const RealSource& source, int n, double q,
                                       const MinimaOptions& options = {});

struct PoolResult {
  std::vector<RealEnclosure> values;  // upper bounds for L_j(q)
  std::vector<IntPolynomial> polys;
  bool incomplete = false;  // fewer than 2n-1 independent pool members
};

// Greedy independent selection among the trajectories of {T^i P_k :
// 0 <= i <= n-2} built from the records. Trajectories use the full height,
// so every value bounds the exact minimum from above.
PoolResult SuccessiveMinimaPool(const SequenceData& seq, double q);

// Recomputes the sequence for xi - floor(xi) (same n and height limit) and
// annotates goodness. Returns a copy when xi already lies in [0, 1).
SequenceData ShiftToUnitInterval(const SequenceData& seq,
                                 const SearchOptions& options = {});

// "original frame" or "shifted frame (xi - m)".
std::string FrameLabel(const SequenceData& seq);

}  // namespace vlab

#endif  // VLAB_PARAMGEOM_MINIMA_HPP_
