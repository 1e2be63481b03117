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

#include "vlab/numeric/algebraic.hpp"

#include "vlab/error.hpp"
#include "vlab/numeric/roots.hpp"

namespace vlab {

std::optional<bool> VanishesAt(const IntPolynomial& p, const RealSource& source) {
  if (p.IsZero()) return true;
  const RealSpec& spec = source.spec();
  if (!spec.IsAlgebraic()) return std::nullopt;
  const RationalPolynomial shifted = p.Translate(-mpz_class(source.shift())).ToRational();
  if (auto exact = spec.ExactRational()) {
    return shifted.SignAt(*exact) == 0;
  }
  const auto& root = std::get<KthRoot>(spec.payload());
  // The value is the real root of M = T^J - K inside a rational enclosure
  // narrow enough to exclude every other root of M. Since gcd(P, M) only has
  // roots among those of M, P vanishes at the value iff the gcd has a root
  // in that enclosure.
  const RationalPolynomial m =
      RationalPolynomial::Monomial(mpq_class(1), static_cast<int>(root.index)) -
      RationalPolynomial({mpq_class(root.base)});
  const RationalPolynomial g = Gcd(shifted, m);
  if (g.degree() < 1) return false;
  for (long bits = kDefaultPrecisionBits; bits <= 1 << 16; bits *= 2) {
    const RealEnclosure x = RealFromSpec(spec, bits);
    const mpq_class lo = x.lower_rational();
    const mpq_class hi = x.upper_rational();
    if (m.SignAt(lo) == 0 || m.SignAt(hi) == 0) continue;
    if (CountRoots(m, lo, hi) != 1) continue;
    return CountRoots(g, lo, hi) == 1;
  }
  throw Error(ErrorCode::kPrecisionExhausted,
              "could not separate the roots of " + m.ToString());
}

}  // namespace vlab
