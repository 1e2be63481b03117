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

#ifndef VLAB_BOUNDS_BOUNDS_HPP_
#define VLAB_BOUNDS_BOUNDS_HPP_

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "vlab/numeric/enclosure.hpp"
#include "vlab/numeric/rational_polynomial.hpp"
#include "vlab/numeric/roots.hpp"

namespace vlab {

// Default refinement width for bound roots: 2^-60.
mpq_class DefaultRootTolerance();

// Monic quartic whose largest root is beta_n:
//   T^4 + (4-4n) T^3 + (5n^2-12n+8) T^2 + (-2n^3+11n^2-18n+7) T
//       + (-2n^3+6n^2-4n).
RationalPolynomial QuarticQ(int n);

// Monic cubic whose largest root is gamma_n:
//   T^3 - (4n-4) T^2 + (5n^2-11n+6) T + (-2n^3+8n^2-10n+3).
RationalPolynomial CubicR(int n);

// g(x) = (n-1) x (x-n)^(n-1) - (x-1)(x-n)^n - (n-1)^n, the equation
// (n-1)x/(x-n) - x + 1 = ((n-1)/(x-n))^n with the pole at x = n cleared.
RationalPolynomial SigmaPolynomial(int n);

// Certified root structure of a bound polynomial.
struct RootCertificate {
  int distinct_real_roots = 0;
  bool squarefree = false;
  std::vector<IsolatingInterval> roots;  // sorted
  IsolatingInterval largest;
};

// Isolates all real roots of p and checks that there are exactly
// `expected_roots` of them, all simple, with the largest inside the open
// interval (lo, hi). Throws kRootCountMismatch otherwise.
RootCertificate CertifyLargestRoot(const RationalPolynomial& p,
                                   int expected_roots, const mpq_class& lo,
                                   const mpq_class& hi);

// Largest root of QuarticQ(n), certified in (2n-2, 2n-1). n >= 2.
RealEnclosure Beta(int n, const mpq_class& tol = DefaultRootTolerance());
// Largest root of CubicR(n), certified in (2n-2, 2n-1). n >= 2.
RealEnclosure Gamma(int n, const mpq_class& tol = DefaultRootTolerance());
// max{ (sqrt5+1)/2 n - (sqrt5-1)/2, 2n-2 }; exact 2n-2 once that term wins.
RealEnclosure Rho(int n);
// Root of SigmaPolynomial(n) in (n, 2n-1) by exact-sign bisection from
// n + 10^-6 and 2n - 1 - 10^-6. Throws kNoSignChange.
RealEnclosure Sigma(int n, const mpq_class& tol = DefaultRootTolerance());
// sigma_n for n <= 9, exactly 2n-2 for n >= 10.
RealEnclosure Alpha(int n, const mpq_class& tol = DefaultRootTolerance());

// Coefficients of Theta_n(w, tau_k, tau_l) = d3 w^3 + d2 w^2 + d1 w + d0.
template <class T>
struct ThetaCoeffs {
  T d3, d2, d1, d0;
};

// T is mpq_class, double or RealEnclosure.
template <class T>
ThetaCoeffs<T> ThetaCoefficients(int n, const T& tau_k, const T& tau_l) {
  const long nl = n;
  T d3 = tau_k;
  T d2 = -(tau_k * (2 * nl) + (nl - 2));
  T d1 = tau_k * tau_l + tau_k * (nl * nl + nl - 1) + tau_l * (1 - nl) +
         (nl * nl - nl - 2);
  T d0 = -(((tau_l + (nl - 1)) * tau_k + (nl - 2)) * nl);
  return {std::move(d3), std::move(d2), std::move(d1), std::move(d0)};
}

template <class T>
T Theta(int n, const T& w, const T& tau_k, const T& tau_l) {
  const ThetaCoeffs<T> c = ThetaCoefficients(n, tau_k, tau_l);
  T acc = c.d3 * w + c.d2;
  acc = acc * w + c.d1;
  return T(acc * w + c.d0);
}

//   (2n-2) tau_k w - (2n^2-3n+2) tau_k - (2n^2-5n+2)
//       - tau_k ((2n-1) tau_l - 1 - w)
template <class T>
T ThetaTilde(int n, const T& w, const T& tau_k, const T& tau_l) {
  const long nl = n;
  T inner = tau_l * (2 * nl - 1) - 1 - w;
  T out = tau_k * w * (2 * nl - 2) - tau_k * (2 * nl * nl - 3 * nl + 2) -
          (2 * nl * nl - 5 * nl + 2);
  return T(out - tau_k * inner);
}

// x + n - 1 + (n-2)/x.
template <class T>
T HTilde(int n, const T& x) {
  const long nl = n;
  T quotient = (nl - 2) / x;
  return T(x + (nl - 1) + quotient);
}

// Theta_n(w, tau, tau) as a cubic in w.
RationalPolynomial ThetaDiagonalPolynomial(int n, const mpq_class& tau);

// Largest root of w -> Theta_n(w, tau, tau) in (n, 2n-1]. Throws
// kNoRootInRange, kInvalidArgument when tau <= 1.
RealEnclosure WBoundFromTau(int n, const mpq_class& tau,
                            const mpq_class& tol = DefaultRootTolerance());
// Enclosure version: evaluates at both endpoints of tau and takes the hull,
// which encloses the image because the bound is decreasing in tau.
RealEnclosure WBoundFromTau(int n, const RealEnclosure& tau);

struct BoundsRow {
  int n = 0;
  RealEnclosure beta;
  RealEnclosure alpha;
  RealEnclosure gamma;
  RealEnclosure rho;
};

// Rows n_min..n_max, computed in parallel over n.
std::vector<BoundsRow> BoundsTable(int n_min, int n_max);

// x truncated toward minus infinity to `digits` decimals, certified from both
// endpoints; an exact integer prints without decimals. Throws
// kPrecisionExhausted when the enclosure straddles a truncation boundary.
std::string TruncatedDecimal(const RealEnclosure& x, int digits = 4);

// Reference comparison-table cells that disagree with the computed value in a
// way truncation cannot explain; empty when nothing is flagged.
std::string BoundsRowFlag(const BoundsRow& row);

enum class TableFormat { kText, kCsv, kJson };
std::string FormatBoundsTable(const std::vector<BoundsRow>& rows,
                              TableFormat format);

}  // namespace vlab

#endif  // VLAB_BOUNDS_BOUNDS_HPP_
