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

#include "vlab/polyalg/polyalg.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "vlab/error.hpp"

namespace vlab {
namespace {

// Polynomials over F_q for small primes q, constant term first.
using ModPoly = std::vector<long>;

void TrimMod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long InvMod(long a, long q) {
  long result = 1;
  long base = ((a % q) + q) % q;
  for (long e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return result;
}

ModPoly RemMod(ModPoly a, const ModPoly& b, long q) {
  const long inv = InvMod(b.back(), q);
  while (a.size() >= b.size()) {
    const long factor = a.back() * inv % q;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - factor * b[i]) % q + q) % q;
    }
    TrimMod(a);
  }
  return a;
}

ModPoly DivMod(ModPoly a, const ModPoly& b, long q) {
  const long inv = InvMod(b.back(), q);
  if (a.size() < b.size()) return {};
  ModPoly quotient(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const long factor = a.back() * inv % q;
    const std::size_t shift = a.size() - b.size();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - factor * b[i]) % q + q) % q;
    }
    TrimMod(a);
  }
  TrimMod(quotient);
  return quotient;
}

ModPoly GcdMod(ModPoly a, ModPoly b, long q) {
  while (!b.empty()) {
    ModPoly r = RemMod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const long inv = InvMod(a.back(), q);
    for (auto& c : a) c = c * inv % q;
  }
  return a;
}

ModPoly MulMod(const ModPoly& a, const ModPoly& b, const ModPoly& f, long q) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % q;
    }
  }
  TrimMod(out);
  return RemMod(std::move(out), f, q);
}

ModPoly PowMod(ModPoly base, long e, const ModPoly& f, long q) {
  ModPoly result{1};
  base = RemMod(std::move(base), f, q);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = MulMod(result, base, f, q);
    base = MulMod(base, base, f, q);
  }
  return result;
}

ModPoly Reduce(const IntPolynomial& p, long q) {
  ModPoly out;
  for (const auto& c : p.coefficients()) {
    out.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(q))));
  }
  TrimMod(out);
  return out;
}

ModPoly DerivativeMod(const ModPoly& a, long q) {
  ModPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) {
    out.push_back(static_cast<long>(i) % q * a[i] % q);
  }
  TrimMod(out);
  return out;
}

// Bitmask of degrees achievable by products of irreducible factors of p mod
// q, or nullopt when q is unusable (divides the leading coefficient or p is
// not squarefree mod q).
std::optional<std::bitset<64>> FactorDegreesMod(const IntPolynomial& p, long q) {
  ModPoly f = Reduce(p, q);
  if (static_cast<int>(f.size()) - 1 != p.degree()) return std::nullopt;
  if (GcdMod(f, DerivativeMod(f, q), q).size() != 1) return std::nullopt;
  std::vector<int> degrees;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int j = 1; 2 * j <= static_cast<int>(f.size()) - 1; ++j) {
    h = PowMod(h, q, f, q);
    ModPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] - 1 + q) % q;
    TrimMod(diff);
    const ModPoly g = GcdMod(f, diff, q);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int c = 0; c < dg / j; ++c) degrees.push_back(j);
      f = DivMod(f, g, q);
      h = RemMod(h, f, q);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<int>(f.size()) - 1);
  std::bitset<64> sums;
  sums[0] = true;
  for (int d : degrees) sums |= sums << static_cast<std::size_t>(d);
  return sums;
}

// Complex roots by Aberth iteration.
std::vector<std::complex<long double>> ComplexRoots(const IntPolynomial& p) {
  const int d = p.degree();
  std::vector<long double> a(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) a[i] = p.coefficient(i).get_d();
  long double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::fabs(a[i] / a[d]));
  radius += 1;
  using C = std::complex<long double>;
  std::vector<C> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[k] = std::polar(radius * 0.5L + 0.1L, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int k = 0; k < d; ++k) {
      C value = a[d];
      C slope = 0;
      for (int i = d - 1; i >= 0; --i) {
        slope = slope * z[k] + value;
        value = value * z[k] + a[i];
      }
      if (value == C(0)) continue;
      const C ratio = value / slope;
      C repulsion = 0;
      for (int j = 0; j < d; ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      const C step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (change < 1e-30L) break;
  }
  return z;
}

bool DividesOverQ(const IntPolynomial& factor, const IntPolynomial& p) {
  return p.ToRational().DivMod(factor.ToRational()).second.IsZero();
}

}  // namespace

int MatrixRank(std::vector<std::vector<mpz_class>> rows) {
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  for (auto& r : rows) r.resize(cols, 0);
  const std::size_t m = rows.size();
  int rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m; ++c) {
    const std::size_t r0 = static_cast<std::size_t>(rank);
    std::size_t pivot = r0;
    while (pivot < m && rows[pivot][c] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[r0], rows[pivot]);
    for (std::size_t i = r0 + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = rows[r0][c] * rows[i][j] - rows[i][c] * rows[r0][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = rows[r0][c];
    ++rank;
  }
  return rank;
}

int RankOfPolys(const std::vector<IntPolynomial>& polys, int ambient_degree) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.degree() > ambient_degree) {
      throw Error(ErrorCode::kDegreeOverflow,
                  p.ToString() + " exceeds degree " + std::to_string(ambient_degree));
    }
    rows.push_back(p.Padded(ambient_degree + 1));
  }
  return MatrixRank(std::move(rows));
}

namespace {

void RequireWindow(const SequenceData& seq, int first, int last) {
  const int count = static_cast<int>(seq.records.size());
  if (first < 1 || last > count) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "records " + std::to_string(first) + ".." + std::to_string(last) +
                    " not available (have 1.." + std::to_string(count) + ")");
  }
}

const IntPolynomial& P(const SequenceData& seq, int k) {
  return seq.records[static_cast<std::size_t>(k - 1)].poly;
}

}  // namespace

bool IsGood(const SequenceData& seq, int k) {
  RequireWindow(seq, k - 1, k + 1);
  return RankOfPolys({P(seq, k - 1), P(seq, k), P(seq, k + 1)}, seq.n) == 3;
}

EllResult EllOfK(const SequenceData& seq, int k) {
  RequireWindow(seq, k - 1, k + 1);
  if (RankOfPolys({P(seq, k - 1), P(seq, k)}, seq.n) < 2) {
    throw Error(ErrorCode::kDependentBase,
                "P_" + std::to_string(k - 1) + " and P_" + std::to_string(k) +
                    " are proportional");
  }
  const int count = static_cast<int>(seq.records.size());
  for (int m = k + 1; m <= count; ++m) {
    if (RankOfPolys({P(seq, k - 1), P(seq, k), P(seq, m)}, seq.n) == 3) {
      return {m, false};
    }
  }
  return {count + 1, true};
}

VSet MakeVSet(const IntPolynomial& p, int n) {
  if (n < 1 || p.degree() > n) {
    throw Error(ErrorCode::kDegreeOverflow,
                p.ToString() + " does not have degree <= " + std::to_string(n));
  }
  VSet out{p, n, {}};
  for (int i = 0; i <= n - 2; ++i) out.elements.push_back(p.ShiftUp(i));
  return out;
}

int SpanDimUnion(const std::vector<VSet>& sets) {
  if (sets.empty()) return 0;
  const int n = sets.front().n;
  std::vector<IntPolynomial> all;
  for (const auto& s : sets) {
    if (s.n != n) {
      throw Error(ErrorCode::kInvalidArgument, "V-sets with different n");
    }
    all.insert(all.end(), s.elements.begin(), s.elements.end());
  }
  return RankOfPolys(all, std::max(0, 2 * n - 2));
}

bool IsIrreducibleDegN(const IntPolynomial& p, int n) {
  if (p.IsZero() || p.degree() != n) return false;
  const int d = n;
  if (d == 1) return true;
  if (d < 1) return false;
  const RationalPolynomial rational = p.ToRational();
  if (Gcd(rational, rational.Derivative()).degree() > 0) return false;

  std::bitset<64> possible;
  possible.set();
  int usable = 0;
  for (long q : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L,
                 47L, 53L, 59L, 61L, 67L, 71L, 73L}) {
    const auto degrees = FactorDegreesMod(p, q);
    if (!degrees) continue;
    possible &= *degrees;
    if (++usable == 8) break;
  }
  std::vector<int> candidates;
  for (int m = 1; 2 * m <= d; ++m) {
    if (possible[static_cast<std::size_t>(m)]) candidates.push_back(m);
  }
  if (candidates.empty()) return true;

  const auto roots = ComplexRoots(p);
  const long double lead = p.coefficient(d).get_d();
  for (int m : candidates) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (std::popcount(mask) != m) continue;
      std::vector<std::complex<long double>> prod{lead};
      for (int i = 0; i < d; ++i) {
        if (!(mask & (1u << i))) continue;
        prod.push_back(0);
        for (std::size_t j = prod.size() - 1; j > 0; --j) {
          prod[j] = prod[j - 1] - roots[i] * prod[j];
        }
        prod[0] = -roots[i] * prod[0];
      }
      std::vector<mpz_class> coeffs;
      bool integral = true;
      for (const auto& c : prod) {
        const long double r = std::round(c.real());
        const long double scale = std::max(1.0L, std::fabs(c.real()));
        if (std::fabs(c.imag()) > 1e-6L * scale ||
            std::fabs(c.real() - r) > 1e-6L * scale) {
          integral = false;
          break;
        }
        coeffs.emplace_back(static_cast<double>(r));
      }
      if (!integral) continue;
      const IntPolynomial factor(coeffs);
      if (factor.degree() == m && DividesOverQ(factor, p)) return false;
    }
  }
  return true;
}

void AnnotateGoodness(SequenceData& seq) {
  const int count = static_cast<int>(seq.records.size());
  for (int k = 1; k <= count; ++k) {
    auto& r = seq.records[static_cast<std::size_t>(k - 1)];
    r.good.reset();
    r.ell.reset();
    r.ell_truncated = false;
    if (k < 2 || k + 1 > count) continue;
    r.good = IsGood(seq, k);
    const EllResult ell = EllOfK(seq, k);
    r.ell = ell.ell;
    r.ell_truncated = ell.truncated;
  }
}

}  // namespace vlab
