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

#include "vlab/bestapprox/search.hpp"

#include <omp.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "vlab/error.hpp"
#include "vlab/numeric/algebraic.hpp"

namespace vlab {
namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();

struct FreeCoord {
  int index;
  std::int64_t lo;
  std::int64_t hi;
};

// Visits every assignment of the free coordinates (odometer, last coordinate
// fastest). With no free coordinates the callback runs once.
template <class Visit>
void Odometer(std::vector<std::int64_t>& c, const std::vector<FreeCoord>& free,
              Visit&& visit) {
  for (const auto& f : free) {
    if (f.lo > f.hi) return;
    c[f.index] = f.lo;
  }
  while (true) {
    visit();
    std::size_t p = free.size();
    while (p > 0) {
      const FreeCoord& f = free[p - 1];
      if (c[f.index] < f.hi) {
        ++c[f.index];
        break;
      }
      c[f.index] = f.lo;
      --p;
    }
    if (p == 0) return;
  }
}

// First nonzero entry of a_1..a_n is positive.
bool TailCanonical(const std::vector<std::int64_t>& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return c[i] > 0;
  }
  return true;
}

std::int64_t ClipToInt(long double t, std::int64_t lo, std::int64_t hi) {
  if (t <= static_cast<long double>(lo)) return lo;
  if (t >= static_cast<long double>(hi)) return hi;
  return static_cast<std::int64_t>(t);
}

// Collects near-minimal candidates of one worker.
class Collector {
 public:
  Collector(long double limit, long double slack) : limit_(limit), slack_(slack) {}

  void Offer(const std::vector<std::int64_t>& c, long double value) {
    if (value > limit_ || value > min_ + slack_) return;
    items_.push_back({c, value});
    if (value < min_) {
      min_ = value;
      if (items_.size() > 256) Prune();
    }
  }

  void Prune() {
    std::erase_if(items_, [&](const ScreenedCandidate& s) {
      return s.value > min_ + slack_;
    });
  }

  long double min() const { return min_; }
  std::vector<ScreenedCandidate>& items() { return items_; }

 private:
  long double limit_;
  long double slack_;
  long double min_ = kInf;
  std::vector<ScreenedCandidate> items_;
};

std::vector<ScreenedCandidate> Merge(std::vector<Collector>& parts,
                                     long double slack) {
  long double best = kInf;
  for (const auto& p : parts) best = std::min(best, p.min());
  std::vector<ScreenedCandidate> out;
  for (auto& p : parts) {
    for (auto& s : p.items()) {
      if (s.value > best + slack) continue;
      if (s.coeffs[0] < 0) {
        for (auto& a : s.coeffs) a = -a;
      }
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ScreenedCandidate& a, const ScreenedCandidate& b) {
              return a.coeffs < b.coeffs;
            });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ScreenedCandidate& a, const ScreenedCandidate& b) {
                          return a.coeffs == b.coeffs;
                        }),
            out.end());
  return out;
}

IntPolynomial ToPolynomial(const std::vector<std::int64_t>& c) {
  return IntPolynomial::FromSmall(c);
}

// |P(xi)| < |Q(xi)| (true), >= (false), escalating precision in between.
bool StrictlyBelow(const IntPolynomial& p, const IntPolynomial& q,
                   const RealSource& source, const PrecisionPolicy& policy) {
  const long max_bits = std::max(policy.initial_bits, source.MaxPrecision(policy));
  for (long bits = policy.initial_bits;; bits = std::min(bits * 2, max_bits)) {
    const RealEnclosure x = source.Enclosure(bits);
    const RealEnclosure a = Abs(EvaluateEnclosure(p, x));
    const RealEnclosure b = Abs(EvaluateEnclosure(q, x));
    if (a.CertainlyLess(b)) return true;
    if (b.CertainlyLess(a)) return false;
    if (a.IsExact() && b.IsExact() && !a.CertainlyLess(b)) return false;
    if (VanishesAt(p - q, source).value_or(false) ||
        VanishesAt(p + q, source).value_or(false)) {
      return false;
    }
    if (bits >= max_bits) break;
  }
  throw Error(ErrorCode::kPrecisionExhausted,
              "cannot order |" + p.ToString() + "| and |" + q.ToString() +
                  "| at " + source.spec().ToString());
}

// Index of the certified minimiser of |P(xi)| (lexicographically smallest
// among exact ties).
std::size_t CertifyMinimum(const std::vector<IntPolynomial>& cands,
                           const RealSource& source,
                           const PrecisionPolicy& policy, RealEnclosure* value) {
  const long max_bits = std::max(policy.initial_bits, source.MaxPrecision(policy));
  for (long bits = policy.initial_bits;; bits = std::min(bits * 2, max_bits)) {
    const RealEnclosure x = source.Enclosure(bits);
    std::vector<RealEnclosure> vals;
    vals.reserve(cands.size());
    bool undecided = false;
    for (const auto& c : cands) {
      vals.push_back(Abs(EvaluateEnclosure(c, x)));
      if (vals.back().ContainsZero()) {
        if (VanishesAt(c, source).value_or(false)) {
          throw Error(ErrorCode::kExactZeroDetected,
                      c.ToString() + " vanishes at " + source.spec().ToString() +
                          " (algebraic of degree <= n)");
        }
        undecided = true;
      }
    }
    if (!undecided) {
      std::size_t lead = 0;
      for (std::size_t i = 1; i < vals.size(); ++i) {
        if (mpfr_cmp(vals[i].upper(), vals[lead].upper()) < 0) lead = i;
      }
      std::vector<std::size_t> contenders;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (mpfr_cmp(vals[i].lower(), vals[lead].upper()) <= 0) {
          contenders.push_back(i);
        }
      }
      bool all_tied = true;
      for (std::size_t i : contenders) {
        if (i == lead) continue;
        const bool tied =
            VanishesAt(cands[i] - cands[lead], source).value_or(false) ||
            VanishesAt(cands[i] + cands[lead], source).value_or(false);
        if (!tied) {
          all_tied = false;
          break;
        }
      }
      if (all_tied) {
        std::size_t best = contenders.front();
        for (std::size_t i : contenders) {
          if (cands[i] < cands[best]) best = i;
        }
        if (value != nullptr) *value = vals[best];
        return best;
      }
    }
    if (bits >= max_bits) break;
  }
  throw Error(ErrorCode::kPrecisionExhausted,
              "cannot separate the smallest values among " +
                  std::to_string(cands.size()) + " candidates at " +
                  source.spec().ToString());
}

}  // namespace

long DefaultHeightLimit(int n) {
  switch (n) {
    case 1:
      return 10000;
    case 2:
      return 500;
    case 3:
      return 60;
    case 4:
      return 25;
    default:
      return 12;
  }
}

ScreeningContext::ScreeningContext(const RealSource& source, int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  const long double x = source.Approximate();
  const long double e = source.ApproximationError();
  powers_.assign(static_cast<std::size_t>(n) + 1, 1.0L);
  for (int i = 1; i <= n; ++i) powers_[i] = powers_[i - 1] * x;
  const long double m = std::max(1.0L, std::fabs(x) + e);
  const long double u = LDBL_EPSILON / 2;
  const long double mn = std::pow(m, static_cast<long double>(n));
  const long double mn1 = std::pow(m, static_cast<long double>(n - 1));
  // Input error through the derivative plus accumulated rounding, doubled.
  per_height_error_ =
      2.0L * (n + 1) * (n * mn1 * e * 1.01L + 4.0L * (n + 2) * u * mn);
}

long double ScreeningContext::ErrorBound(long h) const {
  return per_height_error_ * static_cast<long double>(h) + LDBL_MIN;
}

std::vector<ScreenedCandidate> ScreenShell(const ScreeningContext& ctx, long h,
                                           long double threshold,
                                           Execution execution) {
  const int n = ctx.n();
  const auto& pw = ctx.powers();
  const long double x = ctx.x();
  const long double slack = 2 * ctx.ErrorBound(h);
  const long double limit = threshold + slack;
  const bool solve_a1 = std::fabs(x) >= 1e-3L;

  // A segment fixes the structure: case A has max_{i>=1} |a_i| = h first
  // reached at index j with sign s; case B has a_0 = h and max_{i>=1} |a_i|
  // < h. `lead` optionally pins the lowest free coordinate to split work.
  struct Segment {
    bool case_a;
    int j;
    int sign;
    int lead_index;  // -1: none
    std::int64_t lead;
  };
  std::vector<Segment> segments;
  for (int j = 1; j <= n; ++j) {
    for (int sign : {1, -1}) {
      if (j == 1 && sign < 0) continue;  // a_1 = -h is never canonical
      const int lead_index = j > 1 ? 1 : (n >= 2 ? 2 : -1);
      if (lead_index < 0) {
        segments.push_back({true, j, sign, -1, 0});
        continue;
      }
      const std::int64_t bound = lead_index < j ? h - 1 : h;
      for (std::int64_t v = -bound; v <= bound; ++v) {
        if (lead_index == 1 && v < 0) continue;
        segments.push_back({true, j, sign, lead_index, v});
      }
    }
  }
  {
    const int lead_index = n >= 2 ? 2 : (solve_a1 ? -1 : 1);
    if (lead_index < 0) {
      segments.push_back({false, 0, 1, -1, 0});
    } else {
      for (std::int64_t v = -(h - 1); v <= h - 1; ++v) {
        segments.push_back({false, 0, 1, lead_index, v});
      }
    }
  }

  const int workers = execution == Execution::kParallel ? omp_get_max_threads() : 1;
  std::vector<Collector> parts(static_cast<std::size_t>(workers),
                               Collector(limit, slack));
  const long count = static_cast<long>(segments.size());

#pragma omp parallel for schedule(dynamic) num_threads(workers) \
    if (execution == Execution::kParallel)
  for (long si = 0; si < count; ++si) {
    const Segment& seg = segments[static_cast<std::size_t>(si)];
    Collector& out = parts[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    std::vector<FreeCoord> free;
    if (seg.case_a) {
      c[seg.j] = seg.sign * h;
      for (int i = 1; i <= n; ++i) {
        if (i == seg.j || i == seg.lead_index) continue;
        const std::int64_t b = i < seg.j ? h - 1 : h;
        free.push_back({i, -b, b});
      }
      if (seg.lead_index > 0) c[seg.lead_index] = seg.lead;
      Odometer(c, free, [&] {
        if (!TailCanonical(c)) return;
        long double s = 0;
        for (int i = n; i >= 1; --i) s = (s + c[i]) * x;
        const long double target = -s;
        const std::int64_t lo = ClipToInt(std::floor(target), -h, h);
        const std::int64_t hi = ClipToInt(std::ceil(target), -h, h);
        c[0] = lo;
        out.Offer(c, std::fabs(lo + s));
        if (hi != lo) {
          c[0] = hi;
          out.Offer(c, std::fabs(hi + s));
        }
        c[0] = 0;
      });
    } else {
      c[0] = h;
      const int first_free = solve_a1 ? 2 : 1;
      for (int i = first_free; i <= n; ++i) {
        if (i == seg.lead_index) continue;
        free.push_back({i, -(h - 1), h - 1});
      }
      if (seg.lead_index > 0) c[seg.lead_index] = seg.lead;
      Odometer(c, free, [&] {
        long double rest = 0;
        for (int i = n; i >= 2; --i) rest = (rest + c[i]) * x;
        rest *= x;  // sum_{i>=2} a_i x^i
        const long double constant = static_cast<long double>(h) + rest;
        if (!solve_a1) {
          const long double value = constant + c[1] * pw[1];
          out.Offer(c, std::fabs(value));
          return;
        }
        const long double t = -constant / x;
        const std::int64_t lo = ClipToInt(std::floor(t), -(h - 1), h - 1);
        const std::int64_t hi = ClipToInt(std::ceil(t), -(h - 1), h - 1);
        c[1] = lo;
        out.Offer(c, std::fabs(constant + lo * x));
        if (hi != lo) {
          c[1] = hi;
          out.Offer(c, std::fabs(constant + hi * x));
        }
        c[1] = 0;
      });
    }
  }
  return Merge(parts, slack);
}

MinPolyResult MinPolyAtHeight(const RealSource& source, int n, long h,
                              const PrecisionPolicy& policy) {
  if (h < 1) throw Error(ErrorCode::kInvalidArgument, "height must be >= 1");
  const ScreeningContext ctx(source, n);
  const auto& pw = ctx.powers();
  const long double slack = 2 * ctx.ErrorBound(h);
  Collector collect(kInf, slack);
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  std::vector<FreeCoord> free;
  for (int i = 1; i <= n; ++i) free.push_back({i, -h, h});
  Odometer(c, free, [&] {
    if (!TailCanonical(c)) return;
    bool tail_zero = true;
    long double s = 0;
    for (int i = 1; i <= n; ++i) {
      if (c[i] != 0) tail_zero = false;
      s += static_cast<long double>(c[i]) * pw[i];
    }
    if (tail_zero) {
      c[0] = 1;
      collect.Offer(c, 1.0L);
      c[0] = 0;
      return;
    }
    const long double target = -s;
    for (long double a : {std::floor(target), std::ceil(target)}) {
      c[0] = ClipToInt(a, -h, h);
      collect.Offer(c, std::fabs(static_cast<long double>(c[0]) + s));
    }
    c[0] = 0;
  });
  std::vector<Collector> parts{std::move(collect)};
  const auto cands = Merge(parts, slack);
  std::vector<IntPolynomial> polys;
  for (const auto& s : cands) polys.push_back(ToPolynomial(s.coeffs));
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  MinPolyResult result;
  const std::size_t best = CertifyMinimum(polys, source, policy, &result.abs_value);
  result.poly = polys[best];
  return result;
}

SequenceData BestApproxSequence(const RealSource& source, int n, long h_max,
                                const SearchOptions& options) {
  if (h_max < 1) throw Error(ErrorCode::kInvalidArgument, "h_max must be >= 1");
  const ScreeningContext ctx(source, n);
  SequenceData seq;
  seq.xi_spec = source.spec();
  seq.shift = source.shift();
  seq.n = n;
  seq.search_height_limit = h_max;
  seq.precision_bits = options.precision_bits;

  std::optional<IntPolynomial> record;
  long double record_value = kInf;
  for (long h = 1; h <= h_max; ++h) {
    const auto cands = ScreenShell(ctx, h, record_value, options.execution);
    if (cands.empty()) continue;
    std::vector<IntPolynomial> polys;
    polys.reserve(cands.size());
    for (const auto& s : cands) polys.push_back(ToPolynomial(s.coeffs));
    const std::size_t best = CertifyMinimum(polys, source, options.policy, nullptr);
    if (record && !StrictlyBelow(polys[best], *record, source, options.policy)) {
      continue;
    }
    record = polys[best];
    record_value = cands[best].value;
    BestApproxRecord r;
    r.poly = polys[best];
    r.height = h;
    seq.records.push_back(std::move(r));
  }
  for (auto& r : seq.records) {
    r.log_abs_value =
        CertifiedLogAbs(r.poly, source, options.precision_bits, options.policy);
  }
  DeriveExponents(seq);
  return seq;
}

}  // namespace vlab
