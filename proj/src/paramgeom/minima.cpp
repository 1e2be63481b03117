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

#include "vlab/paramgeom/minima.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>

#include "vlab/error.hpp"
#include "vlab/paramgeom/trajectory.hpp"
#include "vlab/polyalg/polyalg.hpp"

namespace vlab {
namespace {

using Coeffs = std::vector<std::int64_t>;

struct Candidate {
  Coeffs a;
  long double norm;
};

// Long double model of the lattice at parameter q.
struct Model {
  int d;                          // 2n - 1
  long double s;                  // e^{-q/(2n-2)}
  long double t;                  // e^{q}
  std::vector<long double> pows;  // xi^i, i < d

  Model(const RealSource& source, int n, double q) : d(2 * n - 1) {
    s = std::exp(-static_cast<long double>(q) / (2.0L * n - 2));
    t = std::exp(static_cast<long double>(q));
    const long double x = source.Approximate();
    pows.assign(static_cast<std::size_t>(d), 1.0L);
    for (int i = 1; i < d; ++i) pows[i] = pows[i - 1] * x;
  }

  long double Norm(const Coeffs& a) const {
    std::int64_t top = 0;
    long double value = 0;
    for (int i = d - 1; i >= 0; --i) {
      if (i >= 1) top = std::max<std::int64_t>(top, a[i] < 0 ? -a[i] : a[i]);
      value += static_cast<long double>(a[i]) * pows[i];
    }
    return std::max(static_cast<long double>(top) * s, std::fabs(value) * t);
  }

  std::vector<long double> Embed(const Coeffs& a) const {
    std::vector<long double> y(static_cast<std::size_t>(d), 0.0L);
    long double value = 0;
    for (int i = 0; i < d; ++i) {
      if (i >= 1) y[i - 1] = static_cast<long double>(a[i]) * s;
      value += static_cast<long double>(a[i]) * pows[i];
    }
    y[d - 1] = value * t;
    return y;
  }
};

bool Canonical(const Coeffs& a) {
  for (auto v : a) {
    if (v != 0) return v > 0;
  }
  return false;
}

long double Dot(const std::vector<long double>& u, const std::vector<long double>& v) {
  long double acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

struct GramSchmidt {
  std::vector<std::vector<long double>> mu;
  std::vector<long double> norms;  // |b*_i|^2
};

GramSchmidt Orthogonalize(const std::vector<std::vector<long double>>& b) {
  const std::size_t d = b.size();
  GramSchmidt g;
  g.mu.assign(d, std::vector<long double>(d, 0.0L));
  g.norms.assign(d, 0.0L);
  std::vector<std::vector<long double>> star = b;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      g.mu[i][j] = Dot(b[i], star[j]) / g.norms[j];
      for (std::size_t c = 0; c < star[i].size(); ++c) {
        star[i][c] -= g.mu[i][j] * star[j][c];
      }
    }
    g.norms[i] = Dot(star[i], star[i]);
    g.mu[i][i] = 1;
  }
  return g;
}

// LLL with delta = 0.99 on coefficient vectors; embeddings recomputed from
// the integer data after every step.
std::vector<Coeffs> Reduce(const Model& m, std::vector<Coeffs> basis) {
  const int d = m.d;
  auto embed = [&](const std::vector<Coeffs>& c) {
    std::vector<std::vector<long double>> b;
    for (const auto& v : c) b.push_back(m.Embed(v));
    return b;
  };
  int k = 1;
  for (int guard = 0; k < d && guard < 100000; ++guard) {
    for (int j = k - 1; j >= 0; --j) {
      const GramSchmidt g = Orthogonalize(embed(basis));
      const long double r = std::round(g.mu[k][j]);
      if (r != 0) {
        const auto shift = static_cast<std::int64_t>(r);
        for (int c = 0; c < d; ++c) basis[k][c] -= shift * basis[j][c];
      }
    }
    const GramSchmidt g = Orthogonalize(embed(basis));
    const long double mu = g.mu[k][k - 1];
    if (g.norms[k] >= (0.99L - mu * mu) * g.norms[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      k = std::max(k - 1, 1);
    }
  }
  return basis;
}

MinimaResult Finish(const RealSource& source, int n, double q,
                    std::vector<Candidate> cands, long enumerated, long bits) {
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    return x.a < y.a;
  });
  const int d = 2 * n - 1;
  MinimaResult out;
  out.n = n;
  out.q = q;
  out.enumerated = enumerated;
  std::vector<std::vector<mpz_class>> rows;
  const RealEnclosure qe = RealEnclosure::FromDouble(q, bits);
  for (const auto& c : cands) {
    if (static_cast<int>(rows.size()) == d) break;
    std::vector<mpz_class> row(c.a.begin(), c.a.end());
    rows.push_back(row);
    if (MatrixRank(rows) < static_cast<int>(rows.size())) {
      rows.pop_back();
      continue;
    }
    IntPolynomial p = IntPolynomial::FromSmall(c.a);
    out.values.push_back(LatticeLogNorm(p, source, n, qe, bits));
    out.polys.push_back(std::move(p));
  }
  if (static_cast<int>(out.values.size()) != d) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration produced only " + std::to_string(out.values.size()) +
                    " independent lattice points");
  }
  return out;
}

void RequireN(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "successive minima need n >= 2, got " + std::to_string(n));
  }
}

}  // namespace

RealEnclosure LatticeLogNorm(const IntPolynomial& p, const RealSource& source,
                             int n, const RealEnclosure& q, long precision_bits) {
  if (p.degree() > 2 * n - 2) {
    throw Error(ErrorCode::kDegreeOverflow,
                p.ToString() + " exceeds degree " + std::to_string(2 * n - 2));
  }
  mpz_class top = 0;
  for (int i = 1; i <= p.degree(); ++i) {
    const mpz_class a = abs(p.coefficient(i));
    if (a > top) top = a;
  }
  const RealEnclosure rising = CertifiedLogAbs(p, source, precision_bits) + q;
  if (top == 0) return rising;
  const RealEnclosure falling =
      Log(RealEnclosure::FromInteger(top, precision_bits)) - q / (2L * n - 2);
  return Max(falling, rising);
}

MinimaResult SuccessiveMinimaExact(const RealSource& source, int n, double q,
                                   const MinimaOptions& options) {
  RequireN(n);
  const Model m(source, n, q);
  const int d = m.d;
  std::vector<Coeffs> basis;
  for (int i = 0; i < d; ++i) {
    Coeffs e(static_cast<std::size_t>(d), 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  basis = Reduce(m, std::move(basis));

  long double radius = 0;
  for (const auto& c : basis) radius = std::max(radius, m.Norm(c));
  radius *= 1.0L + 1e-9L;
  std::vector<std::vector<long double>> b;
  for (const auto& c : basis) b.push_back(m.Embed(c));
  const GramSchmidt g = Orthogonalize(b);
  const long double r2 = d * radius * radius * (1.0L + 1e-9L);

  const long double top_bound = std::floor(std::sqrt(r2 / g.norms[d - 1]));
  std::vector<std::int64_t> top_values;
  for (auto v = static_cast<std::int64_t>(-top_bound); v <= static_cast<std::int64_t>(top_bound); ++v) {
    top_values.push_back(v);
  }

  std::atomic<long> nodes{0};
  std::atomic<bool> over_budget{false};
  const bool parallel = options.execution == Execution::kParallel;
  const int workers = parallel ? omp_get_max_threads() : 1;
  std::vector<std::vector<Candidate>> found(static_cast<std::size_t>(workers));
  const long count = static_cast<long>(top_values.size());

#pragma omp parallel for schedule(dynamic) num_threads(workers) if (parallel)
  for (long ti = 0; ti < count; ++ti) {
    auto& out = found[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<std::int64_t> x(static_cast<std::size_t>(d), 0);
    std::vector<long double> partial(static_cast<std::size_t>(d) + 1, 0.0L);
    x[d - 1] = top_values[static_cast<std::size_t>(ti)];
    {
      const long double diff = static_cast<long double>(x[d - 1]);
      partial[d - 1] = diff * diff * g.norms[d - 1];
    }
    long local = 0;
    // Depth-first over levels d-2 .. 0.
    auto recurse = [&](auto&& self, int level) -> void {
      if (over_budget.load(std::memory_order_relaxed)) return;
      if (level < 0) {
        Coeffs a(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i) {
          for (int c = 0; c < d; ++c) a[c] += x[i] * basis[i][c];
        }
        if (!Canonical(a)) return;
        const long double norm = m.Norm(a);
        if (norm <= radius) out.push_back({std::move(a), norm});
        return;
      }
      long double center = 0;
      for (int j = level + 1; j < d; ++j) center -= x[j] * g.mu[j][level];
      const long double room = r2 - partial[level + 1];
      if (room < 0) return;
      const long double span = std::sqrt(room / g.norms[level]);
      const auto lo = static_cast<std::int64_t>(std::ceil(center - span));
      const auto hi = static_cast<std::int64_t>(std::floor(center + span));
      for (std::int64_t v = lo; v <= hi; ++v) {
        if (++local % 4096 == 0) {
          if (nodes.fetch_add(4096) + 4096 > options.budget) {
            over_budget.store(true);
            return;
          }
        }
        x[level] = v;
        const long double diff = static_cast<long double>(v) - center;
        partial[level] = partial[level + 1] + diff * diff * g.norms[level];
        self(self, level - 1);
      }
      x[level] = 0;
    };
    if (d >= 2) {
      recurse(recurse, d - 2);
    }
    nodes.fetch_add(local % 4096);
  }
  if (over_budget.load() || nodes.load() > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "successive minima enumeration exceeded " +
                    std::to_string(options.budget) + " nodes at q=" +
                    std::to_string(q));
  }
  std::vector<Candidate> cands;
  for (auto& part : found) {
    for (auto& c : part) cands.push_back(std::move(c));
  }
  return Finish(source, n, q, std::move(cands), nodes.load(),
                options.precision_bits);
}

MinimaResult SuccessiveMinimaReference(const RealSource& source, int n, double q,
                                       const MinimaOptions& options) {
  RequireN(n);
  const Model m(source, n, q);
  const int d = m.d;
  for (long double radius = 1;; radius *= 2) {
    const auto bound = static_cast<std::int64_t>(std::floor(radius / m.s));
    const long double window = radius / m.t;
    const long double box =
        std::pow(2.0L * bound + 1, d - 1) * (2 * window + 2);
    if (box > options.budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "reference box of " + std::to_string(static_cast<double>(box)) +
                      " points exceeds the budget");
    }
    std::vector<Candidate> cands;
    Coeffs a(static_cast<std::size_t>(d), 0);
    for (int i = 1; i < d; ++i) a[i] = -bound;
    long examined = 0;
    while (true) {
      long double tail = 0;
      for (int i = 1; i < d; ++i) tail += static_cast<long double>(a[i]) * m.pows[i];
      const auto lo = static_cast<std::int64_t>(std::ceil(-tail - window));
      const auto hi = static_cast<std::int64_t>(std::floor(-tail + window));
      for (std::int64_t a0 = lo; a0 <= hi; ++a0) {
        ++examined;
        a[0] = a0;
        if (!Canonical(a)) continue;
        const long double norm = m.Norm(a);
        if (norm <= radius) cands.push_back({a, norm});
      }
      a[0] = 0;
      int i = d - 1;
      while (i >= 1 && a[i] == bound) {
        a[i] = -bound;
        --i;
      }
      if (i < 1) break;
      ++a[i];
    }
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& c : cands) rows.emplace_back(c.a.begin(), c.a.end());
    if (MatrixRank(rows) == d) {
      return Finish(source, n, q, std::move(cands), examined,
                    options.precision_bits);
    }
  }
}

PoolResult SuccessiveMinimaPool(const SequenceData& seq, double q) {
  const int n = seq.n;
  RequireN(n);
  if (seq.records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "pool needs at least one record");
  }
  const long bits = seq.precision_bits;
  const RealEnclosure qe = RealEnclosure::FromDouble(q, bits);
  std::optional<RealEnclosure> log_xi;
  if (n > 2) {
    const RealEnclosure xi = Abs(seq.source().Enclosure(bits));
    if (xi.ContainsZero()) {
      throw Error(ErrorCode::kInvalidArgument, "pool needs xi != 0");
    }
    log_xi = Log(xi);
  }
  struct Member {
    IntPolynomial poly;
    RealEnclosure value;
  };
  std::vector<Member> pool;
  for (const auto& r : seq.records) {
    const RealEnclosure log_height = Log(RealEnclosure::FromInteger(r.height, bits));
    for (int i = 0; i <= n - 2; ++i) {
      RealEnclosure log_value = r.log_abs_value;
      if (i > 0) log_value += *log_xi * static_cast<long>(i);
      const Trajectory traj(log_height, log_value, n);
      pool.push_back({r.poly.ShiftUp(i), traj.Evaluate(qe)});
    }
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Member& a, const Member& b) {
    const long double x = a.value.mid_long_double();
    const long double y = b.value.mid_long_double();
    if (x != y) return x < y;
    return a.poly < b.poly;
  });
  PoolResult out;
  const int d = 2 * n - 1;
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& m : pool) {
    if (static_cast<int>(rows.size()) == d) break;
    rows.push_back(m.poly.Padded(d));
    if (MatrixRank(rows) < static_cast<int>(rows.size())) {
      rows.pop_back();
      continue;
    }
    out.values.push_back(m.value);
    out.polys.push_back(m.poly);
  }
  out.incomplete = static_cast<int>(out.values.size()) < d;
  return out;
}

SequenceData ShiftToUnitInterval(const SequenceData& seq,
                                 const SearchOptions& options) {
  const RealSource source = seq.source();
  const RealEnclosure x = source.Enclosure(seq.precision_bits);
  auto floor_of = [](const mpq_class& v) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return r;
  };
  const mpz_class lo = floor_of(x.lower_rational());
  const mpz_class hi = floor_of(x.upper_rational());
  if (lo != hi) {
    throw Error(ErrorCode::kPrecisionExhausted,
                "cannot determine floor(xi) at " + std::to_string(seq.precision_bits) +
                    " bits");
  }
  if (lo == 0) return seq;
  SearchOptions opts = options;
  opts.precision_bits = seq.precision_bits;
  SequenceData out = BestApproxSequence(source.Shifted(lo.get_si()), seq.n,
                                        seq.search_height_limit.get_si(), opts);
  AnnotateGoodness(out);
  return out;
}

std::string FrameLabel(const SequenceData& seq) {
  if (seq.shift == 0) return "original frame";
  return "shifted frame (xi - " + std::to_string(seq.shift) + ")";
}

}  // namespace vlab
