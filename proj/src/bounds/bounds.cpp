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

#include "vlab/bounds/bounds.hpp"

#include <exception>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "vlab/error.hpp"
#include "vlab/numeric/decimal.hpp"

namespace vlab {
namespace {

void RequireN(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "n must be >= 2, got " + std::to_string(n));
  }
}

mpq_class Q(long value) { return mpq_class(value); }

nlohmann::ordered_json EnclosureJson(const RealEnclosure& x) {
  nlohmann::ordered_json out;
  out["truncated"] = TruncatedDecimal(x);
  out["mid"] = x.MidString();
  out["rad"] = x.RadString();
  return out;
}

}  // namespace

mpq_class DefaultRootTolerance() {
  mpq_class tol(1);
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), 60);
  return tol;
}

RationalPolynomial QuarticQ(int n) {
  RequireN(n);
  const long m = n;
  return RationalPolynomial({Q(-2 * m * m * m + 6 * m * m - 4 * m),
                             Q(-2 * m * m * m + 11 * m * m - 18 * m + 7),
                             Q(5 * m * m - 12 * m + 8), Q(4 - 4 * m), Q(1)});
}

RationalPolynomial CubicR(int n) {
  RequireN(n);
  const long m = n;
  return RationalPolynomial({Q(-2 * m * m * m + 8 * m * m - 10 * m + 3),
                             Q(5 * m * m - 11 * m + 6), Q(-(4 * m - 4)), Q(1)});
}

RationalPolynomial SigmaPolynomial(int n) {
  RequireN(n);
  const RationalPolynomial x_minus_n({-static_cast<long>(n), 1});
  RationalPolynomial power({1});  // (x-n)^(n-1)
  for (int i = 0; i < n - 1; ++i) power *= x_minus_n;
  RationalPolynomial first = RationalPolynomial({0, n - 1L}) * power;
  RationalPolynomial second = RationalPolynomial({-1, 1}) * power * x_minus_n;
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(n - 1),
                static_cast<unsigned long>(n));
  return first - second - RationalPolynomial({mpq_class(c)});
}

RootCertificate CertifyLargestRoot(const RationalPolynomial& p,
                                   int expected_roots, const mpq_class& lo,
                                   const mpq_class& hi) {
  RootCertificate cert;
  cert.squarefree = SquarefreePart(p).degree() == p.degree();
  cert.roots = IsolateAllRoots(p);
  cert.distinct_real_roots = static_cast<int>(cert.roots.size());
  const std::string label = p.ToString();
  if (!cert.squarefree || cert.distinct_real_roots != expected_roots) {
    throw Error(ErrorCode::kRootCountMismatch,
                label + " has " + std::to_string(cert.distinct_real_roots) +
                    " distinct real roots (squarefree=" +
                    (cert.squarefree ? "yes" : "no") + "), expected " +
                    std::to_string(expected_roots));
  }
  const auto inside = IsolateRoots(p, lo, hi);
  const mpq_class bound = CauchyRootBound(p);
  const bool above = p.SignAt(hi) == 0 || (hi < bound && CountRoots(p, hi, bound) > 0);
  if (inside.size() != 1 || above) {
    throw Error(ErrorCode::kRootCountMismatch,
                "largest root of " + label + " is not alone in (" +
                    lo.get_str() + ", " + hi.get_str() + ")");
  }
  cert.largest = inside.front();
  return cert;
}

RealEnclosure Beta(int n, const mpq_class& tol) {
  const RationalPolynomial q = QuarticQ(n);
  const auto cert = CertifyLargestRoot(q, 4, Q(2L * n - 2), Q(2L * n - 1));
  return RefineRoot(q, cert.largest, tol);
}

RealEnclosure Gamma(int n, const mpq_class& tol) {
  const RationalPolynomial r = CubicR(n);
  const auto cert = CertifyLargestRoot(r, 3, Q(2L * n - 2), Q(2L * n - 1));
  return RefineRoot(r, cert.largest, tol);
}

RealEnclosure Rho(int n) {
  RequireN(n);
  const long m = n;
  // (sqrt5 (n-1) + n + 1)/2 > 2n-2  iff  5(n-1)^2 > (3n-5)^2, for n >= 2.
  const long lhs = 5 * (m - 1) * (m - 1);
  const long rhs = (3 * m - 5) * (3 * m - 5);
  if (lhs <= rhs) return RealEnclosure::FromInteger(2 * m - 2);
  const RealEnclosure sqrt5 = Sqrt(RealEnclosure::FromInteger(5));
  return (sqrt5 * (m - 1) + (m + 1)) / 2;
}

RealEnclosure Sigma(int n, const mpq_class& tol) {
  const RationalPolynomial g = SigmaPolynomial(n);
  const mpq_class eps(1, 1000000);
  mpq_class a = Q(n) + eps;
  mpq_class b = Q(2L * n - 1) - eps;
  const int sa = g.SignAt(a);
  const int sb = g.SignAt(b);
  if (sa == 0 || sb == 0 || sa == sb) {
    throw Error(ErrorCode::kNoSignChange,
                "sigma bracket has no sign change for n=" + std::to_string(n));
  }
  while (b - a > tol) {
    mpq_class mid = (a + b) / 2;
    mid.canonicalize();
    const int sm = g.SignAt(mid);
    if (sm == 0) return RealEnclosure::FromRational(mid);
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return RealEnclosure::FromEndpoints(a, b);
}

RealEnclosure Alpha(int n, const mpq_class& tol) {
  RequireN(n);
  if (n >= 10) return RealEnclosure::FromInteger(2L * n - 2);
  return Sigma(n, tol);
}

RationalPolynomial ThetaDiagonalPolynomial(int n, const mpq_class& tau) {
  RequireN(n);
  const auto c = ThetaCoefficients<mpq_class>(n, tau, tau);
  return RationalPolynomial({c.d0, c.d1, c.d2, c.d3});
}

RealEnclosure WBoundFromTau(int n, const mpq_class& tau, const mpq_class& tol) {
  if (tau <= 1) {
    throw Error(ErrorCode::kInvalidArgument, "tau must exceed 1");
  }
  const RationalPolynomial theta = ThetaDiagonalPolynomial(n, tau);
  const mpq_class top(2L * n - 1);
  if (theta.SignAt(top) == 0) return RealEnclosure::FromRational(top);
  const auto roots = IsolateRoots(theta, Q(n), top);
  if (roots.empty()) {
    throw Error(ErrorCode::kNoRootInRange,
                "Theta_" + std::to_string(n) + "(w, tau, tau) has no root in (" +
                    std::to_string(n) + ", " + top.get_str() + "]");
  }
  return RefineRoot(theta, roots.back(), tol);
}

RealEnclosure WBoundFromTau(int n, const RealEnclosure& tau) {
  const RealEnclosure at_lower = WBoundFromTau(n, tau.lower_rational());
  if (tau.IsExact()) return at_lower;
  return RealEnclosure::Hull(at_lower, WBoundFromTau(n, tau.upper_rational()));
}

std::vector<BoundsRow> BoundsTable(int n_min, int n_max) {
  RequireN(n_min);
  if (n_max < n_min) {
    throw Error(ErrorCode::kInvalidArgument, "n_max must be >= n_min");
  }
  const int count = n_max - n_min + 1;
  std::vector<BoundsRow> rows(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      BoundsRow row;
      row.n = n_min + i;
      row.beta = Beta(row.n);
      row.alpha = Alpha(row.n);
      row.gamma = Gamma(row.n);
      row.rho = Rho(row.n);
      rows[static_cast<std::size_t>(i)] = std::move(row);
    } catch (...) {
#pragma omp critical(vlab_bounds_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string TruncatedDecimal(const RealEnclosure& x, int digits) {
  const mpq_class lo = x.lower_rational();
  if (x.IsExact() && lo.get_den() == 1) return lo.get_num().get_str();
  std::string a = TruncateDecimal(lo, digits);
  std::string b = TruncateDecimal(x.upper_rational(), digits);
  if (a != b) {
    throw Error(ErrorCode::kPrecisionExhausted,
                "enclosure straddles a truncation boundary: " + a + " / " + b);
  }
  return a;
}

std::string BoundsRowFlag(const BoundsRow& row) {
  if (row.n == 7) {
    const std::string gamma = TruncatedDecimal(row.gamma);
    if (gamma != "10.0328") {
      return "gamma_7 = " + gamma +
             " (largest root of T^3 - 24T^2 + 174T - 361); the reference "
             "table prints 10.0328, a suspected typo";
    }
  }
  return "";
}

std::string FormatBoundsTable(const std::vector<BoundsRow>& rows,
                              TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::kCsv:
      out << "n,beta,alpha,gamma,rho\n";
      for (const auto& r : rows) {
        out << r.n << ',' << TruncatedDecimal(r.beta) << ','
            << TruncatedDecimal(r.alpha) << ',' << TruncatedDecimal(r.gamma)
            << ',' << TruncatedDecimal(r.rho) << '\n';
      }
      break;
    case TableFormat::kText: {
      out << std::setw(4) << "n" << std::setw(10) << "beta" << std::setw(10)
          << "alpha" << std::setw(10) << "gamma" << std::setw(10) << "rho"
          << '\n';
      std::vector<std::string> flags;
      for (const auto& r : rows) {
        out << std::setw(4) << r.n << std::setw(10) << TruncatedDecimal(r.beta)
            << std::setw(10) << TruncatedDecimal(r.alpha) << std::setw(10)
            << TruncatedDecimal(r.gamma) << std::setw(10)
            << TruncatedDecimal(r.rho) << '\n';
        std::string flag = BoundsRowFlag(r);
        if (!flag.empty()) flags.push_back("n=" + std::to_string(r.n) + ": " + flag);
      }
      out << "(values truncated to 4 decimals)\n";
      for (const auto& f : flags) out << "note " << f << '\n';
      break;
    }
    case TableFormat::kJson: {
      nlohmann::ordered_json array = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["beta"] = EnclosureJson(r.beta);
        row["alpha"] = EnclosureJson(r.alpha);
        row["gamma"] = EnclosureJson(r.gamma);
        row["rho"] = EnclosureJson(r.rho);
        const std::string flag = BoundsRowFlag(r);
        row["flag"] = flag.empty() ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json(flag);
        array.push_back(std::move(row));
      }
      out << array.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace vlab
