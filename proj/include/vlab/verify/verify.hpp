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

#ifndef VLAB_VERIFY_VERIFY_HPP_
#define VLAB_VERIFY_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "vlab/bestapprox/records.hpp"
#include "vlab/paramgeom/minima.hpp"

namespace vlab {

enum class CheckKind {
  kExact,       // must hold on genuine data
  kIdentity,    // algebraic identity; residual must vanish up to enclosure radius
  kAsymptotic,  // holds up to o(1); margin reported against the slack
  kReport,      // empirical quantity, no pass/fail
};

struct CheckResult {
  std::string check_id;
  std::optional<int> k;
  CheckKind kind = CheckKind::kAsymptotic;
  // >= 0 means satisfied; for identities the residual, which should contain 0.
  RealEnclosure margin;
  bool applicable = true;
  // Identity checks: the residual must lie in [-tolerance, tolerance].
  double tolerance = 0;
  // Other checks: satisfied needs margin > 0 rather than >= 0.
  bool strict = false;
  std::string notes;
};

// kNegative: an asymptotic margin below zero, reported but not a failure.
enum class Verdict {
  kSatisfied,
  kViolated,
  kNegative,
  kUndecided,
  kNotApplicable,
  kInformational,
};
Verdict VerdictOf(const CheckResult& r);
std::string VerdictName(Verdict v);

struct VerifyOptions {
  double slack = 0.05;
  double tail_fraction = 0.5;
  // Residual tolerance for identity checks, on top of the enclosure radius.
  double identity_tolerance = 1e-9;
  // Compute exact successive minima at every q_k for the lower bound report.
  bool with_minima = true;
  MinimaOptions minima;
};

struct VerifySummary {
  int total = 0;
  int applicable = 0;
  int satisfied = 0;
  int violated = 0;
  int negative = 0;
  int undecided = 0;
  int informational = 0;
  // Asymptotic margins below -10 slack in the tail.
  int investigate = 0;
};

struct VerifyReport {
  std::string xi;
  int n = 1;
  double slack = 0.05;
  double tail_fraction = 0.5;
  ExponentProxies proxies;
  std::vector<CheckResult> results;
  std::vector<std::string> notes;
  VerifySummary summary;
};

// Monotonicity of heights and values: H_k - H_{k-1} - 1 and
// log|P_{k-1}(xi)| - log|P_k(xi)|, one result each per k >= 2.
std::vector<CheckResult> CheckMonotone(const SequenceData& seq);

// tau_{k+1} - mu_k + (2n-3) + slack for every good k.
std::vector<CheckResult> CheckTauAgainstMu(const SequenceData& seq, double slack);

// Two dimensional runs starting at k, gated by H_k > 2 H_{k-1}: margins for
// the log H_{ell-1}/log H_k bound in its v and w forms, for the
// log H_ell/log H_k bound, and the determinant identity across the run.
std::vector<CheckResult> CheckPlaneRun(const SequenceData& seq, int k, double slack,
                                       double identity_tolerance = 1e-9);

// slack - Theta_n(w_hat proxy, tau_k, tau_ell) under the same gate; vacuous
// (not applicable) unless the proxy exceeds 2n-2.
std::vector<CheckResult> CheckThetaBound(const SequenceData& seq, int k, double slack);

// slack - Theta_n(w_hat, tau_k, tau_l) on explicit values.
RealEnclosure ThetaMargin(int n, const RealEnclosure& w_hat, const RealEnclosure& tau_k,
                          const RealEnclosure& tau_l, double slack);

// |c_a B(xi) - c_b A(xi)| - |c_c D(xi) - c_d C(xi)| where c_x is the
// coefficient of T^power. For consecutive records of a two dimensional run
// (A, B) = (P_{k-1}, P_k), (C, D) = (P_{l-2}, P_{l-1}) this vanishes.
RealEnclosure DeterminantResidual(const IntPolynomial& a, const IntPolynomial& b,
                                  const IntPolynomial& c, const IntPolynomial& d,
                                  int power, const RealSource& source, long bits);
// Same test done exactly: c_a B - c_b A == +-(c_c D - c_d C) as polynomials.
bool DeterminantFormsAgree(const IntPolynomial& a, const IntPolynomial& b,
                           const IntPolynomial& c, const IntPolynomial& d, int power);

// Runs every check. Throws kEmptyInput for a sequence without records.
VerifyReport FullReport(const SequenceData& seq, const VerifyOptions& options);

std::string FormatReportJson(const VerifyReport& report);
std::string FormatReportText(const VerifyReport& report);

}  // namespace vlab

#endif  // VLAB_VERIFY_VERIFY_HPP_
