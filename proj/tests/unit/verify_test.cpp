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

#include <gtest/gtest.h>

#include <cmath>

#include "vlab/bestapprox/search.hpp"
#include "vlab/bounds/bounds.hpp"
#include "vlab/error.hpp"
#include "vlab/polyalg/polyalg.hpp"
#include "vlab/verify/verify.hpp"

namespace vlab {
namespace {

RealEnclosure R(double x) { return RealEnclosure::FromDouble(x); }

SequenceData Annotated(const char* spec, int n, long h) {
  SequenceData seq = BestApproxSequence(RealSource(RealSpec::Parse(spec)), n, h);
  AnnotateGoodness(seq);
  return seq;
}

long double EvalLd(const IntPolynomial& p, long double x) {
  long double acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coefficient(i).get_d();
  return acc;
}

int CountVerdict(const std::vector<CheckResult>& rs, const std::string& id, Verdict v) {
  int c = 0;
  for (const auto& r : rs) c += (r.check_id == id && VerdictOf(r) == v) ? 1 : 0;
  return c;
}

TEST(Monotone, OracleSequencePositive) {
  const SequenceData seq = Annotated("sqrt:2", 1, 10000);
  const auto rs = CheckMonotone(seq);
  ASSERT_EQ(rs.size(), 2 * (seq.records.size() - 1));
  for (const auto& r : rs) {
    EXPECT_EQ(VerdictOf(r), Verdict::kSatisfied) << r.check_id << " k=" << *r.k;
  }
}

TEST(Monotone, SingleRecordNotApplicable) {
  SequenceData seq = Annotated("sqrt:2", 1, 1);
  ASSERT_EQ(seq.records.size(), 1u);
  const auto rs = CheckMonotone(seq);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_FALSE(rs[0].applicable);
}

TEST(Monotone, SwappedRecordsFlagged) {
  SequenceData seq = Annotated("sqrt:2", 1, 100);
  std::swap(seq.records[1], seq.records[2]);
  const auto rs = CheckMonotone(seq);
  EXPECT_GE(CountVerdict(rs, "monotone_height", Verdict::kViolated), 1);
  EXPECT_GE(CountVerdict(rs, "monotone_value", Verdict::kViolated), 1);
}

TEST(TauAgainstMu, RealDataAndSyntheticViolation) {
  const SequenceData seq = Annotated("cbrt:2", 2, 500);
  const auto rs = CheckTauAgainstMu(seq, 0.05);
  int good = 0;
  for (const auto& r : rs) {
    const bool g = *seq.records[*r.k - 1].good;
    EXPECT_EQ(r.applicable, g && seq.records[*r.k].tau.has_value()) << *r.k;
    if (r.applicable) {
      ++good;
      EXPECT_GE(r.margin.mid(), -0.05);
    }
  }
  EXPECT_GT(good, 0);

  SequenceData bad = seq;
  const int k = 3;
  bad.records[k - 1].good = true;
  bad.records[k - 1].mu = R(5);
  bad.records[k].tau = R(1.2);
  bool seen = false;
  for (const auto& r : CheckTauAgainstMu(bad, 0.05)) {
    if (*r.k != k) continue;
    seen = true;
    EXPECT_NEAR(r.margin.mid(), 1.2 - 5 + 1 + 0.05, 1e-12);
    EXPECT_EQ(VerdictOf(r), Verdict::kNegative);
  }
  EXPECT_TRUE(seen);
  // mu = n leaves tau > 1 as the only requirement.
  bad.records[k - 1].mu = R(2);
  bad.records[k].tau = R(1.0001);
  for (const auto& r : CheckTauAgainstMu(bad, 0.0)) {
    if (*r.k == k) {
      EXPECT_EQ(VerdictOf(r), Verdict::kSatisfied);
    }
  }
}

TEST(PlaneRun, GateNote) {
  const SequenceData seq = Annotated("cbrt:2", 2, 500);
  bool found = false;
  for (int k = 2; k <= static_cast<int>(seq.records.size()); ++k) {
    if (seq.records[k - 1].height > 2 * seq.records[k - 2].height) continue;
    found = true;
    const auto rs = CheckPlaneRun(seq, k, 0.05);
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_FALSE(rs[0].applicable);
    EXPECT_NE(rs[0].notes.find("precondition fails"), std::string::npos);
    const auto th = CheckThetaBound(seq, k, 0.05);
    ASSERT_EQ(th.size(), 1u);
    EXPECT_FALSE(th[0].applicable);
  }
  EXPECT_TRUE(found);
}

TEST(PlaneRun, DeterminantOnConstructedRun) {
  const RealSource src(RealSpec::Parse("cbrt:2"));
  const long double x = std::cbrt(2.0L);
  const IntPolynomial a{3, -7, 2}, b{-5, 1, 4};
  for (int power = 0; power <= 2; ++power) {
    // Unimodular change of basis keeps the 2x2 form up to sign.
    const IntPolynomial c = a + b, d = a + b * IntPolynomial{2};
    EXPECT_TRUE(DeterminantFormsAgree(a, b, c, d, power));
    const RealEnclosure res = DeterminantResidual(a, b, c, d, power, src, 128);
    EXPECT_TRUE(res.ContainsZero() || std::fabs(res.mid()) < 1e-30);
    const long double left = std::fabs(a.coefficient(power).get_d() * EvalLd(b, x) -
                                       b.coefficient(power).get_d() * EvalLd(a, x));
    const long double right = std::fabs(c.coefficient(power).get_d() * EvalLd(d, x) -
                                        d.coefficient(power).get_d() * EvalLd(c, x));
    EXPECT_NEAR(static_cast<double>(left), static_cast<double>(right), 1e-12);
    // Determinant 2 doubles the right side.
    const IntPolynomial d2 = a + b * IntPolynomial{3};
    EXPECT_FALSE(DeterminantFormsAgree(a, b, c, d2, power));
    const RealEnclosure res2 = DeterminantResidual(a, b, c, d2, power, src, 128);
    EXPECT_NEAR(res2.mid(), -static_cast<double>(left), 1e-12);
  }
  // Trivial window: the run is the pair itself.
  EXPECT_TRUE(DeterminantFormsAgree(a, b, a, b, 1));
}

TEST(PlaneRun, IdentityHoldsOnRealRuns) {
  const SequenceData seq = Annotated("cbrt:2", 2, 500);
  int checked = 0;
  for (int k = 2; k <= static_cast<int>(seq.records.size()); ++k) {
    for (const auto& r : CheckPlaneRun(seq, k, 0.05)) {
      if (r.check_id != "plane_determinant") continue;
      ++checked;
      EXPECT_EQ(VerdictOf(r), Verdict::kSatisfied) << k << " " << r.notes;
      EXPECT_NE(r.notes.find("agree"), std::string::npos);
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Theta, EquilibriumMarginEqualsSlack) {
  const RealEnclosure b3 = Beta(3);
  const RealEnclosure tau = b3 - 3L;
  const RealEnclosure m = ThetaMargin(3, b3, tau, tau, 0.05);
  EXPECT_NEAR(m.mid(), 0.05, 1e-12);
}

TEST(Theta, AboveEquilibriumIsNegative) {
  const double b2 = (3 + std::sqrt(5.0)) / 2;
  const double w = b2 + 0.01;
  const double tau = b2 - 1;
  const RealEnclosure m = ThetaMargin(2, R(w), R(tau), R(tau), 0.0);
  EXPECT_TRUE(m.IsNegative());
  // Below the largest root the margin is positive again.
  EXPECT_TRUE(ThetaMargin(2, R(b2 - 0.01), R(tau), R(tau), 0.0).IsPositive());
}

TEST(Theta, VacuousBelowHypothesis) {
  SequenceData seq = Annotated("cbrt:2", 2, 500);
  int gated = 0;
  seq.proxies.w_hat = R(1.9);
  for (int k = 2; k <= static_cast<int>(seq.records.size()); ++k) {
    for (const auto& r : CheckThetaBound(seq, k, 0.05)) {
      if (r.notes.find("vacuous") == std::string::npos) continue;
      ++gated;
      EXPECT_FALSE(r.applicable);
    }
  }
  EXPECT_GT(gated, 0);
}

TEST(Report, DegreeOneSkipsPlaneChecks) {
  const SequenceData seq = Annotated("sqrt:2", 1, 10000);
  VerifyOptions opt;
  const VerifyReport rep = FullReport(seq, opt);
  EXPECT_EQ(rep.n, 1);
  bool note = false;
  for (const auto& s : rep.notes) note = note || s.find("n = 1") != std::string::npos;
  EXPECT_TRUE(note);
  for (const auto& r : rep.results) {
    EXPECT_TRUE(r.check_id.rfind("monotone", 0) == 0 || r.check_id.rfind("tau_", 0) == 0)
        << r.check_id;
  }
  EXPECT_EQ(rep.summary.violated, 0);
  // Early tau_k sit above the tail proxy ratio: negative, not violated.
  EXPECT_GT(rep.summary.negative, 0);
  EXPECT_EQ(rep.summary.investigate, 0);
}

TEST(Report, CubeRootEndToEnd) {
  const SequenceData seq = Annotated("cbrt:2", 2, 500);
  VerifyOptions opt;
  const VerifyReport rep = FullReport(seq, opt);
  int identities = 0;
  for (const auto& r : rep.results) {
    if (r.kind == CheckKind::kIdentity && r.applicable) {
      ++identities;
      EXPECT_EQ(VerdictOf(r), Verdict::kSatisfied) << r.check_id << " k=" << *r.k;
    }
    if (r.kind == CheckKind::kExact && r.applicable) {
      EXPECT_NE(VerdictOf(r), Verdict::kViolated) << r.check_id << " k=" << *r.k;
    }
  }
  EXPECT_GT(identities, 5);
  EXPECT_EQ(rep.summary.total, static_cast<int>(rep.results.size()));
  EXPECT_EQ(rep.summary.satisfied + rep.summary.violated + rep.summary.negative +
                rep.summary.undecided + rep.summary.informational,
            rep.summary.applicable);
  // Deterministic bytes.
  EXPECT_EQ(FormatReportJson(rep), FormatReportJson(FullReport(seq, opt)));
  EXPECT_NE(FormatReportText(rep).find("omega_identity"), std::string::npos);
}

TEST(Report, EmptyInput) {
  SequenceData seq;
  seq.n = 2;
  try {
    FullReport(seq, {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

}  // namespace
}  // namespace vlab
