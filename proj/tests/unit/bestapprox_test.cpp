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
#include <numbers>
#include <regex>

#include "vlab/bestapprox/records.hpp"
#include "vlab/bestapprox/search.hpp"
#include "vlab/bestapprox/serialize.hpp"
#include "vlab/error.hpp"

namespace vlab {
namespace {

RealSource Source(const char* spec, long shift = 0) {
  return RealSource(RealSpec::Parse(spec), shift);
}

SearchOptions Serial() {
  SearchOptions o;
  o.execution = Execution::kSerial;
  return o;
}

bool SameUpToSign(const IntPolynomial& a, const IntPolynomial& b) {
  return a == b || a == -b;
}

TEST(MinPoly, SquareRootOfTwoSmallHeights) {
  const auto h1 = MinPolyAtHeight(Source("sqrt:2"), 1, 1);
  EXPECT_TRUE(SameUpToSign(h1.poly, IntPolynomial{-1, 1}));
  EXPECT_NEAR(h1.abs_value.mid(), std::numbers::sqrt2 - 1, 1e-15);
  const auto h3 = MinPolyAtHeight(Source("sqrt:2"), 1, 3);
  EXPECT_TRUE(SameUpToSign(h3.poly, IntPolynomial{-3, 2}));
  EXPECT_NEAR(h3.abs_value.mid(), 3 - 2 * std::numbers::sqrt2, 1e-15);
  EXPECT_TRUE(h3.poly.IsCanonical());
}

TEST(MinPoly, ExactZeroIsAnError) {
  try {
    MinPolyAtHeight(Source("rat:1/3"), 1, 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExactZeroDetected);
  }
  try {
    BestApproxSequence(Source("rat:1/3"), 1, 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExactZeroDetected);
  }
}

TEST(Sequence, SquareRootOfTwoConvergents) {
  // Convergents p/q of sqrt2 from p' = p + 2q, q' = p + q.
  std::vector<IntPolynomial> expected;
  for (long p = 1, q = 1; p <= 20;) {
    expected.push_back(IntPolynomial{-p, q});
    const long np = p + 2 * q, nq = p + q;
    p = np;
    q = nq;
  }
  const SequenceData seq = BestApproxSequence(Source("sqrt:2"), 1, 20);
  ASSERT_EQ(seq.records.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_TRUE(SameUpToSign(seq.records[i].poly, expected[i])) << seq.records[i].poly.ToString();
    EXPECT_EQ(seq.records[i].height, seq.records[i].poly.Height());
  }
  const SequenceData two = BestApproxSequence(Source("sqrt:2"), 1, 2);
  ASSERT_EQ(two.records.size(), 1u);
}

// Every height up to h_max: the brute force minimiser equals the last record
// at or below that height.
void ExpectOracleEquivalence(const RealSource& source, int n, long h_max) {
  const SequenceData seq = BestApproxSequence(source, n, h_max);
  std::size_t next = 0;
  for (long h = 1; h <= h_max; ++h) {
    while (next < seq.records.size() && seq.records[next].height <= h) ++next;
    ASSERT_GT(next, 0u);
    const auto oracle = MinPolyAtHeight(source, n, h);
    EXPECT_EQ(oracle.poly, seq.records[next - 1].poly)
        << source.spec().ToString() << " n=" << n << " h=" << h;
  }
}

TEST(Sequence, OracleEquivalenceCubeRootOfTwo) {
  ExpectOracleEquivalence(Source("cbrt:2"), 2, 40);
}

TEST(Sequence, OracleEquivalenceAssortedNumbers) {
  for (const char* spec : {"sqrt:3", "sqrt:7", "const:pi", "const:e", "root:5:4", "const:ln2"}) {
    ExpectOracleEquivalence(Source(spec), 1, 60);
  }
  for (const char* spec : {"cbrt:5", "const:pi", "const:e", "root:5:4", "const:ln2"}) {
    ExpectOracleEquivalence(Source(spec), 2, 12);
  }
  ExpectOracleEquivalence(Source("const:pi"), 3, 5);
  ExpectOracleEquivalence(Source("cbrt:2", 1), 2, 15);
}

TEST(Sequence, MonotoneHeightsAndValues) {
  const SequenceData seq = BestApproxSequence(Source("const:e"), 2, 200);
  for (std::size_t i = 1; i < seq.records.size(); ++i) {
    EXPECT_LT(seq.records[i - 1].height, seq.records[i].height);
    EXPECT_TRUE(seq.records[i].log_abs_value.CertainlyLess(seq.records[i - 1].log_abs_value));
  }
}

TEST(Sequence, SerialAndParallelAgreeBitForBit) {
  SearchOptions parallel;
  const auto a = BestApproxSequence(Source("cbrt:2"), 2, 300, Serial());
  const auto b = BestApproxSequence(Source("cbrt:2"), 2, 300, parallel);
  EXPECT_EQ(SequenceToJson(a), SequenceToJson(b));
}

TEST(Screening, ShellContainsEveryPolynomialBelowTheThreshold) {
  const RealSource source = Source("cbrt:3");
  const ScreeningContext ctx(source, 2);
  const long h = 9;
  const long double threshold = 0.05L;
  const auto shell = ScreenShell(ctx, h, threshold, Execution::kSerial);
  const long double x = ctx.x();
  int expected_min_count = 0;
  long double best = 1e30L;
  for (long a0 = -h; a0 <= h; ++a0) {
    for (long a1 = -h; a1 <= h; ++a1) {
      for (long a2 = -h; a2 <= h; ++a2) {
        const long top = std::max({std::labs(a0), std::labs(a1), std::labs(a2)});
        if (top != h) continue;
        best = std::min(best, std::fabs(a0 + a1 * x + a2 * x * x));
      }
    }
  }
  for (const auto& c : shell) {
    EXPECT_GE(c.value, best - 2 * ctx.ErrorBound(h));
    if (std::fabs(c.value - best) <= 1e-15L) ++expected_min_count;
  }
  EXPECT_GE(expected_min_count, 1);
  const auto parallel = ScreenShell(ctx, h, threshold, Execution::kParallel);
  ASSERT_EQ(parallel.size(), shell.size());
  for (std::size_t i = 0; i < shell.size(); ++i) EXPECT_EQ(parallel[i].coeffs, shell[i].coeffs);
}

TEST(Exponents, TauAndVFromHeights) {
  const SequenceData seq = BestApproxSequence(Source("sqrt:2"), 1, 10000);
  EXPECT_FALSE(seq.records[0].v.has_value());  // H_1 = 1
  EXPECT_FALSE(seq.records[1].tau.has_value());  // log H_1 = 0
  ASSERT_TRUE(seq.records[3].tau.has_value());
  EXPECT_NEAR(seq.records[3].tau->mid(), std::log(17.0) / std::log(7.0), 1e-14);
  const double mu4 = -seq.records[2].log_abs_value.mid() / std::log(17.0);
  EXPECT_NEAR(seq.records[3].mu->mid(), mu4, 1e-14);
  for (std::size_t i = 2; i < seq.records.size(); ++i) {
    if (seq.records[i].height < 1000) continue;
    const double v = seq.records[i].v->mid();
    EXPECT_GT(v, 0.9);
    EXPECT_LT(v, 1.1);
  }
  ASSERT_TRUE(seq.proxies.w.has_value());
  EXPECT_GE(seq.proxies.tail_begin, seq.records.size() / 2 - 1);
}

TEST(Serialize, RoundTripIsIdentical) {
  const SequenceData seq = BestApproxSequence(Source("cbrt:2"), 2, 100);
  const std::string text = SequenceToJson(seq);
  const SequenceData back = SequenceFromJson(text);
  EXPECT_EQ(SequenceToJson(back), text);
  EXPECT_EQ(back.records.size(), seq.records.size());
}

TEST(Serialize, RejectsInconsistentData) {
  const SequenceData seq = BestApproxSequence(Source("sqrt:2"), 1, 20);
  std::string text = SequenceToJson(seq);
  const std::string bad_height = std::regex_replace(text, std::regex("\"height\": 17"), "\"height\": 18");
  auto expect_parse_error = [](const std::string& t) {
    try {
      SequenceFromJson(t);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << e.what();
    }
  };
  expect_parse_error(bad_height);
  expect_parse_error("{not json");
  expect_parse_error("{\"n\": 1}");
  // Swap the stored values of two records.
  const auto first = text.find("\"mid\"");
  const auto second = text.find("\"mid\"", text.find("\"k\": 2"));
  ASSERT_NE(first, std::string::npos);
  std::string swapped = text;
  const std::string a = text.substr(first, text.find(',', first) - first);
  const std::string b = text.substr(second, text.find(',', second) - second);
  swapped.replace(second, b.size(), a);
  expect_parse_error(swapped);
}

}  // namespace
}  // namespace vlab
