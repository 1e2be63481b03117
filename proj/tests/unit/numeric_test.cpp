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
#include <random>

#include "vlab/error.hpp"
#include "vlab/int_polynomial.hpp"
#include "vlab/numeric/algebraic.hpp"
#include "vlab/numeric/decimal.hpp"
#include "vlab/numeric/enclosure.hpp"
#include "vlab/numeric/escalation.hpp"
#include "vlab/numeric/rational_polynomial.hpp"
#include "vlab/numeric/real_spec.hpp"
#include "vlab/numeric/roots.hpp"

namespace vlab {
namespace {

mpq_class Q(long p, long q = 1) {
  mpq_class x(p, q);
  x.canonicalize();
  return x;
}

bool Encloses(const RealEnclosure& x, const mpq_class& v) {
  return x.lower_rational() <= v && v <= x.upper_rational();
}

void ExpectCode(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// e = sum 1/k! with the tail after m terms below 2/m!.
mpq_class ESeries(int terms, mpq_class& tail) {
  mpq_class sum = 0, term = 1;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) term /= k;
    sum += term;
  }
  tail = term * 2 / terms;
  return sum;
}

// ln 2 = sum_{k>=1} 1/(k 2^k); the tail after m terms is below 1/2^m.
mpq_class Ln2Series(int terms, mpq_class& tail) {
  mpq_class sum = 0;
  mpz_class pow2 = 1;
  for (int k = 1; k <= terms; ++k) {
    pow2 *= 2;
    sum += mpq_class(1, pow2 * k);
  }
  tail = mpq_class(1, pow2);
  return sum;
}

TEST(Enclosure, ArithmeticContainsExactRationalResults) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 9999);
  for (int i = 0; i < 300; ++i) {
    const mpq_class a = Q(num(rng), den(rng));
    mpq_class b = Q(num(rng), den(rng));
    if (b == 0) b = 1;
    const auto ea = RealEnclosure::FromRational(a, 64);
    const auto eb = RealEnclosure::FromRational(b, 64);
    EXPECT_TRUE(Encloses(ea + eb, a + b));
    EXPECT_TRUE(Encloses(ea - eb, a - b));
    EXPECT_TRUE(Encloses(ea * eb, a * b));
    EXPECT_TRUE(Encloses(ea / eb, a / b));
    EXPECT_TRUE(Encloses(ea * 7L - 3L, a * 7 - 3));
  }
}

TEST(Enclosure, SqrtEndpointsSquareAroundTheArgument) {
  for (long v : {2L, 3L, 5L, 10L, 12345L}) {
    const auto r = Sqrt(RealEnclosure::FromInteger(v, 96));
    const mpq_class lo = r.lower_rational(), hi = r.upper_rational();
    EXPECT_LE(lo * lo, v);
    EXPECT_GE(hi * hi, v);
    EXPECT_LT(r.rad(), 1e-25);
  }
}

TEST(Enclosure, LogAndExpAgreeWithDoubledPrecision) {
  for (long v : {2L, 3L, 17L, 1000L}) {
    const auto low = Log(RealEnclosure::FromInteger(v, 80));
    const auto high = Log(RealEnclosure::FromInteger(v, 160));
    EXPECT_LE(low.lower_rational(), high.lower_rational());
    EXPECT_GE(low.upper_rational(), high.upper_rational());
    const auto back = Exp(high);
    EXPECT_TRUE(Encloses(back, v));
  }
}

TEST(Enclosure, CompareSeparatesOnlyDisjointIntervals) {
  const auto a = RealEnclosure::FromEndpoints(Q(1), Q(2));
  const auto b = RealEnclosure::FromEndpoints(Q(3, 2), Q(3));
  const auto c = RealEnclosure::FromEndpoints(Q(4), Q(5));
  EXPECT_FALSE(a.Compare(b).has_value());
  EXPECT_TRUE(a.CertainlyLess(c));
  EXPECT_FALSE(c.CertainlyLess(a));
}

TEST(Enclosure, MidRadStringsRoundTripToASuperset) {
  const auto x = Log(RealEnclosure::FromRational(Q(26, 100), 128));
  for (int digits : {10, 20, 40}) {
    const auto y = RealEnclosure::FromMidRad(x.MidString(digits), x.RadString(digits));
    EXPECT_LE(y.lower_rational(), x.lower_rational());
    EXPECT_GE(y.upper_rational(), x.upper_rational());
  }
}

TEST(RealFromSpec, RationalOneThird) {
  const auto x = RealFromSpec(RealSpec::Parse("rat:1/3"), 64);
  EXPECT_TRUE(Encloses(x, Q(1, 3)));
  EXPECT_LE(x.rad(), std::ldexp(1.0, -63));
}

TEST(RealFromSpec, SquareRootOfTwoSquaresAroundTwo) {
  const auto x = RealFromSpec(RealSpec::Parse("sqrt:2"), 64);
  const mpq_class lo = x.lower_rational(), hi = x.upper_rational();
  EXPECT_LE(lo * lo, 2);
  EXPECT_GE(hi * hi, 2);
  EXPECT_LE(x.rad(), std::ldexp(1.0, -63) * 1.5);
  EXPECT_NEAR(x.mid(), std::numbers::sqrt2, 1e-15);
}

TEST(RealFromSpec, KthRootPowersAroundTheBase) {
  const auto x = RealFromSpec(RealSpec::Parse("root:7:5"), 100);
  mpq_class lo = x.lower_rational(), hi = x.upper_rational();
  mpq_class lo5 = lo * lo * lo * lo * lo, hi5 = hi * hi * hi * hi * hi;
  EXPECT_LE(lo5, 7);
  EXPECT_GE(hi5, 7);
}

TEST(RealFromSpec, DecimalDigitsCarryTheirOwnError) {
  const auto x = RealFromSpec(RealSpec::Parse("dec:2.718281828459045"), 40);
  EXPECT_TRUE(Encloses(x, ParseDecimal("2.718281828459045")));
  EXPECT_TRUE(Encloses(x, ParseDecimal("2.7182818284590455")));
  EXPECT_LE(x.rad(), 2.718281828459045 * std::ldexp(1.0, -39));
  ExpectCode(ErrorCode::kInsufficientDigits,
             [] { RealFromSpec(RealSpec::Parse("dec:2.718281828459045"), 128); });
}

TEST(RealFromSpec, ConstantsMatchSeriesOracles) {
  mpq_class tail;
  const mpq_class e = ESeries(60, tail);
  const auto ee = RealFromSpec(RealSpec::Parse("const:e"), 128);
  EXPECT_LE(ee.lower_rational(), e + tail);
  EXPECT_GE(ee.upper_rational(), e);
  const mpq_class ln2 = Ln2Series(150, tail);
  const auto el = RealFromSpec(RealSpec::Parse("const:ln2"), 128);
  EXPECT_LE(el.lower_rational(), ln2 + tail);
  EXPECT_GE(el.upper_rational(), ln2);
  const auto pi = RealFromSpec(RealSpec::Parse("const:pi"), 128);
  EXPECT_NEAR(pi.mid(), std::numbers::pi, 1e-15);
  EXPECT_LT(pi.rad(), 1e-37);
}

TEST(RealFromSpec, ContinuedFractionIsItsRationalValue) {
  const RealSpec spec = RealSpec::Parse("cf:1,2,2,2");
  ASSERT_TRUE(spec.ExactRational().has_value());
  EXPECT_EQ(*spec.ExactRational(), Q(17, 12));
  EXPECT_TRUE(spec.IsAlgebraic());
  EXPECT_TRUE(Encloses(RealFromSpec(spec, 64), Q(17, 12)));
}

TEST(RealFromSpec, Errors) {
  ExpectCode(ErrorCode::kUnsupportedSpec, [] { RealSpec::Parse("const:phi"); });
  ExpectCode(ErrorCode::kParseError, [] { RealSpec::Parse("nonsense"); });
  ExpectCode(ErrorCode::kParseError, [] { RealSpec::Parse("rat:1/0"); });
  ExpectCode(ErrorCode::kInvalidArgument,
             [] { RealFromSpec(RealSpec::Parse("sqrt:2"), 8); });
}

TEST(RealSpec, TextRoundTrip) {
  for (const char* text : {"sqrt:2", "cbrt:2", "root:5:4", "rat:-3/7", "const:pi",
                           "cf:0,1,5,2", "dec:-0.125"}) {
    const RealSpec spec = RealSpec::Parse(text);
    EXPECT_EQ(RealSpec::Parse(spec.ToString()), spec) << text;
  }
}

TEST(PolyEval, RootsGiveEnclosuresOfZero) {
  const auto one = RealEnclosure::FromInteger(1, 64);
  const auto v = EvaluateEnclosure(IntPolynomial{-1, 1}, one);
  EXPECT_TRUE(v.IsExact());
  EXPECT_TRUE(v.ContainsZero());
  const auto sqrt2 = RealFromSpec(RealSpec::Parse("sqrt:2"), 64);
  const auto w = EvaluateEnclosure(IntPolynomial{-2, 0, 1}, sqrt2);
  EXPECT_TRUE(w.ContainsZero());
  EXPECT_LE(w.rad(), std::ldexp(1.0, -60));
}

TEST(PolyEval, LinearFormAtSquareRootOfTwo) {
  const auto sqrt2 = RealFromSpec(RealSpec::Parse("sqrt:2"), 128);
  const auto v = EvaluateEnclosure(IntPolynomial{-3, 2}, sqrt2);
  EXPECT_NEAR(v.mid(), static_cast<double>(2 * std::sqrt(2.0L) - 3), 1e-16);
  EXPECT_TRUE(v.IsNegative());
}

TEST(Roots, SquareRootOfTwo) {
  const auto roots = IsolateRoots(RationalPolynomial{-2, 0, 1}, Q(0), Q(2));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_LT(roots[0].lo * roots[0].lo, 2);
  EXPECT_GT(roots[0].hi * roots[0].hi, 2);
}

TEST(Roots, HandFactoredQuartic) {
  // T^4 - 4T^3 + 4T^2 - T = T (T - 1)(T^2 - 3T + 1).
  const RationalPolynomial p{0, -1, 4, -4, 1};
  const auto roots = IsolateRoots(p, Q(-1), Q(3));
  ASSERT_EQ(roots.size(), 4u);
  const long double s5 = std::sqrt(5.0L);
  const long double expected[] = {0, (3 - s5) / 2, 1, (3 + s5) / 2};
  for (int i = 0; i < 4; ++i) {
    EXPECT_LE(roots[i].lo.get_d(), static_cast<double>(expected[i]) + 1e-12);
    EXPECT_GE(roots[i].hi.get_d(), static_cast<double>(expected[i]) - 1e-12);
    if (i > 0) {
      EXPECT_LT(roots[i - 1].hi, roots[i].lo);
    }
  }
}

TEST(Roots, ChebyshevPolynomialHasEightSeparatedRoots) {
  // T_8(x) = 128x^8 - 256x^6 + 160x^4 - 32x^2 + 1, roots cos((2j-1)pi/16).
  const RationalPolynomial t8{1, 0, -32, 0, 160, 0, -256, 0, 128};
  auto roots = IsolateAllRoots(t8);
  ASSERT_EQ(roots.size(), 8u);
  std::vector<long double> expected;
  for (int j = 1; j <= 8; ++j) {
    expected.push_back(std::cos((2 * j - 1) * std::numbers::pi_v<long double> / 16));
  }
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 8; ++i) {
    const auto r = RefineRoot(t8, roots[i], Q(1, 1000000000));
    EXPECT_NEAR(r.mid(), static_cast<double>(expected[i]), 1e-9);
  }
}

TEST(Roots, CubicFromTheTableIsolatesOneRoot) {
  const RationalPolynomial r3{-9, 18, -8, 1};
  const auto roots = IsolateRoots(r3, Q(4), Q(5));
  ASSERT_EQ(roots.size(), 1u);
  const auto v = RefineRoot(r3, roots[0], Q(1, 1000000000));
  EXPECT_GT(v.lower_double(), 4.3027);
  EXPECT_LT(v.upper_double(), 4.3028);
}

TEST(Roots, RationalRootsComeBackExact) {
  // (T - 1)(T - 2)(2T - 1)
  const RationalPolynomial p = RationalPolynomial{-1, 1} * RationalPolynomial{-2, 1} *
                               RationalPolynomial{-1, 2};
  const auto roots = IsolateRoots(p, Q(0), Q(3));
  ASSERT_EQ(roots.size(), 3u);
  const auto five = RefineRoot(RationalPolynomial{-5, 1}, {Q(4), Q(6)}, Q(1, 1000000));
  EXPECT_TRUE(Encloses(five, 5));
  EXPECT_LE(five.rad(), 1e-6);
}

TEST(Roots, RefineGoldenAndQuarticToTolerance) {
  const mpq_class tol(1, 1000000000000L);
  const auto phi2 = RefineRoot(RationalPolynomial{1, -3, 1}, {Q(2), Q(3)}, tol);
  EXPECT_NEAR(phi2.mid(), static_cast<double>((3 + std::sqrt(5.0L)) / 2), 1e-12);
  EXPECT_LE(phi2.rad(), 1e-12);
  const auto b3 = RefineRoot(RationalPolynomial{-12, -2, 17, -8, 1}, {Q(4), Q(5)}, tol);
  EXPECT_EQ(b3.mid() > 4.3234 && b3.mid() < 4.3235, true);
}

TEST(Roots, TighterToleranceNests) {
  const RationalPolynomial p{1, -3, 1};
  const auto loose = RefineRoot(p, {Q(2), Q(3)}, Q(1, 1000));
  const auto tight = RefineRoot(p, {Q(2), Q(3)}, Q(1, 1000000000));
  EXPECT_GE(tight.lower_rational(), loose.lower_rational());
  EXPECT_LE(tight.upper_rational(), loose.upper_rational());
}

TEST(Roots, Errors) {
  ExpectCode(ErrorCode::kZeroPolynomial,
             [] { IsolateRoots(RationalPolynomial{}, Q(0), Q(1)); });
  ExpectCode(ErrorCode::kNotIsolating, [] {
    RefineRoot(RationalPolynomial{-2, 0, 1}, {Q(-2), Q(2)}, Q(1, 100));
  });
}

TEST(Roots, SturmCountsOpenIntervals) {
  const SturmChain chain(RationalPolynomial{0, -1, 4, -4, 1});
  EXPECT_EQ(chain.CountOpen(Q(-1), Q(3)), 4);
  EXPECT_EQ(chain.CountOpen(Q(0), Q(1)), 1);  // only (3 - sqrt5)/2
  EXPECT_EQ(chain.CountOpen(Q(1, 2), Q(2)), 1);
}

TEST(Algebraic, ExactZeroTests) {
  EXPECT_EQ(VanishesAt(IntPolynomial{-2, 0, 1}, RealSource(RealSpec::Parse("sqrt:2"))), true);
  EXPECT_EQ(VanishesAt(IntPolynomial{-1, 1}, RealSource(RealSpec::Parse("sqrt:2"))), false);
  EXPECT_EQ(VanishesAt(IntPolynomial{-2, 0, 0, 1}, RealSource(RealSpec::Parse("cbrt:2"))), true);
  EXPECT_EQ(VanishesAt(IntPolynomial{-1, 3}, RealSource(RealSpec::Parse("rat:1/3"))), true);
  // sqrt2 - 1 is a root of T^2 + 2T - 1.
  EXPECT_EQ(VanishesAt(IntPolynomial{-1, 2, 1}, RealSource(RealSpec::Parse("sqrt:2"), 1)), true);
  EXPECT_FALSE(VanishesAt(IntPolynomial{-3, 1}, RealSource(RealSpec::Parse("const:e"))).has_value());
}

TEST(Escalation, DoublesUntilDecidedOrCap) {
  std::vector<long> seen;
  const int v = Escalate(128, 4096, [&](long bits) -> std::optional<int> {
    seen.push_back(bits);
    if (bits >= 512) return 7;
    return std::nullopt;
  }, "test");
  EXPECT_EQ(v, 7);
  EXPECT_EQ(seen, (std::vector<long>{128, 256, 512}));
  ExpectCode(ErrorCode::kPrecisionExhausted, [] {
    Escalate(128, 1024, [](long) -> std::optional<int> { return std::nullopt; }, "never");
  });
}

TEST(Decimal, ParseAndTruncate) {
  EXPECT_EQ(ParseDecimal("1.25"), Q(5, 4));
  EXPECT_EQ(ParseDecimal("-12.5e-3"), Q(-1, 80));
  EXPECT_EQ(FractionalDigits("2.7182"), 4);
  EXPECT_EQ(TruncateDecimal(Q(314159, 100000), 4), "3.1415");
  EXPECT_EQ(TruncateDecimal(Q(-1, 3), 2), "-0.34");
  ExpectCode(ErrorCode::kParseError, [] { ParseDecimal("1.2.3"); });
}

TEST(IntPolynomial, CanonicalSignAndHeight) {
  const IntPolynomial p{-3, 2};
  EXPECT_FALSE(p.IsCanonical());
  EXPECT_EQ(p.Canonical(), (IntPolynomial{3, -2}));
  EXPECT_EQ(p.Height(), 3);
  EXPECT_EQ((IntPolynomial{0, 0, -5, 2}).Canonical(), (IntPolynomial{0, 0, 5, -2}));
  EXPECT_EQ((IntPolynomial{1, 1}).ShiftUp(2), (IntPolynomial{0, 0, 1, 1}));
  // P(T + 1) for P = T^2: T^2 + 2T + 1.
  EXPECT_EQ((IntPolynomial{0, 0, 1}).Translate(1), (IntPolynomial{1, 2, 1}));
}

}  // namespace
}  // namespace vlab
