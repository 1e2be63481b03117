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

#include "vlab/verify/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "vlab/bounds/bounds.hpp"
#include "vlab/error.hpp"
#include "vlab/paramgeom/trajectory.hpp"
#include "vlab/polyalg/polyalg.hpp"

namespace vlab {
namespace {

const BestApproxRecord& Rec(const SequenceData& seq, int k) {
  return seq.records[static_cast<std::size_t>(k - 1)];
}

RealEnclosure LogHeight(const SequenceData& seq, int k) {
  return Log(RealEnclosure::FromInteger(Rec(seq, k).height, seq.precision_bits));
}

RealEnclosure Slack(const SequenceData& seq, double slack) {
  return RealEnclosure::FromDouble(slack, seq.precision_bits);
}

CheckResult Skip(std::string id, std::optional<int> k, CheckKind kind,
                 std::string notes, long bits) {
  CheckResult r;
  r.check_id = std::move(id);
  r.k = k;
  r.kind = kind;
  r.margin = RealEnclosure(bits);
  r.applicable = false;
  r.notes = std::move(notes);
  return r;
}

CheckResult Make(std::string id, std::optional<int> k, CheckKind kind,
                 RealEnclosure margin, std::string notes = {}) {
  CheckResult r;
  r.check_id = std::move(id);
  r.k = k;
  r.kind = kind;
  r.margin = std::move(margin);
  r.notes = std::move(notes);
  return r;
}

std::string Short(const RealEnclosure& x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x.mid());
  return buf;
}

// Shared gate for the two dimensional run checks; returns the skip reason.
std::optional<std::string> RunGate(const SequenceData& seq, int k) {
  if (seq.n < 2) return "needs n >= 2";
  if (k < 2 || k > static_cast<int>(seq.records.size())) return "k outside the records";
  if (!(Rec(seq, k).height > 2 * Rec(seq, k - 1).height)) {
    return "H_k <= 2 H_{k-1}: precondition fails";
  }
  const auto& r = Rec(seq, k);
  if (!r.ell) return "ell(k) unknown";
  if (r.ell_truncated) return "ell(k) truncated by the end of the records";
  if (!seq.proxies.w_hat) return "no w_hat proxy";
  return std::nullopt;
}

int TailStart(const SequenceData& seq) {
  return static_cast<int>(seq.proxies.tail_begin) + 1;
}

}  // namespace

Verdict VerdictOf(const CheckResult& r) {
  if (!r.applicable) return Verdict::kNotApplicable;
  if (r.kind == CheckKind::kReport) return Verdict::kInformational;
  const double lo = r.margin.lower_double();
  const double hi = r.margin.upper_double();
  if (r.kind == CheckKind::kIdentity) {
    if (lo >= -r.tolerance && hi <= r.tolerance) return Verdict::kSatisfied;
    if (lo > r.tolerance || hi < -r.tolerance) return Verdict::kViolated;
    return Verdict::kUndecided;
  }
  if (r.strict ? r.margin.IsPositive() : lo >= 0) return Verdict::kSatisfied;
  if (r.strict ? hi <= 0 : r.margin.IsNegative()) {
    return r.kind == CheckKind::kAsymptotic ? Verdict::kNegative : Verdict::kViolated;
  }
  return Verdict::kUndecided;
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kSatisfied: return "ok";
    case Verdict::kViolated: return "VIOLATED";
    case Verdict::kNegative: return "negative";
    case Verdict::kUndecided: return "undecided";
    case Verdict::kNotApplicable: return "n/a";
    case Verdict::kInformational: return "info";
  }
  return "?";
}

std::vector<CheckResult> CheckMonotone(const SequenceData& seq) {
  std::vector<CheckResult> out;
  const int count = static_cast<int>(seq.records.size());
  if (count < 2) {
    out.push_back(Skip("monotone", std::nullopt, CheckKind::kExact,
                       "needs at least two records", seq.precision_bits));
    return out;
  }
  for (int k = 2; k <= count; ++k) {
    const mpz_class gap = Rec(seq, k).height - Rec(seq, k - 1).height - 1;
    out.push_back(Make("monotone_height", k, CheckKind::kExact,
                       RealEnclosure::FromInteger(gap, seq.precision_bits),
                       "H_k - H_{k-1} - 1"));
    CheckResult value = Make("monotone_value", k, CheckKind::kExact,
                             Rec(seq, k - 1).log_abs_value - Rec(seq, k).log_abs_value,
                             "log|P_{k-1}(xi)| - log|P_k(xi)|");
    value.strict = true;
    out.push_back(std::move(value));
  }
  return out;
}

std::vector<CheckResult> CheckTauAgainstMu(const SequenceData& seq, double slack) {
  std::vector<CheckResult> out;
  const int count = static_cast<int>(seq.records.size());
  for (int k = 1; k <= count; ++k) {
    const auto& r = Rec(seq, k);
    if (!r.good) continue;
    if (!*r.good) {
      out.push_back(Skip("tau_next_vs_mu", k, CheckKind::kAsymptotic, "k is not good",
                         seq.precision_bits));
      continue;
    }
    if (k + 1 > count || !Rec(seq, k + 1).tau || !r.mu) {
      out.push_back(Skip("tau_next_vs_mu", k, CheckKind::kAsymptotic,
                         "tau_{k+1} or mu_k undefined", seq.precision_bits));
      continue;
    }
    RealEnclosure margin = *Rec(seq, k + 1).tau - *r.mu + (2L * seq.n - 3);
    margin += Slack(seq, slack);
    out.push_back(Make("tau_next_vs_mu", k, CheckKind::kAsymptotic, std::move(margin),
                       "tau_{k+1} - mu_k + (2n-3) + slack"));
  }
  return out;
}

RealEnclosure DeterminantResidual(const IntPolynomial& a, const IntPolynomial& b,
                                  const IntPolynomial& c, const IntPolynomial& d,
                                  int power, const RealSource& source, long bits) {
  const RealEnclosure x = source.Enclosure(bits);
  auto form = [&](const IntPolynomial& p, const IntPolynomial& q) {
    // |c_p Q(xi) - c_q P(xi)|
    const RealEnclosure cp = RealEnclosure::FromInteger(p.coefficient(power), bits);
    const RealEnclosure cq = RealEnclosure::FromInteger(q.coefficient(power), bits);
    return Abs(cp * EvaluateEnclosure(q, x) - cq * EvaluateEnclosure(p, x));
  };
  return form(a, b) - form(c, d);
}

bool DeterminantFormsAgree(const IntPolynomial& a, const IntPolynomial& b,
                           const IntPolynomial& c, const IntPolynomial& d, int power) {
  auto form = [&](const IntPolynomial& p, const IntPolynomial& q) {
    return IntPolynomial({p.coefficient(power)}) * q -
           IntPolynomial({q.coefficient(power)}) * p;
  };
  const IntPolynomial left = form(a, b);
  const IntPolynomial right = form(c, d);
  return left == right || left == -right;
}

std::vector<CheckResult> CheckPlaneRun(const SequenceData& seq, int k, double slack,
                                       double identity_tolerance) {
  std::vector<CheckResult> out;
  const long bits = seq.precision_bits;
  if (auto reason = RunGate(seq, k)) {
    out.push_back(Skip("plane_run", k, CheckKind::kAsymptotic, *reason, bits));
    return out;
  }
  const int count = static_cast<int>(seq.records.size());
  const int ell = *Rec(seq, k).ell;
  const RealEnclosure w_hat = *seq.proxies.w_hat;
  const RealEnclosure eps = Slack(seq, slack);
  const RealEnclosure log_hk = LogHeight(seq, k);
  const auto& tau_k = Rec(seq, k).tau;
  const auto& v_prev = Rec(seq, k - 1).v;
  const std::string proxy_note = "w_hat proxy " + Short(w_hat) + " (min tail mu)";

  if (!(w_hat - 1L).IsPositive() || !tau_k || ell - 1 > count) {
    out.push_back(Skip("plane_v", k, CheckKind::kAsymptotic,
                       "tau_k undefined or w_hat proxy not above 1", bits));
  } else {
    const RealEnclosure ratio = LogHeight(seq, ell - 1) / log_hk;
    if (v_prev) {
      out.push_back(Make("plane_v", k, CheckKind::kAsymptotic,
                         (*v_prev / *tau_k - 1L) / (w_hat - 1L) + eps - ratio,
                         "ell=" + std::to_string(ell) + "; " + proxy_note));
    } else {
      out.push_back(Skip("plane_v", k, CheckKind::kAsymptotic, "v_{k-1} undefined", bits));
    }
    if (seq.proxies.w) {
      const RealEnclosure bound = (*seq.proxies.w / *tau_k - 1L) / (w_hat - 1L);
      out.push_back(Make("plane_w", k, CheckKind::kAsymptotic, bound + eps - ratio,
                         "ell=" + std::to_string(ell) + "; w proxy " +
                             Short(*seq.proxies.w) + " (max tail v); " + proxy_note));
      if (ell <= count && Rec(seq, ell).tau) {
        out.push_back(Make("plane_next", k, CheckKind::kAsymptotic,
                           bound * *Rec(seq, ell).tau + eps -
                               LogHeight(seq, ell) / log_hk,
                           "ell=" + std::to_string(ell) + "; " + proxy_note));
      } else {
        out.push_back(Skip("plane_next", k, CheckKind::kAsymptotic,
                           "P_ell or tau_ell missing", bits));
      }
    }
  }

  const IntPolynomial& pk = Rec(seq, k).poly;
  int power = 0;
  for (int i = 0; i <= pk.degree(); ++i) {
    if (abs(pk.coefficient(i)) == Rec(seq, k).height) {
      power = i;
      break;
    }
  }
  const auto& a = Rec(seq, k - 1).poly;
  const auto& c = Rec(seq, ell - 2).poly;
  const auto& d = Rec(seq, ell - 1).poly;
  CheckResult det = Make("plane_determinant", k, CheckKind::kIdentity,
                         DeterminantResidual(a, pk, c, d, power, seq.source(), bits));
  det.tolerance = identity_tolerance;
  det.notes = "run " + std::to_string(k - 1) + ".." + std::to_string(ell - 1) +
              ", coefficient of T^" + std::to_string(power) + "; exact forms " +
              (DeterminantFormsAgree(a, pk, c, d, power) ? "agree" : "differ");
  out.push_back(std::move(det));
  return out;
}

RealEnclosure ThetaMargin(int n, const RealEnclosure& w_hat, const RealEnclosure& tau_k,
                          const RealEnclosure& tau_l, double slack) {
  return RealEnclosure::FromDouble(slack, w_hat.precision()) -
         Theta(n, w_hat, tau_k, tau_l);
}

std::vector<CheckResult> CheckThetaBound(const SequenceData& seq, int k, double slack) {
  std::vector<CheckResult> out;
  const long bits = seq.precision_bits;
  if (auto reason = RunGate(seq, k)) {
    out.push_back(Skip("theta_bound", k, CheckKind::kAsymptotic, *reason, bits));
    return out;
  }
  const int ell = *Rec(seq, k).ell;
  const int count = static_cast<int>(seq.records.size());
  if (ell > count || !Rec(seq, ell).tau || !Rec(seq, k).tau) {
    out.push_back(Skip("theta_bound", k, CheckKind::kAsymptotic,
                       "tau_k or tau_ell undefined", bits));
    return out;
  }
  const RealEnclosure w_hat = *seq.proxies.w_hat;
  CheckResult r = Make("theta_bound", k, CheckKind::kAsymptotic,
                       ThetaMargin(seq.n, w_hat, *Rec(seq, k).tau, *Rec(seq, ell).tau, slack),
                       "ell=" + std::to_string(ell) + "; w_hat proxy " + Short(w_hat));
  if (!(w_hat - (2L * seq.n - 2)).IsPositive()) {
    r.applicable = false;
    r.notes += "; vacuous: w_hat proxy <= 2n-2, the hypothesis of the bound fails";
  }
  out.push_back(std::move(r));
  return out;
}

VerifyReport FullReport(const SequenceData& input, const VerifyOptions& options) {
  if (input.records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "verify needs at least one record");
  }
  SequenceData seq = input;
  DeriveExponents(seq, options.tail_fraction);
  const int n = seq.n;
  const long bits = seq.precision_bits;
  const int count = static_cast<int>(seq.records.size());
  const RealEnclosure eps = Slack(seq, options.slack);

  VerifyReport report;
  report.xi = seq.xi_spec.ToString();
  if (seq.shift != 0) report.xi += " - " + std::to_string(seq.shift);
  report.n = n;
  report.slack = options.slack;
  report.tail_fraction = options.tail_fraction;
  report.proxies = seq.proxies;
  report.notes.push_back(
      "limit exponents are replaced by finite-scale proxies over records k >= " +
      std::to_string(TailStart(seq)) + ": w_hat = min mu, w = max v, tau_bar = max tau");
  auto append = [&](std::vector<CheckResult> part) {
    for (auto& r : part) report.results.push_back(std::move(r));
  };

  append(CheckMonotone(seq));
  for (int k = 2; k <= count; ++k) {
    const auto& tau = Rec(seq, k).tau;
    if (!tau) continue;
    CheckResult lower = Make("tau_lower", k, CheckKind::kExact, *tau - 1L, "tau_k - 1");
    lower.strict = true;
    report.results.push_back(std::move(lower));
    if (seq.proxies.w && seq.proxies.w_hat && seq.proxies.w_hat->IsPositive()) {
      report.results.push_back(Make("tau_upper", k, CheckKind::kAsymptotic,
                                    *seq.proxies.w / *seq.proxies.w_hat + eps - *tau,
                                    "w/w_hat + slack - tau_k"));
    }
  }

  if (n < 2) {
    report.notes.push_back(
        "n = 1: checks on goodness, planes, the combined graph and successive "
        "minima need n >= 2 and were skipped");
  } else {
    const auto& p = seq.proxies;
    if (p.w && p.w_hat) {
      if ((*p.w_hat - static_cast<long>(n)).IsPositive()) {
        report.results.push_back(
            Make("exponent_ratio", std::nullopt, CheckKind::kAsymptotic,
                 (n - 1L) / (*p.w_hat - static_cast<long>(n)) + eps - *p.w / *p.w_hat,
                 "(n-1)/(w_hat-n) + slack - w/w_hat"));
      } else {
        report.results.push_back(Skip("exponent_ratio", std::nullopt,
                                      CheckKind::kAsymptotic,
                                      "w_hat proxy not above n", bits));
      }
    }
    if (p.tau_bar && p.w_hat) {
      report.results.push_back(Make("w_hat_vs_tau_bar", std::nullopt,
                                    CheckKind::kAsymptotic,
                                    *p.tau_bar + (2L * n - 3) + eps - *p.w_hat,
                                    "tau_bar + 2n - 3 + slack - w_hat"));
    }
    append(CheckTauAgainstMu(seq, options.slack));
    for (int k = 2; k <= count; ++k) {
      append(CheckPlaneRun(seq, k, options.slack, options.identity_tolerance));
      append(CheckThetaBound(seq, k, options.slack));
    }

    std::map<int, bool> irreducible;
    auto irr = [&](int k) {
      auto it = irreducible.find(k);
      if (it == irreducible.end()) {
        it = irreducible.emplace(k, IsIrreducibleDegN(Rec(seq, k).poly, n)).first;
      }
      return it->second;
    };
    for (int k = 2; k <= count; ++k) {
      if (!irr(k - 1) || !irr(k)) continue;
      const int dim = SpanDimUnion({MakeVSet(Rec(seq, k - 1).poly, n),
                                    MakeVSet(Rec(seq, k).poly, n)});
      report.results.push_back(
          Make("span_pair", k, CheckKind::kExact,
               RealEnclosure::FromInteger(static_cast<long>(dim - (2 * n - 2)), bits),
               "dim span(V_{k-1} u V_k) - (2n-2) = " + std::to_string(dim - (2 * n - 2))));
    }
    for (int k = 2; k < count; ++k) {
      const auto& r = Rec(seq, k);
      if (!r.good || !*r.good) continue;
      if (!irr(k - 1) || !irr(k) || !irr(k + 1)) {
        report.results.push_back(Skip("span_union", k, CheckKind::kExact,
                                      "a record is not irreducible of degree n", bits));
        continue;
      }
      const int dim = SpanDimUnion({MakeVSet(Rec(seq, k - 1).poly, n),
                                    MakeVSet(r.poly, n),
                                    MakeVSet(Rec(seq, k + 1).poly, n)});
      report.results.push_back(
          Make("span_union", k, CheckKind::kExact,
               RealEnclosure::FromInteger(static_cast<long>(dim - (2 * n - 1)), bits),
               "dim span(V_{k-1} u V_k u V_{k+1}) - (2n-1) = " +
                   std::to_string(dim - (2 * n - 1))));
    }

    std::optional<RealEnclosure> worst_gap;
    for (int k = 2; k <= count; ++k) {
      GraphPoint point;
      try {
        point = MeetingPoint(Rec(seq, k - 1), Rec(seq, k), n);
      } catch (const Error& e) {
        report.results.push_back(
            Skip("omega_identity", k, CheckKind::kIdentity, e.what(), bits));
        continue;
      }
      if (Rec(seq, k).mu) {
        CheckResult r = Make("omega_identity", k, CheckKind::kIdentity,
                             OmegaResidual(*Rec(seq, k).mu, point.omega, n),
                             "Omega_k - (2n-2-mu_k)/((2n-2)(1+mu_k))");
        r.tolerance = options.identity_tolerance;
        if (point.omega_flagged) r.notes += "; Omega_k not certainly negative";
        report.results.push_back(std::move(r));
      }
      if (!options.with_minima) continue;
      try {
        MinimaOptions mo = options.minima;
        mo.precision_bits = bits;
        const MinimaResult minima =
            SuccessiveMinimaExact(seq.source(), n, point.q.mid(), mo);
        const RealEnclosure gap = LowerBoundGap(point, minima.values.back(), n);
        report.results.push_back(Make(
            "lower_bound_gap", k, CheckKind::kReport, gap,
            "-(2n-2)L_{P_{k-1}}(q_k) + (2n^2-5n+2)/(2n-2)(q_k-s_k) - L_{2n-1}(q_k)"));
        if (!worst_gap || worst_gap->mid() < gap.mid()) worst_gap = gap;
      } catch (const Error& e) {
        report.results.push_back(
            Skip("lower_bound_gap", k, CheckKind::kReport, e.what(), bits));
      }
    }
    if (worst_gap) {
      report.notes.push_back("empirical constant for the L_{2n-1}(q_k) lower bound: " +
                             Short(*worst_gap));
    }
  }

  auto& s = report.summary;
  const int tail = TailStart(seq);
  const double threshold = -10 * options.slack;
  for (const auto& r : report.results) {
    ++s.total;
    const Verdict v = VerdictOf(r);
    if (v == Verdict::kNotApplicable) continue;
    ++s.applicable;
    switch (v) {
      case Verdict::kSatisfied: ++s.satisfied; break;
      case Verdict::kViolated: ++s.violated; break;
      case Verdict::kNegative: ++s.negative; break;
      case Verdict::kUndecided: ++s.undecided; break;
      default: ++s.informational; break;
    }
    if (r.kind == CheckKind::kAsymptotic && r.k && *r.k >= tail &&
        r.margin.upper_double() < threshold) {
      ++s.investigate;
    }
  }
  return report;
}

std::string FormatReportJson(const VerifyReport& report) {
  using Json = nlohmann::ordered_json;
  auto ball = [](const std::optional<RealEnclosure>& x) {
    if (!x) return Json(nullptr);
    return Json{{"mid", x->MidString(20)}, {"rad", x->RadString(20)}};
  };
  Json j;
  j["xi"] = report.xi;
  j["n"] = report.n;
  j["slack"] = report.slack;
  j["tail_fraction"] = report.tail_fraction;
  j["proxies"] = {{"tail_begin_k", report.proxies.tail_begin + 1},
                  {"w_hat", ball(report.proxies.w_hat)},
                  {"w", ball(report.proxies.w)},
                  {"tau_bar", ball(report.proxies.tau_bar)}};
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json row;
    row["check_id"] = r.check_id;
    row["k"] = r.k ? Json(*r.k) : Json(nullptr);
    row["margin"] = ball(r.margin);
    row["applicable"] = r.applicable;
    row["verdict"] = VerdictName(VerdictOf(r));
    row["notes"] = r.notes;
    results.push_back(row);
  }
  j["results"] = results;
  const auto& s = report.summary;
  j["summary"] = {{"total", s.total},
                  {"applicable", s.applicable},
                  {"satisfied", s.satisfied},
                  {"violated", s.violated},
                  {"negative", s.negative},
                  {"undecided", s.undecided},
                  {"informational", s.informational},
                  {"investigate", s.investigate}};
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string FormatReportText(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify: xi = " << report.xi << ", n = " << report.n
      << ", slack = " << report.slack << '\n';
  out << "check\tk\tverdict\tmargin\tnotes\n";
  for (const auto& r : report.results) {
    out << r.check_id << '\t' << (r.k ? std::to_string(*r.k) : "-") << '\t'
        << VerdictName(VerdictOf(r)) << '\t'
        << (r.applicable ? Short(r.margin) : "-") << '\t' << r.notes << '\n';
  }
  const auto& s = report.summary;
  out << "summary: " << s.total << " results, " << s.applicable << " applicable, "
      << s.satisfied << " ok, " << s.violated << " violated, " << s.negative
      << " negative margins, " << s.undecided
      << " undecided, " << s.informational << " informational, " << s.investigate
      << " to investigate\n";
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace vlab
