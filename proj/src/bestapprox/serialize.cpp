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

#include "vlab/bestapprox/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "vlab/error.hpp"

namespace vlab {
namespace {

using Json = nlohmann::ordered_json;

Json Integer(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

mpz_class ReadInteger(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::kParseError, "bad integer " + j.dump());
    }
    return v;
  }
  throw Error(ErrorCode::kParseError, "expected an integer, got " + j.dump());
}

Json Ball(const std::optional<RealEnclosure>& x) {
  if (!x) return Json(nullptr);
  return Json{{"mid", x->MidString(30)}, {"rad", x->RadString(30)}};
}

std::string Short(const std::optional<RealEnclosure>& x) {
  if (!x) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x->mid());
  return buf;
}

const Json& Field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::kParseError, std::string("missing field ") + key);
  }
  return *it;
}

}  // namespace

std::string SequenceToJson(const SequenceData& seq) {
  Json j;
  j["xi"] = {{"kind", seq.xi_spec.kind_name()},
             {"text", seq.xi_spec.ToString()}};
  j["n"] = seq.n;
  j["precision_bits"] = seq.precision_bits;
  j["height_limit"] = Integer(seq.search_height_limit);
  j["shift"] = seq.shift;
  Json records = Json::array();
  for (const auto& r : seq.records) {
    Json coeffs = Json::array();
    for (int i = 0; i <= r.poly.degree(); ++i) coeffs.push_back(Integer(r.poly.coefficient(i)));
    Json rec;
    rec["k"] = r.k;
    rec["coeffs"] = coeffs;
    rec["height"] = Integer(r.height);
    rec["log_abs_value"] = Ball(r.log_abs_value);
    rec["mu"] = Ball(r.mu);
    rec["v"] = Ball(r.v);
    rec["tau"] = Ball(r.tau);
    rec["good"] = r.good ? Json(*r.good) : Json(nullptr);
    rec["ell"] = r.ell ? Json(*r.ell) : Json(nullptr);
    rec["ell_truncated"] = r.ell_truncated;
    records.push_back(rec);
  }
  j["records"] = records;
  return j.dump(2) + "\n";
}

SequenceData SequenceFromJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("sequence JSON: ") + e.what());
  }
  try {
    SequenceData seq;
    seq.xi_spec = RealSpec::Parse(Field(Field(j, "xi"), "text").get<std::string>());
    seq.n = Field(j, "n").get<int>();
    if (seq.n < 1) throw Error(ErrorCode::kParseError, "n must be positive");
    seq.precision_bits = Field(j, "precision_bits").get<long>();
    if (seq.precision_bits < 16) {
      throw Error(ErrorCode::kParseError, "precision_bits below 16");
    }
    seq.search_height_limit = ReadInteger(Field(j, "height_limit"));
    if (j.contains("shift")) seq.shift = j["shift"].get<long>();
    const RealSource source = seq.source();
    for (const auto& rec : Field(j, "records")) {
      BestApproxRecord r;
      std::vector<mpz_class> coeffs;
      for (const auto& c : Field(rec, "coeffs")) coeffs.push_back(ReadInteger(c));
      r.poly = IntPolynomial(std::move(coeffs));
      if (r.poly.IsZero()) throw Error(ErrorCode::kParseError, "zero polynomial record");
      if (r.poly.degree() > seq.n) {
        throw Error(ErrorCode::kParseError,
                    r.poly.ToString() + " has degree above n");
      }
      r.height = r.poly.Height();
      if (rec.contains("height") && ReadInteger(rec["height"]) != r.height) {
        throw Error(ErrorCode::kParseError,
                    "stored height disagrees with " + r.poly.ToString());
      }
      r.log_abs_value = CertifiedLogAbs(r.poly, source, seq.precision_bits);
      const Json& stored = Field(rec, "log_abs_value");
      const RealEnclosure given = RealEnclosure::FromMidRad(
          Field(stored, "mid").get<std::string>(),
          Field(stored, "rad").get<std::string>(), seq.precision_bits);
      if (given.CertainlyLess(r.log_abs_value) || r.log_abs_value.CertainlyLess(given)) {
        throw Error(ErrorCode::kParseError,
                    "stored log|P(xi)| of " + r.poly.ToString() +
                        " disagrees with the recomputed value");
      }
      if (rec.contains("good") && !rec["good"].is_null()) r.good = rec["good"].get<bool>();
      if (rec.contains("ell") && !rec["ell"].is_null()) r.ell = rec["ell"].get<int>();
      if (rec.contains("ell_truncated")) r.ell_truncated = rec["ell_truncated"].get<bool>();
      seq.records.push_back(std::move(r));
    }
    DeriveExponents(seq);
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("sequence JSON: ") + e.what());
  }
}

std::string FormatSequenceText(const SequenceData& seq) {
  std::ostringstream out;
  out << "xi = " << seq.xi_spec.ToString();
  if (seq.shift != 0) out << " - " << seq.shift;
  out << ", n = " << seq.n << ", H <= " << seq.search_height_limit.get_str()
      << ", " << seq.records.size() << " records\n";
  out << "k\tH_k\tlog|P_k(xi)|\tmu_k\tv_k\ttau_k\tgood\tell\tP_k\n";
  for (const auto& r : seq.records) {
    out << r.k << '\t' << r.height.get_str() << '\t' << Short(r.log_abs_value)
        << '\t' << Short(r.mu) << '\t' << Short(r.v) << '\t' << Short(r.tau) << '\t'
        << (r.good ? (*r.good ? "yes" : "no") : "-") << '\t';
    if (r.ell) {
      out << *r.ell << (r.ell_truncated ? "+" : "");
    } else {
      out << '-';
    }
    out << '\t' << r.poly.ToString() << '\n';
  }
  const auto& p = seq.proxies;
  out << "tail proxies from k = " << p.tail_begin + 1 << ": w_hat ~ " << Short(p.w_hat)
      << ", w ~ " << Short(p.w) << ", tau_bar ~ " << Short(p.tau_bar) << '\n';
  return out.str();
}

std::string FormatSequenceCsv(const SequenceData& seq) {
  std::ostringstream out;
  out << "k,height,log_abs_value,mu,v,tau,good,ell,ell_truncated,coeffs\n";
  auto cell = [](const std::optional<RealEnclosure>& x) {
    return x ? x->MidString(20) : std::string();
  };
  for (const auto& r : seq.records) {
    out << r.k << ',' << r.height.get_str() << ',' << cell(r.log_abs_value) << ','
        << cell(r.mu) << ',' << cell(r.v) << ',' << cell(r.tau) << ','
        << (r.good ? (*r.good ? "1" : "0") : "") << ','
        << (r.ell ? std::to_string(*r.ell) : "") << ',' << (r.ell_truncated ? 1 : 0)
        << ",\"";
    for (int i = 0; i <= r.poly.degree(); ++i) {
      if (i) out << ' ';
      out << r.poly.coefficient(i).get_str();
    }
    out << "\"\n";
  }
  return out.str();
}

}  // namespace vlab
