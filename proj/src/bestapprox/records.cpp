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

#include "vlab/bestapprox/records.hpp"

#include <algorithm>
#include <cmath>

#include "vlab/error.hpp"
#include "vlab/numeric/algebraic.hpp"

namespace vlab {

RealEnclosure CertifiedLogAbs(const IntPolynomial& p, const RealSource& source,
                              long precision_bits,
                              const PrecisionPolicy& policy) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroPolynomial, "log of the zero polynomial");
  }
  const long max_bits = std::max(precision_bits, source.MaxPrecision(policy));
  long bits = precision_bits;
  while (true) {
    const RealEnclosure value = Abs(EvaluateEnclosure(p, source.Enclosure(bits)));
    if (!value.ContainsZero()) return Log(value);
    if (VanishesAt(p, source).value_or(false)) {
      throw Error(ErrorCode::kExactZeroDetected,
                  p.ToString() + " vanishes at " + source.spec().ToString());
    }
    if (bits >= max_bits) break;
    bits = std::min(bits * 2, max_bits);
  }
  throw Error(ErrorCode::kPrecisionExhausted,
              "|" + p.ToString() + "| not separated from zero at " +
                  std::to_string(max_bits) + " bits");
}

void DeriveExponents(SequenceData& seq, double tail_fraction) {
  auto& recs = seq.records;
  const long bits = seq.precision_bits;
  std::vector<std::optional<RealEnclosure>> log_height(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (recs[i].height > 1) {
      log_height[i] = Log(RealEnclosure::FromInteger(recs[i].height, bits));
    }
  }
  for (std::size_t i = 0; i < recs.size(); ++i) {
    auto& r = recs[i];
    r.k = static_cast<int>(i) + 1;
    r.mu.reset();
    r.v.reset();
    r.tau.reset();
    if (log_height[i]) r.v = -r.log_abs_value / *log_height[i];
    if (i == 0) continue;
    if (log_height[i]) r.mu = -recs[i - 1].log_abs_value / *log_height[i];
    if (log_height[i] && log_height[i - 1]) {
      r.tau = *log_height[i] / *log_height[i - 1];
    }
  }

  ExponentProxies proxies;
  const std::size_t count = recs.size();
  if (count > 0) {
    const double fraction = std::clamp(tail_fraction, 0.0, 1.0);
    std::size_t tail = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(count)));
    tail = std::clamp<std::size_t>(tail, 1, count);
    proxies.tail_begin = count - tail;
  }
  for (std::size_t i = proxies.tail_begin; i < count; ++i) {
    const auto& r = recs[i];
    if (r.mu) proxies.w_hat = proxies.w_hat ? Min(*proxies.w_hat, *r.mu) : *r.mu;
    if (r.v) proxies.w = proxies.w ? Max(*proxies.w, *r.v) : *r.v;
    if (r.tau) {
      proxies.tau_bar = proxies.tau_bar ? Max(*proxies.tau_bar, *r.tau) : *r.tau;
    }
  }
  seq.proxies = std::move(proxies);
}

}  // namespace vlab
