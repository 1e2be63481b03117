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

#ifndef VLAB_BESTAPPROX_RECORDS_HPP_
#define VLAB_BESTAPPROX_RECORDS_HPP_

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "vlab/int_polynomial.hpp"
#include "vlab/numeric/enclosure.hpp"
#include "vlab/numeric/real_spec.hpp"

namespace vlab {

// One best approximation polynomial P_k with its derived exponent data.
struct BestApproxRecord {
  int k = 0;
  IntPolynomial poly;
  mpz_class height;
  RealEnclosure log_abs_value;  // log |P_k(xi)|
  // -log|P_{k-1}(xi)| / log H_k; needs k >= 2 and H_k > 1.
  std::optional<RealEnclosure> mu;
  // -log|P_k(xi)| / log H_k; needs H_k > 1.
  std::optional<RealEnclosure> v;
  // log H_k / log H_{k-1}; needs k >= 2 and H_{k-1} > 1.
  std::optional<RealEnclosure> tau;
  // Filled by the linear algebra layer; absent when the window is missing.
  std::optional<bool> good;
  std::optional<int> ell;
  bool ell_truncated = false;
};

// Finite-scale stand-ins for the limit exponents, taken over the tail of the
// record list. They are estimates, never limits.
struct ExponentProxies {
  std::size_t tail_begin = 0;  // index into records
  std::optional<RealEnclosure> w_hat;    // min mu over the tail
  std::optional<RealEnclosure> w;        // max v over the tail
  std::optional<RealEnclosure> tau_bar;  // max tau over the tail
};

struct SequenceData {
  RealSpec xi_spec;
  int n = 1;
  // Integer subtracted from xi before the search (0 unless the sequence was
  // moved to the unit interval).
  long shift = 0;
  std::vector<BestApproxRecord> records;
  mpz_class search_height_limit;
  long precision_bits = kDefaultPrecisionBits;
  ExponentProxies proxies;

  RealSource source() const { return RealSource(xi_spec, shift); }
};

// Certified log|P(xi)| starting at `precision_bits` and doubling while the
// value enclosure still contains zero. Throws kExactZeroDetected or
// kPrecisionExhausted.
RealEnclosure CertifiedLogAbs(const IntPolynomial& p, const RealSource& source,
                              long precision_bits,
                              const PrecisionPolicy& policy = {});

// Fills mu, v, tau of every record and the tail proxies. `tail_fraction` of
// the records (at least one) form the tail.
void DeriveExponents(SequenceData& seq, double tail_fraction = 0.5);

}  // namespace vlab

#endif  // VLAB_BESTAPPROX_RECORDS_HPP_
