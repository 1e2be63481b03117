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

#ifndef VLAB_NUMERIC_ALGEBRAIC_HPP_
#define VLAB_NUMERIC_ALGEBRAIC_HPP_

#include <optional>

#include "vlab/int_polynomial.hpp"
#include "vlab/numeric/real_spec.hpp"

namespace vlab {

// Exact decision of P(value) == 0 for sources whose value is algebraic with
// a known annihilating polynomial (rationals, finite continued fractions,
// k-th roots). nullopt for decimal digits and named constants.
std::optional<bool> VanishesAt(const IntPolynomial& p, const RealSource& source);

}  // namespace vlab

#endif  // VLAB_NUMERIC_ALGEBRAIC_HPP_
