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

#ifndef VLAB_BESTAPPROX_SERIALIZE_HPP_
#define VLAB_BESTAPPROX_SERIALIZE_HPP_

#include <string>

#include "vlab/bestapprox/records.hpp"

namespace vlab {

// JSON document with the spec, n, precision, search limit, shift and one
// object per record. Enclosures are written as {"mid", "rad"} decimal strings.
std::string SequenceToJson(const SequenceData& seq);

// Inverse of SequenceToJson. log|P_k(xi)| is recomputed at the stored
// precision and must overlap the stored value; mu, v, tau and the proxies
// are derived again. Throws kParseError on malformed or inconsistent input.
SequenceData SequenceFromJson(const std::string& text);

std::string FormatSequenceText(const SequenceData& seq);
std::string FormatSequenceCsv(const SequenceData& seq);

}  // namespace vlab

#endif  // VLAB_BESTAPPROX_SERIALIZE_HPP_
