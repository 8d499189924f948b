// Copyright 2026 The regbound Authors
//
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

#include "regbound/ring.hpp"

#include <set>

#include "regbound/errors.hpp"

namespace regbound {

PolynomialRing::PolynomialRing(PrimeField field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
    if (names_.empty()) fail(ErrorCode::Precondition, "a ring needs at least one variable");
    if (names_.size() > kMaxVariables)
        fail(ErrorCode::Unsupported, "at most " + std::to_string(kMaxVariables) + " variables are supported");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) fail(ErrorCode::Precondition, "duplicate variable name");
}

std::optional<std::size_t> PolynomialRing::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool operator==(const PolynomialRing& a, const PolynomialRing& b) noexcept {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.names_ == b.names_;
}

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> names, MonomialOrder order) {
    return std::make_shared<const PolynomialRing>(PrimeField(characteristic), std::move(names), order);
}

RingPtr make_ring(std::uint32_t characteristic, std::size_t nvars, MonomialOrder order) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(characteristic, std::move(names), order);
}

}  // namespace regbound
