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

#ifndef REGBOUND_RING_HPP
#define REGBOUND_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "regbound/field.hpp"
#include "regbound/monomial.hpp"

namespace regbound {

/// Standard graded polynomial ring F_p[x_1..x_k], every variable of degree 1.
class PolynomialRing {
   public:
    PolynomialRing(PrimeField field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::GRevLex);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    MonomialOrder order() const noexcept { return order_; }
    std::optional<std::size_t> variable_index(const std::string& name) const;

    /// Structural equality: same characteristic, variable names and order.
    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) noexcept;

   private:
    PrimeField field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::GRevLex);

/// x0, x1, ... style ring used by generators and tests.
RingPtr make_ring(std::uint32_t characteristic, std::size_t nvars, MonomialOrder order = MonomialOrder::GRevLex);

inline bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || (a && b && *a == *b); }

}  // namespace regbound

#endif
