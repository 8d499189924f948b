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

#ifndef REGBOUND_FIELD_HPP
#define REGBOUND_FIELD_HPP

#include <cstdint>

namespace regbound {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t p) noexcept;

/// Arithmetic in Z/pZ for a prime 2 <= p < 2^31. Elements are canonical
/// representatives in [0, p).
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t characteristic);

    std::uint32_t characteristic() const noexcept { return p_; }

    Coeff reduce(std::int64_t value) const noexcept {
        std::int64_t r = value % static_cast<std::int64_t>(p_);
        return static_cast<Coeff>(r < 0 ? r + p_ : r);
    }

    Coeff add(Coeff a, Coeff b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// Throws on zero.
    Coeff inv(Coeff a) const;
    Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

    /// Symmetric representative in (-p/2, p/2], used for printing.
    std::int64_t lift(Coeff a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

   private:
    std::uint32_t p_;
};

}  // namespace regbound

#endif
