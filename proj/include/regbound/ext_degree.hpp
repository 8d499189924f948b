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

#ifndef REGBOUND_EXT_DEGREE_HPP
#define REGBOUND_EXT_DEGREE_HPP

#include <cassert>
#include <compare>
#include <ostream>
#include <string>

namespace regbound {

/// An integer degree extended by -infinity (degree of zero, reg of the zero module,
/// a_0 of a module without torsion, ...).
class ExtDegree {
   public:
    constexpr ExtDegree() noexcept = default;  // -infinity
    constexpr ExtDegree(long value) noexcept : finite_(true), value_(value) {}

    static constexpr ExtDegree neg_inf() noexcept { return ExtDegree(); }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr bool is_neg_inf() const noexcept { return !finite_; }

    constexpr long value() const {
        assert(finite_);
        return value_;
    }

    constexpr long value_or(long fallback) const noexcept { return finite_ ? value_ : fallback; }

    friend constexpr bool operator==(const ExtDegree& a, const ExtDegree& b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(const ExtDegree& a, const ExtDegree& b) noexcept {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

    friend constexpr ExtDegree operator+(const ExtDegree& a, long shift) noexcept {
        return a.finite_ ? ExtDegree(a.value_ + shift) : a;
    }
    friend constexpr ExtDegree operator-(const ExtDegree& a, long shift) noexcept { return a + (-shift); }

    std::string to_string() const { return finite_ ? std::to_string(value_) : std::string("-inf"); }

    friend std::ostream& operator<<(std::ostream& os, const ExtDegree& d) { return os << d.to_string(); }

   private:
    bool finite_ = false;
    long value_ = 0;
};

constexpr ExtDegree max(ExtDegree a, ExtDegree b) noexcept { return a < b ? b : a; }

}  // namespace regbound

#endif
