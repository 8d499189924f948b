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

#ifndef REGBOUND_MONOMIAL_HPP
#define REGBOUND_MONOMIAL_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <vector>

namespace regbound {

inline constexpr std::size_t kMaxVariables = 32;

enum class MonomialOrder { GRevLex, Lex };

/// Exponent vector with at most kMaxVariables entries, each below 256.
/// Unused trailing slots stay zero, so comparisons need not know the
/// number of ring variables.
class Monomial {
   public:
    constexpr Monomial() noexcept = default;

    /// Throws AlgebraError(Overflow) if an exponent exceeds 255 or too many entries are given.
    static Monomial from_exponents(std::span<const int> exponents);
    static Monomial variable(std::size_t index, int power = 1);

    int exponent(std::size_t var) const noexcept { return exps_[var]; }
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Throws AlgebraError(Overflow) on exponent overflow.
    Monomial operator*(const Monomial& other) const;
    /// Requires other.divides(*this).
    Monomial operator/(const Monomial& other) const noexcept;

    friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
    friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
    bool coprime(const Monomial& other) const noexcept {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    /// Returns >0 if a > b, <0 if a < b, 0 if equal.
    friend int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
        if (order == MonomialOrder::GRevLex) {
            if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
            // Little-endian words: the highest variable index is the most
            // significant byte, and a smaller exponent there wins.
            for (int w = kWords - 1; w >= 0; --w) {
                std::uint64_t x = a.word(w), y = b.word(w);
                if (x != y) return x < y ? 1 : -1;
            }
            return 0;
        }
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i] ? 1 : -1;
        return 0;
    }

    /// Compares a*sa with b*sb without forming the products (exponents may exceed 255 in the sum).
    friend int compare_shifted(const Monomial& a, const Monomial& sa, const Monomial& b, const Monomial& sb,
                               MonomialOrder order) noexcept;

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(degree_);
        for (int w = 0; w < kWords; ++w) h = h * 0x9E3779B97F4A7C15ull ^ word(w);
        return h;
    }

   private:
    static constexpr int kWords = kMaxVariables / 8;
    static_assert(std::endian::native == std::endian::little, "monomial word comparison assumes little endian");

    std::uint64_t word(int w) const noexcept {
        std::uint64_t x;
        std::memcpy(&x, exps_.data() + 8 * w, 8);
        return x;
    }

    alignas(8) std::array<std::uint8_t, kMaxVariables> exps_{};
    std::int32_t degree_ = 0;
};

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;
int compare_shifted(const Monomial& a, const Monomial& sa, const Monomial& b, const Monomial& sb,
                    MonomialOrder order) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
Monomial gcd(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of total degree d in nvars variables, in descending order for `order`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d, MonomialOrder order = MonomialOrder::GRevLex);

}  // namespace regbound

#endif
