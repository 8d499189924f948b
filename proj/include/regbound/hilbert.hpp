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

#ifndef REGBOUND_HILBERT_HPP
#define REGBOUND_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regbound/ext_degree.hpp"
#include "regbound/gb_engine.hpp"
#include "regbound/presentation.hpp"

namespace regbound {

/// Integer Laurent polynomial sum_k coeffs[k] t^(low + k).
class LaurentPoly {
   public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int exponent, std::int64_t coef = 1);
    static LaurentPoly from_coefficients(int low, std::vector<std::int64_t> coeffs);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coefficient(int exponent) const noexcept;
    std::int64_t at_one() const noexcept;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly shifted(int by) const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
        return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.low_ == b.low_);
    }

    /// Exact division by (1 - t); requires value at one to vanish.
    LaurentPoly divided_by_one_minus_t() const;

    std::string to_string() const;

   private:
    void trim();
    int low_ = 0;
    std::vector<std::int64_t> coeffs_;
};

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/I for a monomial ideal I.
LaurentPoly monomial_ideal_numerator(std::size_t nvars, std::vector<Monomial> gens);

/// Numerator for G/L where G has the given twists and L is the monomial
/// submodule spanned by the given leads.
LaurentPoly monomial_module_numerator(std::size_t nvars, std::span<const int> twists, std::span<const gb::Lead> leads);

struct HilbertData {
    LaurentPoly numerator;
    std::size_t nvars = 0;
    ExtDegree dimension;  // -inf for the zero module
    long codimension = 0;
    std::optional<std::int64_t> multiplicity;
    std::optional<std::int64_t> length;  // finite-length modules only
    LaurentPoly reduced;                 // numerator / (1-t)^codimension

    bool is_zero_module() const noexcept { return numerator.is_zero(); }
    /// Value of the Hilbert function in degree d.
    std::int64_t function(int d) const;
};

HilbertData hilbert_from_numerator(LaurentPoly numerator, std::size_t nvars);

/// Hilbert data of the cokernel; over S/J the quotient generators are included.
HilbertData hilbert_data(const GradedPresentation& M);

/// Same for G / <gens> in a free module over the base polynomial ring.
HilbertData hilbert_data(const RingPtr& ring, std::span<const int> twists, const std::vector<Column>& gens);

}  // namespace regbound

#endif
