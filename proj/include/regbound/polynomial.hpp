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

#ifndef REGBOUND_POLYNOMIAL_HPP
#define REGBOUND_POLYNOMIAL_HPP

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "regbound/ext_degree.hpp"
#include "regbound/ring.hpp"

namespace regbound {

struct PolyTerm {
    Monomial mono;
    Coeff coef;
};

/// Sparse polynomial over a PolynomialRing. Terms are kept strictly
/// descending in the ring's monomial order with no zero coefficients.
class Polynomial {
   public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Accepts terms in any order; combines duplicates and drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<PolyTerm> terms);
    static Polynomial constant(RingPtr ring, std::int64_t value);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, const Monomial& mono, Coeff coef);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Leading term; requires a nonzero polynomial.
    const PolyTerm& leading() const { return terms_.front(); }

    ExtDegree degree() const noexcept;
    bool is_homogeneous() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    Polynomial scaled(Coeff c) const;
    Polynomial times_term(const Monomial& m, Coeff c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

   private:
    void check_ring(const Polynomial& other) const;
    Polynomial& add_scaled(const Polynomial& rhs, Coeff c);

    RingPtr ring_;
    std::vector<PolyTerm> terms_;
};

enum class PolyOp { Add, Mul, Scale };

/// Single entry point for the three basic operations; Scale multiplies f by the
/// constant term of g. Throws AlgebraError(RingMismatch) on different rings.
Polynomial poly_arithmetic(const Polynomial& f, const Polynomial& g, PolyOp op);

/// Ring homomorphism defined by x_i -> images[i]; images live in the target ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

}  // namespace regbound

#endif
