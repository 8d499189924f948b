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

#include "regbound/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "regbound/errors.hpp"

namespace regbound {

namespace {

void sort_terms(std::vector<PolyTerm>& terms, MonomialOrder order) {
    std::sort(terms.begin(), terms.end(),
              [order](const PolyTerm& a, const PolyTerm& b) { return compare(a.mono, b.mono, order) > 0; });
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<PolyTerm> terms) {
    const PrimeField& F = ring->field();
    sort_terms(terms, ring->order());
    Polynomial p(std::move(ring));
    // zero sums are removed only after a run of equal monomials ends
    for (auto& t : terms) {
        Coeff c = t.coef % F.characteristic();
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coef = F.add(p.terms_.back().coef, c);
        else
            p.terms_.push_back({t.mono, c});
    }
    std::erase_if(p.terms_, [](const PolyTerm& t) { return t.coef == 0; });
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
    Coeff c = ring->field().reduce(value);
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial(), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) fail(ErrorCode::UnknownVariable, "variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(index), 1});
    return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& mono, Coeff coef) {
    Coeff c = coef % ring->field().characteristic();
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({mono, c});
    return p;
}

ExtDegree Polynomial::degree() const noexcept {
    if (terms_.empty()) return ExtDegree::neg_inf();
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

void Polynomial::check_ring(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) fail(ErrorCode::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = ring_->field().neg(t.coef);
    return r;
}

Polynomial& Polynomial::add_scaled(const Polynomial& rhs, Coeff c) {
    check_ring(rhs);
    const PrimeField& F = ring_->field();
    MonomialOrder order = ring_->order();
    std::vector<PolyTerm> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        int cmp = i == terms_.size()        ? -1
                  : j == rhs.terms_.size() ? 1
                                           : compare(terms_[i].mono, rhs.terms_[j].mono, order);
        if (cmp > 0) {
            out.push_back(terms_[i++]);
        } else if (cmp < 0) {
            Coeff v = F.mul(rhs.terms_[j].coef, c);
            if (v != 0) out.push_back({rhs.terms_[j].mono, v});
            ++j;
        } else {
            Coeff v = F.add(terms_[i].coef, F.mul(rhs.terms_[j].coef, c));
            if (v != 0) out.push_back({terms_[i].mono, v});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) { return add_scaled(rhs, 1); }

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return add_scaled(rhs, ring_->field().neg(1)); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check_ring(rhs);
    const PrimeField& F = lhs.ring_->field();
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_)
        for (const auto& b : rhs.terms_) {
            Coeff& slot = acc[a.mono * b.mono];
            slot = F.add(slot, F.mul(a.coef, b.coef));
        }
    std::vector<PolyTerm> terms;
    terms.reserve(acc.size());
    for (const auto& [m, c] : acc)
        if (c != 0) terms.push_back({m, c});
    sort_terms(terms, lhs.ring_->order());
    Polynomial r(lhs.ring_);
    r.terms_ = std::move(terms);
    return r;
}

Polynomial Polynomial::scaled(Coeff c) const {
    const PrimeField& F = ring_->field();
    c %= F.characteristic();
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = F.mul(t.coef, c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
    const PrimeField& F = ring_->field();
    c %= F.characteristic();
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    // multiplication by a monomial preserves any monomial order
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coef, c)});
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const PrimeField& F = ring_->field();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::int64_t c = F.lift(t.coef);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t mag = c < 0 ? -c : c;
        bool need_star = false;
        if (mag != 1 || t.mono.is_one()) {
            os << mag;
            need_star = true;
        }
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            int e = t.mono.exponent(v);
            if (e == 0) continue;
            if (need_star) os << "*";
            os << ring_->names()[v];
            if (e > 1) os << "^" << e;
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

Polynomial poly_arithmetic(const Polynomial& f, const Polynomial& g, PolyOp op) {
    if (!same_ring(f.ring(), g.ring())) fail(ErrorCode::RingMismatch, "polynomials live in different rings");
    switch (op) {
        case PolyOp::Add: return f + g;
        case PolyOp::Mul: return f * g;
        case PolyOp::Scale:
            if (!g.is_constant()) fail(ErrorCode::Precondition, "scale factor must be a constant");
            return f.scaled(g.is_zero() ? 0 : g.leading().coef);
    }
    return f;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    if (images.size() != f.ring()->nvars()) fail(ErrorCode::Precondition, "substitution needs one image per variable");
    RingPtr target = images.empty() ? f.ring() : images[0].ring();
    Polynomial result(target);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, 1).scaled(t.coef);
        for (std::size_t v = 0; v < images.size(); ++v)
            for (int e = 0; e < t.mono.exponent(v); ++e) prod = prod * images[v];
        result += prod;
    }
    return result;
}

}  // namespace regbound
