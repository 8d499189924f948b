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

#include "regbound/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "regbound/errors.hpp"
#include "regbound/groebner.hpp"

namespace regbound {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coef) {
    LaurentPoly p;
    p.low_ = exponent;
    p.coeffs_ = {coef};
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<std::int64_t> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t z = 0;
    while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
    if (z > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(z));
        low_ += static_cast<int>(z);
    }
    if (coeffs_.empty()) low_ = 0;
}

std::int64_t LaurentPoly::coefficient(int e) const noexcept {
    if (e < low_ || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::int64_t LaurentPoly::at_one() const noexcept {
    std::int64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    int lo = std::min(low_, rhs.low_), hi = std::max(high(), rhs.high());
    std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = coefficient(e) + rhs.coefficient(e);
    low_ = lo;
    coeffs_ = std::move(c);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    LaurentPoly neg = rhs;
    for (auto& c : neg.coeffs_) c = -c;
    return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += by;
    return p;
}

LaurentPoly LaurentPoly::divided_by_one_minus_t() const {
    if (at_one() != 0) fail(ErrorCode::Precondition, "polynomial is not divisible by 1 - t");
    // N = (1 - t) Q  =>  q_k = sum_{i <= k} n_i
    std::vector<std::int64_t> q;
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        run += coeffs_[k];
        q.push_back(run);
    }
    return from_coefficients(low_, std::move(q));
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        int e = low_ + static_cast<int>(k);
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

void minimalize_monomials(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return compare(a, b, MonomialOrder::Lex) > 0;
    });
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    gens = std::move(out);
}

LaurentPoly numerator_rec(std::size_t nvars, std::vector<Monomial> gens) {
    minimalize_monomials(gens);
    if (gens.empty()) return LaurentPoly::monomial(0);
    if (gens.front().is_one()) return {};
    // Pairwise coprime generators: the numerator factors.
    std::vector<int> count(nvars, 0);
    bool coprime = true;
    for (const Monomial& g : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g.exponent(v) > 0 && ++count[v] > 1) coprime = false;
    if (coprime) {
        LaurentPoly r = LaurentPoly::monomial(0);
        for (const Monomial& g : gens) r = r * (LaurentPoly::monomial(0) - LaurentPoly::monomial(g.degree()));
        return r;
    }
    std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    int e = 0;
    for (const Monomial& g : gens) {
        int x = g.exponent(pivot);
        if (x > 0 && (e == 0 || x < e)) e = x;
    }
    Monomial p = Monomial::variable(pivot, e);
    // N(S/I) = N(S/(I + p)) + t^e N(S/(I : p))
    std::vector<Monomial> plus = gens;
    plus.push_back(p);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& g : gens) colon.push_back(g / gcd(g, p));
    return numerator_rec(nvars, std::move(plus)) + numerator_rec(nvars, std::move(colon)).shifted(e);
}

}  // namespace

LaurentPoly monomial_ideal_numerator(std::size_t nvars, std::vector<Monomial> gens) {
    return numerator_rec(nvars, std::move(gens));
}

LaurentPoly monomial_module_numerator(std::size_t nvars, std::span<const int> twists, std::span<const gb::Lead> leads) {
    std::vector<std::vector<Monomial>> per(twists.size());
    for (const gb::Lead& l : leads) per.at(l.comp).push_back(l.mono);
    LaurentPoly n;
    for (std::size_t i = 0; i < twists.size(); ++i) n += monomial_ideal_numerator(nvars, std::move(per[i])).shifted(twists[i]);
    return n;
}

HilbertData hilbert_from_numerator(LaurentPoly numerator, std::size_t nvars) {
    HilbertData h;
    h.nvars = nvars;
    h.numerator = numerator;
    if (numerator.is_zero()) return h;
    LaurentPoly q = numerator;
    long c = 0;
    while (q.at_one() == 0) {
        q = q.divided_by_one_minus_t();
        ++c;
    }
    if (c > static_cast<long>(nvars)) fail(ErrorCode::Precondition, "numerator vanishes to order above the variable count");
    h.codimension = c;
    h.dimension = ExtDegree(static_cast<long>(nvars) - c);
    h.multiplicity = q.at_one();
    if (c == static_cast<long>(nvars)) h.length = q.at_one();
    h.reduced = std::move(q);
    return h;
}

std::int64_t HilbertData::function(int d) const {
    // coefficient of t^d in N(t) / (1-t)^p = sum_k n_k C(d - k + p - 1, p - 1)
    if (numerator.is_zero()) return 0;
    std::int64_t s = 0;
    const long p = static_cast<long>(nvars);
    for (int k = numerator.low(); k <= numerator.high() && k <= d; ++k) {
        std::int64_t nk = numerator.coefficient(k);
        if (nk == 0) continue;
        long top = d - k + p - 1;
        std::int64_t binom = 1;
        if (p == 0) {
            binom = d == k ? 1 : 0;
        } else {
            for (long r = 1; r <= p - 1; ++r) binom = binom * (top - (p - 1) + r) / r;
        }
        s += nk * binom;
    }
    return s;
}

HilbertData hilbert_data(const RingPtr& ring, std::span<const int> twists, const std::vector<Column>& gens) {
    std::vector<Column> nz;
    for (const Column& g : gens)
        if (element_degree(g, twists).is_finite()) nz.push_back(g);
    GroebnerBasis G = buchberger(ring, twists, nz);
    std::vector<gb::Lead> leads;
    for (const gb::Vec& v : G.vecs()) leads.push_back({v.front().mono, v.front().comp});
    return hilbert_from_numerator(monomial_module_numerator(ring->nvars(), twists, leads), ring->nvars());
}

HilbertData hilbert_data(const GradedPresentation& M) {
    GradedPresentation B = over_base_ring(M);
    return hilbert_data(B.base(), B.row_twists(), B.columns());
}

}  // namespace regbound
