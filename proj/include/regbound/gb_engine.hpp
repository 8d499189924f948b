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

#ifndef REGBOUND_GB_ENGINE_HPP
#define REGBOUND_GB_ENGINE_HPP

// Low-level module arithmetic used by the Groebner, resolution and module
// operations code. Vectors are sparse term lists kept sorted (descending) in a
// module order; the public wrappers in groebner.hpp convert to and from
// Polynomial columns.

#include <cstdint>
#include <span>
#include <vector>

#include "regbound/field.hpp"
#include "regbound/monomial.hpp"

namespace regbound::gb {

struct Term {
    Monomial mono;
    std::uint32_t comp;
    Coeff coef;
};

using Vec = std::vector<Term>;

struct Lead {
    Monomial mono;
    std::uint32_t comp;
};

/// Total order on the terms m*e_i of a free module. Either position-over-term
/// (lower component index is larger, then the ring order) or the Schreyer
/// order induced from another module order by the lead terms of a generating
/// set: m*e_i > m'*e_j iff lead(m*g_i) > lead(m'*g_j), ties broken by the
/// smaller index.
class ModuleOrder {
   public:
    static ModuleOrder position_over_term(MonomialOrder order, std::size_t rank);

    /// Schreyer order on the free module whose i-th basis vector maps to an
    /// element with lead term leads[i] (with respect to *this).
    ModuleOrder induced(std::span<const Lead> leads) const;

    std::size_t rank() const noexcept { return base_.size(); }
    MonomialOrder monomial_order() const noexcept { return order_; }
    std::size_t depth() const noexcept { return depth_; }

    int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const noexcept {
        if (base_[ca] != base_[cb]) return base_[ca] < base_[cb] ? 1 : -1;
        int c = depth_ == 0 ? regbound::compare(a, b, order_)
                            : regbound::compare_shifted(a, shift_[ca], b, shift_[cb], order_);
        if (c != 0) return c;
        for (std::size_t k = 0; k < depth_; ++k) {
            std::uint32_t x = tail_[ca * depth_ + k], y = tail_[cb * depth_ + k];
            if (x != y) return x < y ? 1 : -1;
        }
        return 0;
    }

    int compare(const Term& a, const Term& b) const noexcept { return compare(a.mono, a.comp, b.mono, b.comp); }

   private:
    MonomialOrder order_ = MonomialOrder::GRevLex;
    std::size_t depth_ = 0;
    std::vector<std::uint32_t> base_;
    std::vector<Monomial> shift_;
    std::vector<std::uint32_t> tail_;  // rank * depth, row-major
};

/// Sorts by `order` and merges duplicate terms; drops zeros.
void normalize(Vec& v, const ModuleOrder& order, const PrimeField& F);

/// Returns c * m * g (order preserving).
Vec mul_term(const Vec& g, const Monomial& m, Coeff c, const PrimeField& F);

/// Returns f[fs..] + c * m * g[gs..].
Vec axpy(const Vec& f, std::size_t fs, Coeff c, const Monomial& m, const Vec& g, std::size_t gs,
         const ModuleOrder& order, const PrimeField& F);

/// Makes the leading coefficient one; scales `rep` by the same factor.
void make_monic(Vec& v, Vec* rep, const PrimeField& F);

int vec_degree(const Vec& v, std::span<const int> twists);

/// Divides by a list of module elements (leads must be monic).
class Reducer {
   public:
    Reducer(const ModuleOrder& order, const PrimeField& F, std::size_t rank)
        : order_(&order), F_(&F), by_comp_(rank) {}

    /// Elements must stay alive while the reducer is used. `rep` may be null.
    void add(const Vec* g, const Vec* rep = nullptr);
    std::size_t size() const noexcept { return elems_.size(); }

    /// Index of the first element whose lead divides m*e_comp, or -1.
    long find(const Monomial& m, std::uint32_t comp, long skip = -1) const noexcept;

    /// Reduces f. With full = false only leading terms are reduced. When `rep`
    /// is given it is updated in parallel using `rep_order`. Each quotient
    /// step can be reported to `on_step(element index, monomial, coefficient)`.
    template <class OnStep>
    void reduce(Vec& f, Vec* rep, const ModuleOrder* rep_order, bool full, long skip, OnStep&& on_step) const;

    void reduce(Vec& f, Vec* rep = nullptr, const ModuleOrder* rep_order = nullptr, bool full = true,
                long skip = -1) const {
        reduce(f, rep, rep_order, full, skip, [](std::size_t, const Monomial&, Coeff) {});
    }

   private:
    struct Entry {
        const Vec* vec;
        const Vec* rep;
    };
    const ModuleOrder* order_;
    const PrimeField* F_;
    std::vector<Entry> elems_;
    std::vector<std::vector<std::size_t>> by_comp_;
};

template <class OnStep>
void Reducer::reduce(Vec& f, Vec* rep, const ModuleOrder* rep_order, bool full, long skip, OnStep&& on_step) const {
    Vec done;
    std::size_t pos = 0;
    while (pos < f.size()) {
        const Term t = f[pos];
        long idx = find(t.mono, t.comp, skip);
        if (idx < 0) {
            if (!full) break;
            done.push_back(t);
            ++pos;
            continue;
        }
        const Entry& e = elems_[static_cast<std::size_t>(idx)];
        Monomial m = t.mono / e.vec->front().mono;
        Coeff c = F_->neg(t.coef);  // leads are monic
        f = axpy(f, pos + 1, c, m, *e.vec, 1, *order_, *F_);
        pos = 0;
        if (rep && e.rep) *rep = axpy(*rep, 0, c, m, *e.rep, 0, *rep_order, *F_);
        on_step(static_cast<std::size_t>(idx), m, t.coef);
    }
    if (!done.empty()) {
        done.insert(done.end(), f.begin() + static_cast<std::ptrdiff_t>(pos), f.end());
        f = std::move(done);
    } else if (pos > 0) {
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(pos));
    }
}

struct GroebnerOptions {
    /// Track each basis element as a combination of the inputs and collect
    /// the syzygies among the inputs.
    bool track = false;
    bool autoreduce = true;
};

struct GroebnerResult {
    std::vector<Vec> basis;
    /// rep[k] expresses basis[k] in the free module on the inputs (POT order).
    std::vector<Vec> reps;
    /// Generators of the kernel of (free module on inputs) -> ambient.
    std::vector<Vec> syzygies;
    /// input_minimal[i]: input i is not in the span of the lower-degree part
    /// and of the earlier inputs of its own degree.
    std::vector<bool> input_minimal;
};

/// Graded Buchberger for homogeneous elements of a free module with the
/// given twists. Pairs are processed by increasing lcm degree, then by
/// component, then by creation order; inputs of a degree are added after
/// the pairs of that degree.
GroebnerResult groebner(const std::vector<Vec>& inputs, const ModuleOrder& order, std::span<const int> twists,
                        const PrimeField& F, const GroebnerOptions& options = {});

}  // namespace regbound::gb

#endif
