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

#include "regbound/gb_engine.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <numeric>

#include "regbound/errors.hpp"

namespace regbound::gb {

ModuleOrder ModuleOrder::position_over_term(MonomialOrder order, std::size_t rank) {
    ModuleOrder o;
    o.order_ = order;
    o.base_.resize(rank);
    std::iota(o.base_.begin(), o.base_.end(), 0u);
    o.shift_.assign(rank, Monomial{});
    return o;
}

ModuleOrder ModuleOrder::induced(std::span<const Lead> leads) const {
    ModuleOrder o;
    o.order_ = order_;
    o.depth_ = depth_ + 1;
    o.base_.reserve(leads.size());
    o.shift_.reserve(leads.size());
    o.tail_.reserve(leads.size() * o.depth_);
    for (std::size_t i = 0; i < leads.size(); ++i) {
        const Lead& l = leads[i];
        o.base_.push_back(base_[l.comp]);
        o.shift_.push_back(l.mono * shift_[l.comp]);
        for (std::size_t k = 0; k < depth_; ++k) o.tail_.push_back(tail_[l.comp * depth_ + k]);
        o.tail_.push_back(static_cast<std::uint32_t>(i));
    }
    return o;
}

void normalize(Vec& v, const ModuleOrder& order, const PrimeField& F) {
    std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return order.compare(a, b) > 0; });
    Vec out;
    out.reserve(v.size());
    for (const Term& t : v) {
        if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono)
            out.back().coef = F.add(out.back().coef, t.coef);
        else
            out.push_back(t);
        if (out.back().coef == 0) out.pop_back();
    }
    v = std::move(out);
}

Vec mul_term(const Vec& g, const Monomial& m, Coeff c, const PrimeField& F) {
    Vec out;
    if (c == 0) return out;
    out.reserve(g.size());
    for (const Term& t : g) out.push_back({t.mono * m, t.comp, F.mul(t.coef, c)});
    return out;
}

Vec axpy(const Vec& f, std::size_t fs, Coeff c, const Monomial& m, const Vec& g, std::size_t gs,
         const ModuleOrder& order, const PrimeField& F) {
    Vec out;
    out.reserve(f.size() - fs + g.size() - gs);
    std::size_t i = fs, j = gs;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].mono * m;
        int cmp = order.compare(f[i].mono, f[i].comp, gm, g[j].comp);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, g[j].comp, F.mul(c, g[j].coef)});
            ++j;
        } else {
            Coeff s = F.add(f[i].coef, F.mul(c, g[j].coef));
            if (s != 0) out.push_back({gm, g[j].comp, s});
            ++i;
            ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * m, g[j].comp, F.mul(c, g[j].coef)});
    return out;
}

void make_monic(Vec& v, Vec* rep, const PrimeField& F) {
    if (v.empty() || v.front().coef == 1) return;
    Coeff inv = F.inv(v.front().coef);
    for (Term& t : v) t.coef = F.mul(t.coef, inv);
    if (rep)
        for (Term& t : *rep) t.coef = F.mul(t.coef, inv);
}

int vec_degree(const Vec& v, std::span<const int> twists) {
    if (v.empty()) fail(ErrorCode::Precondition, "degree of the zero vector");
    return v.front().mono.degree() + twists[v.front().comp];
}

void Reducer::add(const Vec* g, const Vec* rep) {
    if (g->empty()) fail(ErrorCode::Precondition, "zero reducer");
    by_comp_[g->front().comp].push_back(elems_.size());
    elems_.push_back({g, rep});
}

long Reducer::find(const Monomial& m, std::uint32_t comp, long skip) const noexcept {
    for (std::size_t idx : by_comp_[comp]) {
        if (static_cast<long>(idx) == skip) continue;
        if (elems_[idx].vec->front().mono.divides(m)) return static_cast<long>(idx);
    }
    return -1;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    int degree;
    std::size_t serial;
};

class Buchberger {
   public:
    Buchberger(const ModuleOrder& order, std::span<const int> twists, const PrimeField& F, std::size_t ninputs,
               const GroebnerOptions& opt)
        : order_(order),
          rep_order_(ModuleOrder::position_over_term(order.monomial_order(), ninputs)),
          twists_(twists),
          F_(F),
          opt_(opt) {}

    GroebnerResult run(const std::vector<Vec>& inputs) {
        GroebnerResult res;
        res.input_minimal.assign(inputs.size(), false);
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (inputs[i].empty()) {
                if (opt_.track) res.syzygies.push_back({{Monomial{}, static_cast<std::uint32_t>(i), 1}});
            } else {
                idx.push_back(i);
            }
        }
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return vec_degree(inputs[a], twists_) < vec_degree(inputs[b], twists_);
        });
        std::size_t next = 0;
        while (next < idx.size() || !pairs_.empty()) {
            int d = next < idx.size() ? vec_degree(inputs[idx[next]], twists_) : INT_MAX;
            for (const Pair& p : pairs_) d = std::min(d, p.degree);

            std::vector<Pair> batch;
            std::erase_if(pairs_, [&](const Pair& p) {
                if (p.degree != d) return false;
                batch.push_back(p);
                return true;
            });
            std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) {
                if (a.comp != b.comp) return a.comp < b.comp;
                return a.serial < b.serial;
            });
            for (const Pair& p : batch) {
                Vec rep;
                Vec s = spoly(p, opt_.track ? &rep : nullptr);
                reduce_and_insert(std::move(s), std::move(rep), res);
            }
            while (next < idx.size() && vec_degree(inputs[idx[next]], twists_) == d) {
                std::size_t i = idx[next++];
                Vec rep;
                if (opt_.track) rep.push_back({Monomial{}, static_cast<std::uint32_t>(i), 1});
                res.input_minimal[i] = reduce_and_insert(inputs[i], std::move(rep), res);
            }
        }
        if (opt_.autoreduce) autoreduce();
        for (auto& b : basis_) res.basis.push_back(std::move(*b));
        if (opt_.track)
            for (auto& r : reps_) res.reps.push_back(std::move(*r));
        return res;
    }

   private:
    Vec spoly(const Pair& p, Vec* rep) const {
        const Vec& a = *basis_[p.i];
        const Vec& b = *basis_[p.j];
        Monomial ma = p.lcm / a.front().mono, mb = p.lcm / b.front().mono;
        Vec s = axpy(mul_term(a, ma, 1, F_), 0, F_.neg(1), mb, b, 0, order_, F_);
        if (rep) *rep = axpy(mul_term(*reps_[p.i], ma, 1, F_), 0, F_.neg(1), mb, *reps_[p.j], 0, rep_order_, F_);
        return s;
    }

    bool reduce_and_insert(Vec f, Vec rep, GroebnerResult& res) {
        reducer().reduce(f, opt_.track ? &rep : nullptr, &rep_order_, true, -1);
        if (f.empty()) {
            if (opt_.track && !rep.empty()) res.syzygies.push_back(std::move(rep));
            return false;
        }
        make_monic(f, opt_.track ? &rep : nullptr, F_);
        insert(std::move(f), std::move(rep));
        return true;
    }

    const Reducer& reducer() {
        if (!reducer_) {
            reducer_ = std::make_unique<Reducer>(order_, F_, order_.rank());
            for (std::size_t k = 0; k < basis_.size(); ++k)
                reducer_->add(basis_[k].get(), opt_.track ? reps_[k].get() : nullptr);
        }
        return *reducer_;
    }

    void insert(Vec f, Vec rep) {
        const std::size_t t = basis_.size();
        const Monomial lt = f.front().mono;
        const std::uint32_t comp = f.front().comp;
        const int tw = twists_[comp];

        // Chain criterion on the old pairs.
        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.comp != comp || !lt.divides(p.lcm)) return false;
            Monomial li = lcm(basis_[p.i]->front().mono, lt), lj = lcm(basis_[p.j]->front().mono, lt);
            return !(li == p.lcm) && !(lj == p.lcm);
        });

        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            if (basis_[i]->front().comp != comp) continue;
            Monomial l = lcm(basis_[i]->front().mono, lt);
            fresh.push_back({i, t, l, comp, l.degree() + tw, 0});
        }
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && (!(fresh[b].lcm == fresh[a].lcm) || b < a)) drop[a] = true;
            }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            fresh[a].serial = serial_++;
            pairs_.push_back(fresh[a]);
        }

        basis_.push_back(std::make_unique<Vec>(std::move(f)));
        reps_.push_back(std::make_unique<Vec>(std::move(rep)));
        if (reducer_) reducer_->add(basis_.back().get(), opt_.track ? reps_.back().get() : nullptr);
    }

    void autoreduce() {
        const Reducer& r = reducer();
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            Vec g = *basis_[k];
            Vec rep;
            if (opt_.track) rep = *reps_[k];
            r.reduce(g, opt_.track ? &rep : nullptr, &rep_order_, true, static_cast<long>(k));
            *basis_[k] = std::move(g);
            if (opt_.track) *reps_[k] = std::move(rep);
        }
    }

    const ModuleOrder& order_;
    ModuleOrder rep_order_;
    std::span<const int> twists_;
    const PrimeField& F_;
    GroebnerOptions opt_;
    std::vector<std::unique_ptr<Vec>> basis_;
    std::vector<std::unique_ptr<Vec>> reps_;
    std::vector<Pair> pairs_;
    std::size_t serial_ = 0;
    std::unique_ptr<Reducer> reducer_;
};

}  // namespace

GroebnerResult groebner(const std::vector<Vec>& inputs, const ModuleOrder& order, std::span<const int> twists,
                        const PrimeField& F, const GroebnerOptions& options) {
    if (twists.size() != order.rank()) fail(ErrorCode::Precondition, "twist count does not match module rank");
    for (const Vec& v : inputs)
        for (const Term& t : v)
            if (t.comp >= order.rank()) fail(ErrorCode::Precondition, "component out of range");
    Buchberger b(order, twists, F, inputs.size(), options);
    return b.run(inputs);
}

}  // namespace regbound::gb
