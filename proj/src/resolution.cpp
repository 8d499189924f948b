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

#include "regbound/resolution.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "regbound/errors.hpp"
#include "regbound/gb_engine.hpp"
#include "regbound/groebner.hpp"

namespace regbound {

long Resolution::length() const noexcept {
    for (long k = static_cast<long>(twists.size()) - 1; k >= 0; --k)
        if (!twists[static_cast<std::size_t>(k)].empty()) return k;
    return -1;
}

namespace {

using gb::Lead;
using gb::Term;
using gb::Vec;

// Within each lead component, larger exponent of `var` first.
void schreyer_sort(std::vector<Vec>& g, std::size_t var) {
    std::stable_sort(g.begin(), g.end(), [var](const Vec& a, const Vec& b) {
        if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
        return a.front().mono.exponent(var) > b.front().mono.exponent(var);
    });
}

std::vector<Column> to_columns(const std::vector<Vec>& g, const RingPtr& ring, std::size_t rank) {
    std::vector<Column> out;
    out.reserve(g.size());
    for (const Vec& v : g) out.push_back(from_vec(v, ring, rank));
    return out;
}

}  // namespace

Resolution schreyer_resolution(const GradedPresentation& input) {
    GradedPresentation M = over_base_ring(input);
    const RingPtr& S = M.base();
    const PrimeField& F = S->field();
    const std::size_t nv = S->nvars();

    Resolution res;
    res.ring = S;
    res.twists.push_back(M.row_twists());

    gb::ModuleOrder prev = gb::ModuleOrder::position_over_term(S->order(), M.rows());
    std::vector<Vec> cols;
    for (const Column& c : M.columns()) {
        Vec v = to_vec(c, prev);
        if (!v.empty()) cols.push_back(std::move(v));
    }
    std::vector<Vec> g = gb::groebner(cols, prev, M.row_twists(), F).basis;
    if (g.empty()) return res;

    std::size_t level = 1;
    while (!g.empty()) {
        if (level > nv + 1) fail(ErrorCode::Internal, "resolution longer than the number of variables");
        schreyer_sort(g, std::min(level - 1, nv - 1));
        const std::vector<int> tw_prev = res.twists.back();
        std::vector<int> tw;
        std::vector<Lead> leads;
        for (const Vec& v : g) {
            tw.push_back(gb::vec_degree(v, tw_prev));
            leads.push_back({v.front().mono, v.front().comp});
        }
        res.maps.push_back(to_columns(g, S, tw_prev.size()));
        res.twists.push_back(tw);

        gb::ModuleOrder cur = prev.induced(leads);
        gb::Reducer red(prev, F, tw_prev.size());
        std::vector<Vec> units(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            units[i] = {{Monomial{}, static_cast<std::uint32_t>(i), 1}};
            red.add(&g[i], &units[i]);
        }

        // Minimal Schreyer pairs: for each i, the minimal monomials m_ji over j > i.
        std::vector<std::vector<std::size_t>> by_comp(tw_prev.size());
        for (std::size_t i = 0; i < g.size(); ++i) by_comp[leads[i].comp].push_back(i);
        std::vector<Vec> next;
        for (const auto& group : by_comp) {
            for (std::size_t a = 0; a < group.size(); ++a) {
                const std::size_t i = group[a];
                std::vector<std::pair<Monomial, std::size_t>> cand;
                for (std::size_t b = a + 1; b < group.size(); ++b) {
                    const std::size_t j = group[b];
                    cand.push_back({lcm(leads[i].mono, leads[j].mono) / leads[i].mono, j});
                }
                std::vector<std::pair<Monomial, std::size_t>> keep;
                for (std::size_t x = 0; x < cand.size(); ++x) {
                    bool redundant = false;
                    for (std::size_t y = 0; y < cand.size() && !redundant; ++y) {
                        if (x == y || !cand[y].first.divides(cand[x].first)) continue;
                        redundant = !(cand[y].first == cand[x].first) || y < x;
                    }
                    if (!redundant) keep.push_back(cand[x]);
                }
                for (const auto& [mji, j] : keep) {
                    Monomial mij = lcm(leads[i].mono, leads[j].mono) / leads[j].mono;
                    Vec f = gb::axpy(gb::mul_term(g[i], mji, 1, F), 0, F.neg(1), mij, g[j], 0, prev, F);
                    Vec rep = gb::axpy(Vec{{mji, static_cast<std::uint32_t>(i), 1}}, 0, F.neg(1), mij,
                                       units[j], 0, cur, F);
                    red.reduce(f, &rep, &cur, false, -1);
                    if (!f.empty()) fail(ErrorCode::Internal, "Schreyer pair did not reduce to zero");
                    next.push_back(std::move(rep));
                }
            }
        }
        prev = std::move(cur);
        g = std::move(next);
        ++level;
    }
    return res;
}

Resolution minimalize(Resolution res) {
    const PrimeField& F = res.ring->field();
    const std::size_t L = res.maps.size();
    for (std::size_t k = 1; k <= L; ++k) {
        std::vector<Column>& d = res.maps[k - 1];
        for (;;) {
            // Unit pivot: smallest column, then smallest row.
            std::size_t pi = 0, pj = 0;
            bool found = false;
            for (std::size_t j = 0; j < d.size() && !found; ++j)
                for (std::size_t i = 0; i < d[j].size(); ++i) {
                    const Polynomial& e = d[j][i];
                    if (!e.is_zero() && e.leading().mono.is_one()) {
                        pi = i;
                        pj = j;
                        found = true;
                        break;
                    }
                }
            if (!found) break;
            Coeff u_inv = F.inv(d[pj][pi].leading().coef);
            for (std::size_t j = 0; j < d.size(); ++j) {
                if (j == pj || d[j][pi].is_zero()) continue;
                // column_j -= (d[j][pi] / u) * column_pj
                Polynomial factor = d[j][pi].scaled(u_inv);
                for (std::size_t i = 0; i < d[j].size(); ++i)
                    if (!d[pj][i].is_zero()) d[j][i] -= factor * d[pj][i];
            }
            d.erase(d.begin() + static_cast<std::ptrdiff_t>(pj));
            for (Column& c : d) c.erase(c.begin() + static_cast<std::ptrdiff_t>(pi));
            res.twists[k].erase(res.twists[k].begin() + static_cast<std::ptrdiff_t>(pj));
            res.twists[k - 1].erase(res.twists[k - 1].begin() + static_cast<std::ptrdiff_t>(pi));
            if (k < L)
                for (Column& c : res.maps[k]) c.erase(c.begin() + static_cast<std::ptrdiff_t>(pj));
            if (k >= 2) res.maps[k - 2].erase(res.maps[k - 2].begin() + static_cast<std::ptrdiff_t>(pi));
        }
    }
    while (!res.maps.empty() && res.twists.back().empty()) {
        res.maps.pop_back();
        res.twists.pop_back();
    }
    res.minimal = true;
    return res;
}

LaurentPoly euler_characteristic(const Resolution& res) {
    LaurentPoly chi;
    for (std::size_t k = 0; k < res.twists.size(); ++k)
        for (int t : res.twists[k]) chi += LaurentPoly::monomial(t, k % 2 == 0 ? 1 : -1);
    return chi;
}

BettiTable::BettiTable(const Resolution& res) {
    for (std::size_t k = 0; k < res.twists.size(); ++k)
        for (int t : res.twists[k]) ++entries_[{static_cast<int>(k), t}];
}

long BettiTable::operator()(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::length() const noexcept { return entries_.empty() ? -1 : entries_.rbegin()->first.first; }

ExtDegree BettiTable::top_degree(int i) const {
    ExtDegree d;
    for (const auto& [key, v] : entries_)
        if (key.first == i) d = max(d, ExtDegree(key.second));
    return d;
}

ExtDegree BettiTable::regularity() const {
    ExtDegree r;
    for (const auto& [key, v] : entries_) r = max(r, ExtDegree(key.second - key.first));
    return r;
}

LaurentPoly BettiTable::euler_characteristic() const {
    LaurentPoly chi;
    for (const auto& [key, v] : entries_) chi += LaurentPoly::monomial(key.second, key.first % 2 == 0 ? v : -v);
    return chi;
}

std::string BettiTable::to_string() const {
    if (entries_.empty()) return "(zero module)\n";
    int imax = length();
    int rmin = entries_.begin()->first.second, rmax = rmin;
    for (const auto& [key, v] : entries_) {
        rmin = std::min(rmin, key.second - key.first);
        rmax = std::max(rmax, key.second - key.first);
    }
    std::ostringstream os;
    os << "       ";
    for (int i = 0; i <= imax; ++i) os << std::setw(6) << i;
    os << "\n";
    for (int r = rmin; r <= rmax; ++r) {
        os << std::setw(5) << r << ": ";
        for (int i = 0; i <= imax; ++i) {
            long b = (*this)(i, i + r);
            if (b == 0)
                os << std::setw(6) << "-";
            else
                os << std::setw(6) << b;
        }
        os << "\n";
    }
    return os.str();
}

ModuleInvariants module_invariants(const GradedPresentation& M) {
    ModuleInvariants inv;
    inv.resolution = minimalize(schreyer_resolution(M));
    inv.betti = BettiTable(inv.resolution);
    inv.hilbert = hilbert_data(M);
    if (!(inv.betti.euler_characteristic() == inv.hilbert.numerator))
        fail(ErrorCode::Internal, "Hilbert numerator " + inv.hilbert.numerator.to_string() +
                                      " disagrees with the resolution " + inv.betti.euler_characteristic().to_string());
    return inv;
}

BettiTable betti_table(const GradedPresentation& M) { return BettiTable(minimalize(schreyer_resolution(M))); }

long regularity(const GradedPresentation& M) {
    ExtDegree r = betti_table(M).regularity();
    if (!r.is_finite()) fail(ErrorCode::ZeroModule, "regularity of the zero module");
    return r.value();
}

RingInvariants ring_invariants(const GradedRing& R) {
    GradedPresentation SJ = cyclic_presentation(GradedRing(R.base()), R.quotient());
    ModuleInvariants inv = module_invariants(SJ);
    RingInvariants out;
    out.dim = inv.hilbert.dimension.value();
    out.degree = *inv.hilbert.multiplicity;
    out.reg = inv.betti.regularity().value();
    out.cohen_macaulay = inv.betti.length() == inv.hilbert.codimension;
    return out;
}

}  // namespace regbound
