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

#include "regbound/modops.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "regbound/errors.hpp"
#include "regbound/gb_engine.hpp"
#include "regbound/groebner.hpp"

namespace regbound {

namespace {

std::vector<Column> nonzero_columns(const std::vector<Column>& cols) {
    std::vector<Column> out;
    for (const Column& c : cols)
        if (std::any_of(c.begin(), c.end(), [](const Polynomial& p) { return !p.is_zero(); })) out.push_back(c);
    return out;
}

// Indices of the candidates that form a minimal homogeneous generating set of
// (<base> + <candidates>) / <base>.
std::vector<std::size_t> minimal_over(const RingPtr& ring, std::span<const int> twists, const std::vector<Column>& base,
                                      const std::vector<Column>& candidates) {
    auto order = gb::ModuleOrder::position_over_term(ring->order(), twists.size());
    std::vector<gb::Vec> in;
    for (const Column& c : base) in.push_back(to_vec(c, order));
    for (const Column& c : candidates) in.push_back(to_vec(c, order));
    auto res = gb::groebner(in, order, twists, ring->field(), {false, false});
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (res.input_minimal[base.size() + k]) keep.push_back(k);
    return keep;
}

std::vector<int> degrees_of(const std::vector<Column>& cols, std::span<const int> twists) {
    std::vector<int> d;
    for (const Column& c : cols) d.push_back(static_cast<int>(element_degree(c, twists).value()));
    return d;
}

void require_linear(const GradedPresentation& M, const Polynomial& l) {
    if (!same_ring(l.ring(), M.base())) fail(ErrorCode::RingMismatch, "linear form over another ring");
    if (l.is_zero() || !l.is_homogeneous() || l.degree() != ExtDegree(1))
        fail(ErrorCode::Precondition, "expected a nonzero linear form, got " + l.to_string());
}

LaurentPoly numerator_of(const RingPtr& ring, std::span<const int> twists, const std::vector<Column>& gens) {
    return hilbert_data(ring, twists, gens).numerator;
}

}  // namespace

GradedPresentation quotient_by_linear(const GradedPresentation& M, const Polynomial& l) {
    require_linear(M, l);
    std::vector<Column> cols = M.columns();
    std::vector<std::optional<int>> hints(M.column_degrees().begin(), M.column_degrees().end());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Column c(M.rows(), Polynomial(M.base()));
        c[i] = l;
        cols.push_back(std::move(c));
        hints.push_back(M.row_twists()[i] + 1);
    }
    return validate_presentation(M.ring(), M.row_twists(), std::move(cols), std::move(hints));
}

std::vector<Column> colon_module(const RingPtr& ring, std::span<const int> twists, const std::vector<Column>& gens,
                                 const std::vector<Polynomial>& forms) {
    const std::size_t n = twists.size(), r = forms.size();
    if (r == 0) fail(ErrorCode::Precondition, "colon by an empty set of forms");
    for (const Polynomial& f : forms)
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != forms.front().degree())
            fail(ErrorCode::Precondition, "colon forms must be nonzero of one degree");
    std::vector<int> big;
    for (std::size_t k = 0; k < r; ++k) big.insert(big.end(), twists.begin(), twists.end());
    std::vector<Column> block;
    for (std::size_t i = 0; i < n; ++i) {
        Column c(n * r, Polynomial(ring));
        for (std::size_t k = 0; k < r; ++k) c[k * n + i] = forms[k];
        block.push_back(std::move(c));
    }
    std::vector<Column> nz = nonzero_columns(gens);
    for (std::size_t k = 0; k < r; ++k)
        for (const Column& g : nz) {
            Column c(n * r, Polynomial(ring));
            for (std::size_t i = 0; i < n; ++i) c[k * n + i] = g[i];
            block.push_back(std::move(c));
        }
    std::vector<Column> out;
    for (const Column& s : syzygies(ring, big, block)) {
        Column u(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
        auto lead = std::find_if(u.begin(), u.end(), [](const Polynomial& p) { return !p.is_zero(); });
        if (lead == u.end()) continue;
        Coeff inv = ring->field().inv(lead->leading().coef);
        for (Polynomial& p : u) p = p.scaled(inv);
        out.push_back(std::move(u));
    }
    return out;
}

ColonKernel colon_kernel(const GradedPresentation& M, const Polynomial& l) {
    require_linear(M, l);
    GradedPresentation B = over_base_ring(M);
    const RingPtr& S = B.base();
    std::vector<Column> N = nonzero_columns(B.columns());
    std::vector<Column> U = colon_module(S, B.row_twists(), N, {l});
    ColonKernel out;
    for (std::size_t k : minimal_over(S, B.row_twists(), N, U)) out.generators.push_back(U[k]);
    if (out.generators.empty()) {
        out.hilbert = hilbert_from_numerator({}, S->nvars());
        out.length = 0;
        return out;
    }
    std::vector<int> kt = degrees_of(out.generators, B.row_twists());
    std::vector<Column> all = out.generators;
    all.insert(all.end(), N.begin(), N.end());
    std::vector<Column> rels;
    for (const Column& s : syzygies(S, B.row_twists(), all)) {
        Column r(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(out.generators.size()));
        rels.push_back(std::move(r));
    }
    out.presentation = validate_presentation(M.ring(), kt, nonzero_columns(rels));
    LaurentPoly nm = numerator_of(S, B.row_twists(), N);
    LaurentPoly nq = numerator_of(S, B.row_twists(), all);
    out.hilbert = hilbert_from_numerator(nm - nq, S->nvars());
    if (out.hilbert.is_zero_module() || out.hilbert.dimension == ExtDegree(0)) out.length = out.hilbert.length.value_or(0);
    return out;
}

long H0Profile::at(int mu) const {
    auto it = h0_by_degree.find(mu);
    return it == h0_by_degree.end() ? 0 : it->second;
}

H0Profile h0_from_numerators(const LaurentPoly& nm, const LaurentPoly& nsat, std::size_t nvars) {
    LaurentPoly q = nm - nsat;
    for (std::size_t k = 0; k < nvars; ++k) q = q.divided_by_one_minus_t();
    H0Profile p;
    for (int e = q.low(); !q.is_zero() && e <= q.high(); ++e) {
        std::int64_t v = q.coefficient(e);
        if (v < 0) fail(ErrorCode::Internal, "negative local cohomology dimension");
        if (v > 0) p.h0_by_degree[e] = v;
    }
    if (!p.h0_by_degree.empty()) {
        p.indeg = ExtDegree(p.h0_by_degree.begin()->first);
        p.a0 = ExtDegree(p.h0_by_degree.rbegin()->first);
        p.a_span = p.a0.value() - p.indeg.value() + 1;
    }
    return p;
}

H0Result h0_profile(const GradedPresentation& M) {
    GradedPresentation B = over_base_ring(M);
    const RingPtr& S = B.base();
    std::vector<Column> N = nonzero_columns(B.columns());
    const LaurentPoly nm = numerator_of(S, B.row_twists(), N);
    if (nm.is_zero()) fail(ErrorCode::ZeroModule, "local cohomology of the zero module");
    std::vector<Polynomial> vars;
    for (std::size_t v = 0; v < S->nvars(); ++v) vars.push_back(Polynomial::variable(S, v));

    std::vector<Column> cur = N, added;
    LaurentPoly ncur = nm;
    for (;;) {
        std::vector<Column> U = colon_module(S, B.row_twists(), cur, vars);
        std::vector<Column> fresh;
        for (std::size_t k : minimal_over(S, B.row_twists(), cur, U)) fresh.push_back(U[k]);
        std::vector<Column> next = cur;
        next.insert(next.end(), fresh.begin(), fresh.end());
        LaurentPoly nnext = numerator_of(S, B.row_twists(), next);
        if (nnext == ncur) break;
        added.insert(added.end(), fresh.begin(), fresh.end());
        cur = std::move(next);
        ncur = std::move(nnext);
    }
    std::vector<Column> cols = M.columns();
    std::vector<std::optional<int>> hints(M.column_degrees().begin(), M.column_degrees().end());
    for (const Column& c : added) {
        cols.push_back(c);
        hints.push_back(static_cast<int>(element_degree(c, M.row_twists()).value()));
    }
    return {h0_from_numerators(nm, ncur, S->nvars()),
            validate_presentation(M.ring(), M.row_twists(), std::move(cols), std::move(hints))};
}

namespace {

void multisets(std::size_t n, int size, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
    if (size == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        multisets(n, size - 1, i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GradedPresentation sym_power(const GradedPresentation& M, int l) {
    if (l < 1) fail(ErrorCode::Precondition, "symmetric power index must be positive");
    const std::size_t n = M.rows();
    std::vector<std::vector<std::size_t>> gens, lower;
    std::vector<std::size_t> cur;
    multisets(n, l, 0, cur, gens);
    multisets(n, l - 1, 0, cur, lower);
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<int> twists;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        index[gens[k]] = k;
        int t = 0;
        for (std::size_t i : gens[k]) t += M.row_twists()[i];
        twists.push_back(t);
    }
    std::vector<Column> cols;
    std::vector<std::optional<int>> hints;
    for (std::size_t j = 0; j < M.cols(); ++j)
        for (const auto& beta : lower) {
            Column c(gens.size(), Polynomial(M.base()));
            for (std::size_t i = 0; i < n; ++i) {
                if (M.entry(i, j).is_zero()) continue;
                std::vector<std::size_t> g = beta;
                g.insert(std::upper_bound(g.begin(), g.end(), i), i);
                c[index.at(g)] += M.entry(i, j);
            }
            int shift = 0;
            for (std::size_t i : beta) shift += M.row_twists()[i];
            cols.push_back(std::move(c));
            hints.push_back(M.column_degrees()[j] + shift);
        }
    return validate_presentation(M.ring(), std::move(twists), std::move(cols), std::move(hints));
}

std::vector<Polynomial> fitting_ideal_0(const GradedPresentation& M) {
    const std::size_t n = M.rows(), m = M.cols();
    std::vector<Polynomial> out;
    if (m < n) return out;
    if (m > 63) fail(ErrorCode::Unsupported, "too many relations for minor expansion");
    // det of rows 0..|S|-1 against the column set S, expanding along the last row
    std::unordered_map<std::uint64_t, Polynomial> memo;
    auto det = [&](auto&& self, std::uint64_t mask) -> Polynomial {
        if (mask == 0) return Polynomial::constant(M.base(), 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        Polynomial acc(M.base());
        std::size_t pos = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(mask >> j & 1)) continue;
            const Polynomial& e = M.entry(row, j);
            if (!e.is_zero()) {
                Polynomial term = e * self(self, mask & ~(std::uint64_t{1} << j));
                if ((pos + row) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
        std::uint64_t mask = 0;
        for (std::size_t j : pick) mask |= std::uint64_t{1} << j;
        Polynomial d = det(det, mask);
        if (!d.is_zero() && std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
        std::size_t k = n;
        while (k > 0 && pick[k - 1] == m - n + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t t = k; t < n; ++t) pick[t] = pick[t - 1] + 1;
    }
    return out;
}

std::optional<GradedPresentation> minimal_presentation(const GradedPresentation& M) {
    const PrimeField& F = M.base()->field();
    std::vector<Column> cols = M.columns();
    std::vector<int> degs = M.column_degrees();
    std::vector<int> twists = M.row_twists();
    for (;;) {
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t j = 0; j < cols.size() && !found; ++j)
            for (std::size_t i = 0; i < cols[j].size(); ++i)
                if (!cols[j][i].is_zero() && cols[j][i].leading().mono.is_one()) {
                    pi = i;
                    pj = j;
                    found = true;
                    break;
                }
        if (!found) break;
        Coeff u_inv = F.inv(cols[pj][pi].leading().coef);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j == pj || cols[j][pi].is_zero()) continue;
            Polynomial factor = cols[j][pi].scaled(u_inv);
            for (std::size_t i = 0; i < cols[j].size(); ++i)
                if (!cols[pj][i].is_zero()) cols[j][i] -= factor * cols[pj][i];
        }
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pj));
        degs.erase(degs.begin() + static_cast<std::ptrdiff_t>(pj));
        for (Column& c : cols) c.erase(c.begin() + static_cast<std::ptrdiff_t>(pi));
        twists.erase(twists.begin() + static_cast<std::ptrdiff_t>(pi));
    }
    if (twists.empty()) return std::nullopt;
    std::vector<Column> JG;
    for (std::size_t i = 0; i < twists.size(); ++i)
        for (const Polynomial& f : M.ring().quotient()) {
            Column c(twists.size(), Polynomial(M.base()));
            c[i] = f;
            JG.push_back(std::move(c));
        }
    std::vector<Column> nz;
    std::vector<std::optional<int>> hints;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (std::any_of(cols[j].begin(), cols[j].end(), [](const Polynomial& p) { return !p.is_zero(); })) {
            nz.push_back(cols[j]);
            hints.push_back(degs[j]);
        }
    std::vector<Column> kept;
    std::vector<std::optional<int>> kept_hints;
    for (std::size_t k : minimal_over(M.base(), twists, JG, nz)) {
        kept.push_back(nz[k]);
        kept_hints.push_back(hints[k]);
    }
    return validate_presentation(M.ring(), std::move(twists), std::move(kept), std::move(kept_hints));
}

PresentationDegrees presentation_degrees(const GradedPresentation& M) {
    PresentationDegrees d;
    if (auto mp = minimal_presentation(M)) {
        for (int a : mp->row_twists()) d.b0 = max(d.b0, ExtDegree(a));
        for (int b : mp->column_degrees()) d.b1 = max(d.b1, ExtDegree(b));
    }
    const auto& J = M.ring().quotient();
    if (!J.empty()) {
        std::vector<Column> gens;
        for (const Polynomial& f : J) gens.push_back({f});
        const int zero = 0;
        ExtDegree top;
        for (std::size_t k : minimal_over(M.base(), std::span<const int>(&zero, 1), {}, gens))
            top = max(top, J[k].degree());
        d.h = std::max(1L, top.value_or(1));
    }
    return d;
}

}  // namespace regbound
