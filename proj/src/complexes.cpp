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

#include "regbound/complexes.hpp"

#include <algorithm>

#include "regbound/errors.hpp"

namespace regbound {

namespace {

void multisets(std::size_t n, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        multisets(n, size, i, cur, out);
        cur.pop_back();
    }
}

void subsets(std::size_t m, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t j = start; j < m; ++j) {
        cur.push_back(j);
        subsets(m, size, j + 1, cur, out);
        cur.pop_back();
    }
}

ComplexTerm make_term(const GradedPresentation& M, ComplexTerm::Kind kind, int s, int l, int sigma) {
    const std::size_t n = M.rows(), m = M.cols();
    ComplexTerm t{kind, s, kind == ComplexTerm::Kind::L ? s : s + 1, {}, {}, {}};
    std::size_t msize = kind == ComplexTerm::Kind::L ? static_cast<std::size_t>(l - s) : static_cast<std::size_t>(s - l);
    std::size_t ssize = kind == ComplexTerm::Kind::L ? static_cast<std::size_t>(s) : n + static_cast<std::size_t>(s);
    std::vector<std::vector<std::size_t>> ms, ss;
    std::vector<std::size_t> cur;
    multisets(n, msize, 0, cur, ms);
    if (ssize <= m) subsets(m, ssize, 0, cur, ss);
    for (const auto& a : ms)
        for (const auto& J : ss) {
            int asum = 0, bsum = 0;
            for (std::size_t i : a) asum += M.row_twists()[i];
            for (std::size_t j : J) bsum += M.column_degrees()[j];
            t.multisets.push_back(a);
            t.subsets.push_back(J);
            t.twists.push_back(kind == ComplexTerm::Kind::L ? asum + bsum : bsum - asum - sigma);
        }
    return t;
}

// Determinant of the rows x cols submatrix, columns in increasing order.
Polynomial minor(const GradedPresentation& M, const std::vector<std::size_t>& cols) {
    const std::size_t k = cols.size();
    if (k == 0) return Polynomial::constant(M.base(), 1);
    Polynomial acc(M.base());
    const std::size_t row = k - 1;
    for (std::size_t pos = 0; pos < k; ++pos) {
        const Polynomial& e = M.entry(row, cols[pos]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> rest = cols;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        Polynomial t = e * minor(M, rest);
        if ((pos + row) % 2 == 0)
            acc += t;
        else
            acc -= t;
    }
    return acc;
}

}  // namespace

ExtDegree ComplexTerm::max_twist() const {
    ExtDegree d;
    for (int t : twists) d = max(d, ExtDegree(t));
    return d;
}

const ComplexTerm* ComplexTerms::at_position(int position) const {
    for (const ComplexTerm& t : terms)
        if (t.position == position) return &t;
    return nullptr;
}

int ComplexTerms::top_position() const { return terms.empty() ? -1 : terms.back().position; }

ComplexTerms complex_terms(const GradedPresentation& M, int l) {
    if (l < 0) fail(ErrorCode::Precondition, "symmetric power index must be nonnegative");
    ComplexTerms ct;
    ct.l = l;
    ct.n = M.rows();
    ct.m = M.cols();
    for (int a : M.row_twists()) ct.sigma += a;
    for (int s = 0; s <= l; ++s) ct.terms.push_back(make_term(M, ComplexTerm::Kind::L, s, l, ct.sigma));
    const int top = static_cast<int>(ct.m) - static_cast<int>(ct.n);
    for (int s = l; s <= top; ++s) ct.terms.push_back(make_term(M, ComplexTerm::Kind::N, s, l, ct.sigma));
    return ct;
}

Resolution explicit_differentials(const GradedPresentation& M, int l) {
    if (l != 0 && l != 1) fail(ErrorCode::Unsupported, "explicit differentials exist only for l = 0 and l = 1");
    if (M.cols() < M.rows()) fail(ErrorCode::Precondition, "explicit differentials need m >= n");
    const RingPtr& S = M.base();
    ComplexTerms ct = complex_terms(M, l);
    Resolution C;
    C.ring = S;
    for (const ComplexTerm& t : ct.terms) C.twists.push_back(t.twists);

    // Index of the basis element (multiset, subset) inside a term.
    auto locate = [](const ComplexTerm& t, const std::vector<std::size_t>& a, const std::vector<std::size_t>& J) {
        for (std::size_t k = 0; k < t.rank(); ++k)
            if (t.multisets[k] == a && t.subsets[k] == J) return k;
        fail(ErrorCode::Internal, "basis element not found");
    };

    for (std::size_t pos = 1; pos < ct.terms.size(); ++pos) {
        const ComplexTerm& src = ct.terms[pos];
        const ComplexTerm& tgt = ct.terms[pos - 1];
        std::vector<Column> cols;
        for (std::size_t k = 0; k < src.rank(); ++k) {
            Column c(tgt.rank(), Polynomial(S));
            const auto& J = src.subsets[k];
            const auto& alpha = src.multisets[k];
            if (src.kind == ComplexTerm::Kind::L) {
                // nu = phi : F -> G
                const std::size_t j = J.front();
                for (std::size_t i = 0; i < M.rows(); ++i) c[i] = M.entry(i, j);
            } else if (tgt.kind == ComplexTerm::Kind::L) {
                if (l == 0) {
                    c[0] = minor(M, J);
                } else {
                    for (std::size_t kk = 0; kk < J.size(); ++kk) {
                        std::vector<std::size_t> rest = J;
                        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(kk));
                        Polynomial d = minor(M, rest);
                        c[locate(tgt, {}, {J[kk]})] = kk % 2 == 0 ? d : -d;
                    }
                }
            } else {
                // contraction: y^alpha (x) f_J -> sum phi_{i,j_k} y^{alpha - e_i} (x) f_{J - j_k}
                std::vector<std::size_t> distinct = alpha;
                distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                for (std::size_t i : distinct) {
                    std::vector<std::size_t> lower = alpha;
                    lower.erase(std::find(lower.begin(), lower.end(), i));
                    for (std::size_t kk = 0; kk < J.size(); ++kk) {
                        const Polynomial& e = M.entry(i, J[kk]);
                        if (e.is_zero()) continue;
                        std::vector<std::size_t> rest = J;
                        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(kk));
                        std::size_t row = locate(tgt, lower, rest);
                        if (kk % 2 == 0)
                            c[row] += e;
                        else
                            c[row] -= e;
                    }
                }
            }
            cols.push_back(std::move(c));
        }
        C.maps.push_back(std::move(cols));
    }
    return C;
}

long lemma22_bound(const ComplexTerms& terms, long reg_R, long dim_R) {
    const ComplexTerm* zero = terms.at_position(0);
    if (!zero || zero->rank() == 0) fail(ErrorCode::Precondition, "complex has no term in position 0");
    ExtDegree best;
    for (const ComplexTerm& t : terms.terms) {
        if (t.position > dim_R) continue;
        ExtDegree mt = t.max_twist();
        if (!mt.is_finite()) continue;
        best = max(best, ExtDegree(reg_R + mt.value() - t.position));
    }
    return best.value();
}

}  // namespace regbound
