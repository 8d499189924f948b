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

#include "regbound/linalg.hpp"

#include <unordered_map>

#include "regbound/errors.hpp"

namespace regbound {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(DenseMatrix& A, const PrimeField& F) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A.at(p, c) == 0) ++p;
        if (p == A.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < A.cols(); ++k) std::swap(A.at(p, k), A.at(r, k));
        Coeff inv = F.inv(A.at(r, c));
        for (std::size_t k = c; k < A.cols(); ++k) A.at(r, k) = F.mul(A.at(r, k), inv);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A.at(i, c) == 0) continue;
            Coeff f = A.at(i, c);
            for (std::size_t k = c; k < A.cols(); ++k) A.at(i, k) = F.sub(A.at(i, k), F.mul(f, A.at(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

struct SlotIndex {
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> by_comp;
    std::size_t size = 0;
};

SlotIndex index_slots(std::size_t nvars, std::span<const int> twists, int d, MonomialOrder order) {
    SlotIndex idx;
    idx.by_comp.resize(twists.size());
    for (std::size_t i = 0; i < twists.size(); ++i) {
        if (d - twists[i] < 0) continue;
        for (const Monomial& m : monomials_of_degree(nvars, d - twists[i], order)) idx.by_comp[i][m] = idx.size++;
    }
    return idx;
}

}  // namespace

std::size_t rank(DenseMatrix A, const PrimeField& F) { return echelon(A, F).size(); }

std::vector<std::vector<Coeff>> nullspace(DenseMatrix A, const PrimeField& F) {
    auto pivots = echelon(A, F);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Coeff>> out;
    for (std::size_t free = 0; free < A.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Coeff> x(A.cols(), 0);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = F.neg(A.at(r, free));
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<GradedSlot> free_module_basis(std::size_t nvars, std::span<const int> twists, int d) {
    std::vector<GradedSlot> out;
    for (std::size_t i = 0; i < twists.size(); ++i) {
        if (d - twists[i] < 0) continue;
        for (const Monomial& m : monomials_of_degree(nvars, d - twists[i])) out.push_back({i, m});
    }
    return out;
}

DenseMatrix graded_map(const RingPtr& ring, std::span<const int> target, std::span<const int> source,
                       const std::vector<ModuleElement>& images, int d) {
    if (images.size() != source.size()) fail(ErrorCode::Precondition, "image count does not match source rank");
    const std::size_t nv = ring->nvars();
    SlotIndex rows = index_slots(nv, target, d, MonomialOrder::GRevLex);
    auto cols = free_module_basis(nv, source, d);
    DenseMatrix A(rows.size, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const ModuleElement& g = images[cols[c].comp];
        for (std::size_t i = 0; i < g.size(); ++i)
            for (const PolyTerm& t : g[i].terms()) {
                Monomial m = t.mono * cols[c].mono;
                auto it = rows.by_comp[i].find(m);
                if (it == rows.by_comp[i].end()) fail(ErrorCode::NonHomogeneous, "image is not homogeneous of the source degree");
                A.at(it->second, c) = ring->field().add(A.at(it->second, c), t.coef);
            }
    }
    return A;
}

DenseMatrix graded_piece(const RingPtr& ring, std::span<const int> twists, const std::vector<ModuleElement>& gens,
                         int d) {
    std::vector<int> src;
    std::vector<ModuleElement> imgs;
    for (const ModuleElement& g : gens) {
        ExtDegree e = element_degree(g, twists);
        if (!e.is_finite()) continue;
        src.push_back(static_cast<int>(e.value()));
        imgs.push_back(g);
    }
    return graded_map(ring, twists, src, imgs, d);
}

long quotient_dimension(const RingPtr& ring, std::span<const int> twists, const std::vector<ModuleElement>& gens,
                        int d) {
    DenseMatrix A = graded_piece(ring, twists, gens, d);
    return static_cast<long>(A.rows()) - static_cast<long>(rank(std::move(A), ring->field()));
}

}  // namespace regbound
