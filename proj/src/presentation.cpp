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

#include "regbound/presentation.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "regbound/errors.hpp"

namespace regbound {

GradedRing::GradedRing(RingPtr base, std::vector<Polynomial> quotient) : base_(std::move(base)) {
    for (auto& f : quotient) {
        if (!same_ring(f.ring(), base_)) fail(ErrorCode::RingMismatch, "quotient generator from another ring");
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) fail(ErrorCode::NonHomogeneous, "quotient generator " + f.to_string() + " is not homogeneous");
        if (f.degree().value() < 2)
            fail(ErrorCode::Precondition, "quotient generator " + f.to_string() + " has degree < 2");
        quotient_.push_back(std::move(f));
    }
}

std::vector<int> GradedPresentation::twists_descending() const {
    std::vector<int> a = row_twists_;
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

std::vector<int> GradedPresentation::degrees_descending() const {
    std::vector<int> b = column_degrees_;
    std::sort(b.begin(), b.end(), std::greater<>());
    return b;
}

GradedPresentation validate_presentation(GradedRing ring, std::vector<int> row_twists, std::vector<Column> columns,
                                         std::vector<std::optional<int>> degree_hints) {
    if (row_twists.empty()) fail(ErrorCode::Precondition, "a presentation needs at least one generator");
    if (!degree_hints.empty() && degree_hints.size() != columns.size())
        fail(ErrorCode::Precondition, "one degree hint per column expected");
    GradedPresentation M(std::move(ring));
    const RingPtr& S = M.ring_.base();
    for (std::size_t j = 0; j < columns.size(); ++j) {
        Column& col = columns[j];
        if (col.size() != row_twists.size())
            fail(ErrorCode::Precondition, "column " + std::to_string(j + 1) + " has wrong length");
        std::optional<int> b = degree_hints.empty() ? std::nullopt : degree_hints[j];
        for (std::size_t i = 0; i < col.size(); ++i) {
            const Polynomial& f = col[i];
            if (!same_ring(f.ring(), S)) fail(ErrorCode::RingMismatch, "matrix entry from another ring");
            if (f.is_zero()) continue;
            if (!f.is_homogeneous())
                fail(ErrorCode::NonHomogeneous, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                    ") = " + f.to_string() + " is not homogeneous");
            int want = static_cast<int>(f.degree().value()) + row_twists[i];
            if (b && *b != want)
                fail(ErrorCode::NonHomogeneous, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                    ") = " + f.to_string() + " has degree " +
                                                    std::to_string(want - row_twists[i]) + " but column " +
                                                    std::to_string(j + 1) + " needs degree " +
                                                    std::to_string(*b - row_twists[i]));
            b = want;
        }
        if (!b) fail(ErrorCode::EmptyColumn, "column " + std::to_string(j + 1) + " is zero and has no degree");
        M.column_degrees_.push_back(*b);
    }
    M.row_twists_ = std::move(row_twists);
    M.columns_ = std::move(columns);
    return M;
}

GradedPresentation validate_presentation(const GradedPresentation& M) {
    std::vector<std::optional<int>> hints(M.column_degrees().begin(), M.column_degrees().end());
    return validate_presentation(M.ring(), M.row_twists(), M.columns(), std::move(hints));
}

GradedPresentation cyclic_presentation(GradedRing ring, const std::vector<Polynomial>& ideal_gens) {
    std::vector<Column> cols;
    for (const auto& f : ideal_gens)
        if (!f.is_zero()) cols.push_back({f});
    return validate_presentation(std::move(ring), {0}, std::move(cols));
}

GradedPresentation free_presentation(GradedRing ring, std::vector<int> twists) {
    return validate_presentation(std::move(ring), std::move(twists), {});
}

GradedPresentation permuted(const GradedPresentation& M, std::span<const std::size_t> row_perm,
                            std::span<const std::size_t> col_perm) {
    std::vector<int> twists;
    for (std::size_t i : row_perm) twists.push_back(M.row_twists().at(i));
    std::vector<Column> cols;
    std::vector<std::optional<int>> hints;
    for (std::size_t j : col_perm) {
        Column c;
        for (std::size_t i : row_perm) c.push_back(M.entry(i, j));
        cols.push_back(std::move(c));
        hints.push_back(M.column_degrees().at(j));
    }
    return validate_presentation(M.ring(), std::move(twists), std::move(cols), std::move(hints));
}

GradedPresentation over_base_ring(const GradedPresentation& M) {
    if (M.ring().is_polynomial_ring()) return M;
    const RingPtr& S = M.base();
    std::vector<Column> cols = M.columns();
    std::vector<std::optional<int>> hints(M.column_degrees().begin(), M.column_degrees().end());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (const auto& f : M.ring().quotient()) {
            Column c(M.rows(), Polynomial(S));
            c[i] = f;
            cols.push_back(std::move(c));
            hints.push_back(static_cast<int>(f.degree().value()) + M.row_twists()[i]);
        }
    return validate_presentation(GradedRing(S), M.row_twists(), std::move(cols), std::move(hints));
}

}  // namespace regbound
