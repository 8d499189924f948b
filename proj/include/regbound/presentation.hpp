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

#ifndef REGBOUND_PRESENTATION_HPP
#define REGBOUND_PRESENTATION_HPP

#include <optional>
#include <vector>

#include "regbound/polynomial.hpp"

namespace regbound {

/// R = S/J with S = base(). J is generated by homogeneous forms of degree >= 2.
class GradedRing {
   public:
    explicit GradedRing(RingPtr base, std::vector<Polynomial> quotient = {});

    const RingPtr& base() const noexcept { return base_; }
    const std::vector<Polynomial>& quotient() const noexcept { return quotient_; }
    bool is_polynomial_ring() const noexcept { return quotient_.empty(); }
    std::size_t nvars() const noexcept { return base_->nvars(); }

   private:
    RingPtr base_;
    std::vector<Polynomial> quotient_;
};

using Column = std::vector<Polynomial>;

/// coker(phi : sum_j R(-b_j) -> sum_i R(-a_i)). Entry (i, j) is homogeneous of
/// degree b_j - a_i (or zero). Columns are the relations.
class GradedPresentation {
   public:
    const GradedRing& ring() const noexcept { return ring_; }
    const RingPtr& base() const noexcept { return ring_.base(); }
    std::size_t rows() const noexcept { return row_twists_.size(); }
    std::size_t cols() const noexcept { return columns_.size(); }
    const std::vector<int>& row_twists() const noexcept { return row_twists_; }
    const std::vector<int>& column_degrees() const noexcept { return column_degrees_; }
    const std::vector<Column>& columns() const noexcept { return columns_; }
    const Column& column(std::size_t j) const { return columns_.at(j); }
    const Polynomial& entry(std::size_t i, std::size_t j) const { return columns_.at(j).at(i); }

    /// a_1 >= ... >= a_n
    std::vector<int> twists_descending() const;
    /// b_1 >= ... >= b_m
    std::vector<int> degrees_descending() const;

    friend GradedPresentation validate_presentation(GradedRing ring, std::vector<int> row_twists,
                                                    std::vector<Column> columns,
                                                    std::vector<std::optional<int>> degree_hints);

   private:
    GradedPresentation(GradedRing ring) : ring_(std::move(ring)) {}

    GradedRing ring_;
    std::vector<int> row_twists_;
    std::vector<int> column_degrees_;
    std::vector<Column> columns_;
};

/// Derives b_j from the entries of each column. Throws NonHomogeneous when an
/// entry conflicts with its column degree and EmptyColumn for a zero column
/// without a hint. n = 0 is rejected.
GradedPresentation validate_presentation(GradedRing ring, std::vector<int> row_twists, std::vector<Column> columns,
                                         std::vector<std::optional<int>> degree_hints = {});

/// Re-validates an existing presentation (identity on valid input).
GradedPresentation validate_presentation(const GradedPresentation& M);

/// S/I as a cyclic module generated in degree 0.
GradedPresentation cyclic_presentation(GradedRing ring, const std::vector<Polynomial>& ideal_gens);

/// Free module with the given generator degrees (m = 0).
GradedPresentation free_presentation(GradedRing ring, std::vector<int> twists);

/// Permutes rows (with their twists) and columns.
GradedPresentation permuted(const GradedPresentation& M, std::span<const std::size_t> row_perm,
                            std::span<const std::size_t> col_perm);

/// Same module viewed over the base polynomial ring S: appends f*e_i for each
/// quotient generator f and generator i.
GradedPresentation over_base_ring(const GradedPresentation& M);

}  // namespace regbound

#endif
