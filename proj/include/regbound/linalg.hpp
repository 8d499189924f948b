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

#ifndef REGBOUND_LINALG_HPP
#define REGBOUND_LINALG_HPP

// Dense linear algebra over F_p and degreewise slices of graded modules.

#include <span>
#include <vector>

#include "regbound/groebner.hpp"

namespace regbound {

class DenseMatrix {
   public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

   private:
    std::size_t rows_, cols_;
    std::vector<Coeff> data_;
};

std::size_t rank(DenseMatrix A, const PrimeField& F);

/// Basis of {x : A x = 0}, one vector per free column.
std::vector<std::vector<Coeff>> nullspace(DenseMatrix A, const PrimeField& F);

/// Monomial basis of the degree-d part of a free module: (component, monomial)
/// pairs, components ascending, monomials descending.
struct GradedSlot {
    std::size_t comp;
    Monomial mono;
};
std::vector<GradedSlot> free_module_basis(std::size_t nvars, std::span<const int> twists, int d);

/// Columns span the degree-d part of the submodule generated by `gens`
/// (all multiples m*g with deg(m) + deg(g) = d), written in free_module_basis.
DenseMatrix graded_piece(const RingPtr& ring, std::span<const int> twists, const std::vector<ModuleElement>& gens,
                         int d);

/// dim_k (G / <gens>)_d by dense rank computation.
long quotient_dimension(const RingPtr& ring, std::span<const int> twists, const std::vector<ModuleElement>& gens,
                        int d);

/// Matrix of the degree-d part of the map sending the i-th basis vector of a
/// free module with twists `source` to images[i]: rows index the target slice,
/// columns the source slice.
DenseMatrix graded_map(const RingPtr& ring, std::span<const int> target, std::span<const int> source,
                       const std::vector<ModuleElement>& images, int d);

}  // namespace regbound

#endif
