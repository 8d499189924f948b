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

#ifndef REGBOUND_RESOLUTION_HPP
#define REGBOUND_RESOLUTION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regbound/hilbert.hpp"
#include "regbound/presentation.hpp"

namespace regbound {

/// Free resolution over the base polynomial ring. twists[k] lists the
/// generator degrees of F_k; maps[k-1] is d_k : F_k -> F_{k-1}, stored as
/// columns (one per basis vector of F_k).
struct Resolution {
    RingPtr ring;
    std::vector<std::vector<int>> twists;
    std::vector<std::vector<Column>> maps;
    bool minimal = false;

    /// Index of the last nonzero free module; -1 for the zero module.
    long length() const noexcept;
    std::size_t rank(std::size_t k) const noexcept { return k < twists.size() ? twists[k].size() : 0; }
};

class BettiTable {
   public:
    BettiTable() = default;
    explicit BettiTable(const Resolution& res);

    /// Betti number beta_{i,j}.
    long operator()(int i, int j) const;
    const std::map<std::pair<int, int>, long>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Projective dimension; -1 for the zero module.
    int length() const noexcept;
    /// Top internal degree in homological position i (-inf when empty).
    ExtDegree top_degree(int i) const;
    /// max_i (b_i - i); -inf for the zero module.
    ExtDegree regularity() const;
    LaurentPoly euler_characteristic() const;
    std::string to_string() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

   private:
    std::map<std::pair<int, int>, long> entries_;
};

Resolution schreyer_resolution(const GradedPresentation& M);
Resolution minimalize(Resolution res);

/// Alternating sum of the twists of a resolution.
LaurentPoly euler_characteristic(const Resolution& res);

struct ModuleInvariants {
    Resolution resolution;  // minimal
    BettiTable betti;
    HilbertData hilbert;
};

/// Minimal resolution, Betti table and Hilbert data. The Hilbert numerator
/// from lead terms is checked against the resolution's Euler characteristic.
ModuleInvariants module_invariants(const GradedPresentation& M);

BettiTable betti_table(const GradedPresentation& M);

/// Throws ZeroModule for the zero module.
long regularity(const GradedPresentation& M);

struct RingInvariants {
    long dim;
    std::int64_t degree;
    long reg;
    bool cohen_macaulay;
};

RingInvariants ring_invariants(const GradedRing& R);

}  // namespace regbound

#endif
