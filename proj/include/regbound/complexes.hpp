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

#ifndef REGBOUND_COMPLEXES_HPP
#define REGBOUND_COMPLEXES_HPP

#include <vector>

#include "regbound/presentation.hpp"
#include "regbound/resolution.hpp"

namespace regbound {

/// One free module of the complex E^(l) attached to a presentation. L_s is
/// Sym_{l-s} G (x) wedge^s F at position s; N_s is Sym_{s-l} G* (x)
/// wedge^{n+s} F shifted by sigma, at position s + 1.
struct ComplexTerm {
    enum class Kind { L, N };
    Kind kind;
    int s;
    int position;
    /// Basis: a multiset of generator indices and a subset of relation indices.
    std::vector<std::vector<std::size_t>> multisets;
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<int> twists;

    std::size_t rank() const noexcept { return twists.size(); }
    ExtDegree max_twist() const;
};

struct ComplexTerms {
    int l = 0;
    int sigma = 0;
    std::size_t n = 0, m = 0;
    std::vector<ComplexTerm> terms;  // ordered by position

    const ComplexTerm* at_position(int position) const;
    int top_position() const;
};

ComplexTerms complex_terms(const GradedPresentation& M, int l);

/// E^(0) (Eagon-Northcott) or E^(1) (Buchsbaum-Rim) with its maps. In the
/// result, twists[k] is the term at position k and maps[k-1] its differential.
Resolution explicit_differentials(const GradedPresentation& M, int l);

/// max over positions j <= dim_R of reg_R + (max twist at j) - j.
long lemma22_bound(const ComplexTerms& terms, long reg_R, long dim_R);

}  // namespace regbound

#endif
