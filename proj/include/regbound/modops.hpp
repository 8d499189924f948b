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

#ifndef REGBOUND_MODOPS_HPP
#define REGBOUND_MODOPS_HPP

#include <map>
#include <optional>
#include <vector>

#include "regbound/hilbert.hpp"
#include "regbound/presentation.hpp"

namespace regbound {

/// Presentation of M / lM.
GradedPresentation quotient_by_linear(const GradedPresentation& M, const Polynomial& l);

struct ColonKernel {
    /// Minimal generators of (im phi :_G l) modulo im phi, as elements of G.
    std::vector<Column> generators;
    /// Presentation of K = 0 :_M l; empty when K = 0.
    std::optional<GradedPresentation> presentation;
    HilbertData hilbert;
    /// Length of K; empty when K has infinite length.
    std::optional<long> length;
};

ColonKernel colon_kernel(const GradedPresentation& M, const Polynomial& l);

/// Generators u of {u in G : f u in <gens> for all f in forms}; the forms must
/// share one degree.
std::vector<Column> colon_module(const RingPtr& ring, std::span<const int> twists, const std::vector<Column>& gens,
                                 const std::vector<Polynomial>& forms);

struct H0Profile {
    std::map<int, long> h0_by_degree;  // nonzero values only
    ExtDegree a0;                      // -inf when empty
    ExtDegree indeg;                   // -inf when empty
    long a_span = 0;

    long at(int mu) const;
    bool empty() const noexcept { return h0_by_degree.empty(); }
};

struct H0Result {
    H0Profile profile;
    /// M' = M / H^0_m(M)
    GradedPresentation saturated;
};

/// Throws ZeroModule for the zero module.
H0Result h0_profile(const GradedPresentation& M);

/// Profile from the Hilbert numerators of M and M' (no saturation).
H0Profile h0_from_numerators(const LaurentPoly& nm, const LaurentPoly& nsat, std::size_t nvars);

GradedPresentation sym_power(const GradedPresentation& M, int l);

/// Maximal minors of phi with zeros and repeats removed; empty when m < n.
std::vector<Polynomial> fitting_ideal_0(const GradedPresentation& M);

/// Cancels unit entries and drops relations that are redundant modulo J G.
/// Empty result means M = 0.
std::optional<GradedPresentation> minimal_presentation(const GradedPresentation& M);

/// Degrees read off a minimal presentation over R and the generator degree of J.
struct PresentationDegrees {
    ExtDegree b0;  // top generator degree
    ExtDegree b1;  // top relation degree over R
    long h = 1;    // max(b0^S(J), 1)
};

PresentationDegrees presentation_degrees(const GradedPresentation& M);

}  // namespace regbound

#endif
