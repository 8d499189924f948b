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

#ifndef REGBOUND_GROEBNER_HPP
#define REGBOUND_GROEBNER_HPP

#include <span>
#include <vector>

#include "regbound/gb_engine.hpp"
#include "regbound/presentation.hpp"

namespace regbound {

/// An element of a graded free module, one polynomial per component.
using ModuleElement = Column;

/// Degree of a homogeneous element with respect to the component twists;
/// -inf for zero. Throws NonHomogeneous otherwise.
ExtDegree element_degree(const ModuleElement& v, std::span<const int> twists);

ModuleElement zero_element(const RingPtr& ring, std::size_t rank);

gb::Vec to_vec(const ModuleElement& v, const gb::ModuleOrder& order);
ModuleElement from_vec(const gb::Vec& v, const RingPtr& ring, std::size_t rank);

/// Reduced Groebner basis of a submodule of a graded free module, with
/// respect to position-over-term (lower index wins) refined by the ring order.
class GroebnerBasis {
   public:
    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<int>& twists() const noexcept { return twists_; }
    const std::vector<ModuleElement>& generators() const noexcept { return generators_; }
    const gb::ModuleOrder& order() const noexcept { return order_; }
    const std::vector<gb::Vec>& vecs() const noexcept { return vecs_; }
    std::size_t size() const noexcept { return vecs_.size(); }

    friend GroebnerBasis buchberger(const RingPtr& ring, std::span<const int> twists,
                                    const std::vector<ModuleElement>& gens);

   private:
    RingPtr ring_;
    std::vector<int> twists_;
    gb::ModuleOrder order_;
    std::vector<gb::Vec> vecs_;
    std::vector<ModuleElement> generators_;
};

GroebnerBasis buchberger(const RingPtr& ring, std::span<const int> twists, const std::vector<ModuleElement>& gens);

ModuleElement normal_form(const ModuleElement& f, const GroebnerBasis& gb);

bool contains(const GroebnerBasis& gb, const ModuleElement& f);

/// Generators of the kernel of the map from the free module on `gens` (twists
/// equal to the generator degrees) to the ambient module.
std::vector<ModuleElement> syzygies(const RingPtr& ring, std::span<const int> twists,
                                    const std::vector<ModuleElement>& gens);

/// Convenience for ideals: rank-one free module with twist zero.
GroebnerBasis ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens);

}  // namespace regbound

#endif
