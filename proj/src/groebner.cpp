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

#include "regbound/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "regbound/errors.hpp"

namespace regbound {

ExtDegree element_degree(const ModuleElement& v, std::span<const int> twists) {
    if (v.size() != twists.size()) fail(ErrorCode::Precondition, "element rank does not match twists");
    ExtDegree d;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_homogeneous()) fail(ErrorCode::NonHomogeneous, "component " + std::to_string(i) + " is not homogeneous");
        ExtDegree di = v[i].degree() + twists[i];
        if (d.is_finite() && di != d) {
            std::ostringstream os;
            os << "component " << i << " has degree " << di << ", expected " << d;
            fail(ErrorCode::NonHomogeneous, os.str());
        }
        d = di;
    }
    return d;
}

ModuleElement zero_element(const RingPtr& ring, std::size_t rank) { return ModuleElement(rank, Polynomial(ring)); }

gb::Vec to_vec(const ModuleElement& v, const gb::ModuleOrder& order) {
    gb::Vec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (const PolyTerm& t : v[i].terms()) out.push_back({t.mono, static_cast<std::uint32_t>(i), t.coef});
    std::sort(out.begin(), out.end(), [&](const gb::Term& a, const gb::Term& b) { return order.compare(a, b) > 0; });
    return out;
}

ModuleElement from_vec(const gb::Vec& v, const RingPtr& ring, std::size_t rank) {
    std::vector<std::vector<PolyTerm>> parts(rank);
    for (const gb::Term& t : v) parts.at(t.comp).push_back({t.mono, t.coef});
    ModuleElement out;
    out.reserve(rank);
    for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
    return out;
}

namespace {

void check_inputs(const RingPtr& ring, std::span<const int> twists, const std::vector<ModuleElement>& gens) {
    for (const ModuleElement& g : gens) {
        if (g.size() != twists.size()) fail(ErrorCode::Precondition, "generator rank does not match twists");
        for (const Polynomial& p : g)
            if (!same_ring(p.ring(), ring)) fail(ErrorCode::RingMismatch, "generator over a different ring");
        (void)element_degree(g, twists);
    }
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::span<const int> twists, const std::vector<ModuleElement>& gens) {
    check_inputs(ring, twists, gens);
    GroebnerBasis gb;
    gb.ring_ = ring;
    gb.twists_.assign(twists.begin(), twists.end());
    gb.order_ = gb::ModuleOrder::position_over_term(ring->order(), twists.size());
    std::vector<gb::Vec> in;
    in.reserve(gens.size());
    for (const ModuleElement& g : gens) in.push_back(to_vec(g, gb.order_));
    auto res = gb::groebner(in, gb.order_, twists, ring->field());
    gb.vecs_ = std::move(res.basis);
    for (const gb::Vec& v : gb.vecs_) gb.generators_.push_back(from_vec(v, ring, twists.size()));
    return gb;
}

ModuleElement normal_form(const ModuleElement& f, const GroebnerBasis& gb) {
    if (f.size() != gb.twists().size()) fail(ErrorCode::Precondition, "element rank does not match the basis");
    for (const Polynomial& p : f)
        if (!same_ring(p.ring(), gb.ring())) fail(ErrorCode::RingMismatch, "element over a different ring");
    gb::Reducer r(gb.order(), gb.ring()->field(), gb.twists().size());
    for (const gb::Vec& v : gb.vecs()) r.add(&v);
    gb::Vec v = to_vec(f, gb.order());
    r.reduce(v);
    return from_vec(v, gb.ring(), gb.twists().size());
}

bool contains(const GroebnerBasis& gb, const ModuleElement& f) {
    for (const Polynomial& p : normal_form(f, gb))
        if (!p.is_zero()) return false;
    return true;
}

std::vector<ModuleElement> syzygies(const RingPtr& ring, std::span<const int> twists,
                                    const std::vector<ModuleElement>& gens) {
    check_inputs(ring, twists, gens);
    auto order = gb::ModuleOrder::position_over_term(ring->order(), twists.size());
    std::vector<gb::Vec> in;
    for (const ModuleElement& g : gens) in.push_back(to_vec(g, order));
    gb::GroebnerOptions opt;
    opt.track = true;
    opt.autoreduce = false;
    auto res = gb::groebner(in, order, twists, ring->field(), opt);
    std::vector<ModuleElement> out;
    for (const gb::Vec& s : res.syzygies) out.push_back(from_vec(s, ring, gens.size()));
    return out;
}

GroebnerBasis ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<ModuleElement> cols;
    for (const Polynomial& g : gens) cols.push_back({g});
    const int zero = 0;
    return buchberger(ring, std::span<const int>(&zero, 1), cols);
}

}  // namespace regbound
