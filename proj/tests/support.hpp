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

#ifndef REGBOUND_TESTS_SUPPORT_HPP
#define REGBOUND_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regbound/parse.hpp"
#include "regbound/presentation.hpp"

namespace testing {

using namespace regbound;

inline RingPtr ring_of(const std::string& vars, std::uint32_t p = 101,
                       MonomialOrder order = MonomialOrder::GRevLex) {
    std::istringstream in(vars);
    std::vector<std::string> names;
    for (std::string v; in >> v;) names.push_back(v);
    return make_ring(p, names, order);
}

inline Polynomial P(const RingPtr& R, const std::string& text) { return parse_polynomial(R, text); }

inline std::vector<Polynomial> polys(const RingPtr& R, std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(P(R, t));
    return out;
}

inline GradedPresentation cyclic(const RingPtr& R, std::initializer_list<const char*> gens) {
    return cyclic_presentation(GradedRing(R), polys(R, gens));
}

/// Relations given one per string, entries comma separated (as in the file format).
inline GradedPresentation pres(const RingPtr& R, std::vector<int> a, std::initializer_list<const char*> rels) {
    std::vector<Column> cols;
    for (const char* r : rels) {
        Column c;
        std::stringstream ss(r);
        for (std::string e; std::getline(ss, e, ',');) c.push_back(P(R, e));
        cols.push_back(std::move(c));
    }
    return validate_presentation(GradedRing(R), std::move(a), std::move(cols));
}

/// Random homogeneous polynomial of degree d with up to `terms` terms.
inline Polynomial random_form(const RingPtr& R, int d, std::size_t terms, std::mt19937_64& rng) {
    if (d < 0) return Polynomial(R);
    auto monos = monomials_of_degree(R->nvars(), d);
    std::vector<PolyTerm> t;
    for (std::size_t k = 0; k < terms; ++k)
        t.push_back({monos[rng() % monos.size()], static_cast<Coeff>(rng() % R->field().characteristic())});
    return Polynomial::from_terms(R, std::move(t));
}

/// Small random presentation: n <= 3 generators in degrees [0, max_a], m <= 4
/// relations of degree at most max_b with 1-3 terms per entry.
inline GradedPresentation random_presentation(std::uint64_t seed, std::size_t nvars = 3, int max_a = 1,
                                              int max_b = 3, std::uint32_t p = 101) {
    std::mt19937_64 rng(seed);
    auto R = make_ring(p, nvars);
    std::size_t n = 1 + rng() % 3, m = rng() % 5;
    std::vector<int> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(static_cast<int>(rng() % (max_a + 1)));
    int amin = *std::min_element(a.begin(), a.end());
    std::vector<Column> cols;
    while (cols.size() < m) {
        int b = amin + 1 + static_cast<int>(rng() % (max_b - amin));
        Column c;
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial f = (b - a[i] >= 1 && rng() % 4 != 0) ? random_form(R, b - a[i], 1 + rng() % 3, rng)
                                                              : Polynomial(R);
            nonzero |= !f.is_zero();
            c.push_back(std::move(f));
        }
        if (nonzero) cols.push_back(std::move(c));
    }
    return validate_presentation(GradedRing(R), a, cols);
}

}  // namespace testing

#endif
