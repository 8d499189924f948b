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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "regbound/errors.hpp"
#include "regbound/groebner.hpp"
#include "regbound/linalg.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ModuleElement E(const RingPtr& R, std::initializer_list<const char*> entries) {
    ModuleElement v;
    for (const char* e : entries) v.push_back(P(R, e));
    return v;
}

std::vector<ModuleElement> ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<ModuleElement> out;
    for (const char* g : gens) out.push_back({P(R, g)});
    return out;
}

const std::vector<int> kRank1{0};

struct Instance {
    RingPtr ring;
    std::vector<int> twists;
    std::vector<ModuleElement> gens;
};

Instance random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Instance I;
    std::size_t nv = 2 + rng() % 2;
    I.ring = make_ring(101, nv);
    std::size_t rank = 1 + rng() % 3, ngens = 1 + rng() % 4;
    for (std::size_t i = 0; i < rank; ++i) I.twists.push_back(static_cast<int>(rng() % 2));
    for (std::size_t k = 0; k < ngens; ++k) {
        int d = 1 + static_cast<int>(rng() % 3) + 1;
        ModuleElement g;
        for (std::size_t i = 0; i < rank; ++i)
            g.push_back(rng() % 3 == 0 ? Polynomial(I.ring) : random_form(I.ring, d - I.twists[i], 1 + rng() % 3, rng));
        I.gens.push_back(std::move(g));
    }
    return I;
}

}  // namespace

TEST_CASE("buchberger examples") {
    auto R = ring_of("x y");
    auto G = buchberger(R, kRank1, ideal(R, {"x^2", "x*y"}));
    REQUIRE(G.size() == 2);
    CHECK(G.generators()[0][0] == P(R, "x^2"));
    CHECK(G.generators()[1][0] == P(R, "x*y"));
    CHECK(buchberger(R, kRank1, ideal(R, {"x"})).generators().size() == 1);

    auto T = ring_of("x y z");
    auto L = buchberger(T, kRank1, ideal(T, {"x-y", "y-z"}));
    REQUIRE(L.size() == 2);
    CHECK(L.generators()[0][0].leading().mono == P(T, "x").leading().mono);
    CHECK(L.generators()[1][0].leading().mono == P(T, "y").leading().mono);
    CHECK(L.generators()[0][0] == P(T, "x - z"));
}

TEST_CASE("normal form examples") {
    auto R = ring_of("x y");
    auto G = buchberger(R, kRank1, ideal(R, {"x^2"}));
    CHECK(normal_form({P(R, "x^3 + y")}, G)[0] == P(R, "y"));
    auto H = buchberger(R, kRank1, ideal(R, {"x^2", "x*y"}));
    CHECK(normal_form({P(R, "x^2")}, H)[0].is_zero());
    CHECK(normal_form({P(R, "y^2")}, H)[0] == P(R, "y^2"));
    CHECK_THROWS_AS(normal_form(E(R, {"x", "y"}), H), AlgebraError);
}

TEST_CASE("syzygy examples") {
    auto R = ring_of("x y");
    auto s = syzygies(R, kRank1, ideal(R, {"x", "y"}));
    REQUIRE(s.size() == 1);
    CHECK(((s[0][0] == P(R, "y") && s[0][1] == P(R, "-x")) || (s[0][0] == P(R, "-y") && s[0][1] == P(R, "x"))));
    auto t = syzygies(R, kRank1, ideal(R, {"x^2", "x*y"}));
    REQUIRE(t.size() == 1);
    CHECK((t[0][0] * P(R, "x^2") + t[0][1] * P(R, "x*y")).is_zero());
    CHECK(t[0][0].degree() == ExtDegree(1));
    CHECK(syzygies(R, kRank1, ideal(R, {"1"})).empty());
}

TEST_CASE("module elements must be homogeneous") {
    auto R = ring_of("x y");
    std::vector<int> tw{0, 1};
    CHECK_NOTHROW(buchberger(R, tw, {E(R, {"x^2", "y"})}));
    CHECK_THROWS_AS(buchberger(R, tw, {E(R, {"x", "y"})}), AlgebraError);
}

TEST_CASE("module groebner basis in position-over-term order") {
    auto R = ring_of("x y");
    std::vector<int> tw{0, 0};
    auto G = buchberger(R, tw, {E(R, {"x", "y"}), E(R, {"y", "0"})});
    // x e1 + y e2 and y e1 give y*(x e1 + y e2) - x*(y e1) = y^2 e2
    bool found = false;
    for (const auto& g : G.generators()) found |= g[0].is_zero() && g[1] == P(R, "y^2");
    CHECK(found);
    CHECK(contains(G, E(R, {"0", "y^2"})));
    CHECK_FALSE(contains(G, E(R, {"0", "y"})));
}

TEST_CASE("buchberger criterion holds on random instances") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto I = random_instance(seed);
        auto G = buchberger(I.ring, I.twists, I.gens);
        const auto& F = I.ring->field();
        gb::Reducer red(G.order(), F, I.twists.size());
        for (const auto& v : G.vecs()) red.add(&v);
        for (std::size_t i = 0; i < G.size(); ++i) {
            REQUIRE(G.vecs()[i].front().coef == 1);
            for (std::size_t j = i + 1; j < G.size(); ++j) {
                const auto& a = G.vecs()[i];
                const auto& b = G.vecs()[j];
                REQUIRE_FALSE((a.front().comp == b.front().comp && a.front().mono.divides(b.front().mono)));
                REQUIRE_FALSE((a.front().comp == b.front().comp && b.front().mono.divides(a.front().mono)));
                if (a.front().comp != b.front().comp) continue;
                Monomial l = lcm(a.front().mono, b.front().mono);
                gb::Vec s = gb::axpy(gb::mul_term(a, l / a.front().mono, 1, F), 0, F.neg(1), l / b.front().mono, b, 0,
                                     G.order(), F);
                red.reduce(s);
                CHECK_MESSAGE(s.empty(), "seed " << seed);
            }
        }
        // Every input lies in the span; normal form is idempotent.
        for (const auto& g : I.gens) CHECK(contains(G, g));
        std::mt19937_64 rng(seed * 7);
        for (int k = 0; k < 3; ++k) {
            ModuleElement f;
            for (int tw : I.twists) f.push_back(random_form(I.ring, 3 - tw, 4, rng));
            auto n1 = normal_form(f, G);
            CHECK(normal_form(n1, G) == n1);
        }
    }
}

TEST_CASE("syzygies are exact and degreewise complete") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto I = random_instance(seed + 1000);
        std::vector<int> src;
        for (const auto& g : I.gens) src.push_back(static_cast<int>(element_degree(g, I.twists).value_or(0)));
        auto syz = syzygies(I.ring, I.twists, I.gens);
        for (const auto& s : syz) {
            REQUIRE(s.size() == I.gens.size());
            for (std::size_t r = 0; r < I.twists.size(); ++r) {
                Polynomial acc(I.ring);
                for (std::size_t k = 0; k < I.gens.size(); ++k) acc += s[k] * I.gens[k][r];
                CHECK(acc.is_zero());
            }
        }
        int maxb = *std::max_element(src.begin(), src.end());
        for (int d = 0; d <= maxb + 3; ++d) {
            auto A = graded_map(I.ring, I.twists, src, I.gens, d);
            long nullity = static_cast<long>(A.cols()) - static_cast<long>(rank(A, I.ring->field()));
            std::vector<int> sdeg;
            for (const auto& s : syz) sdeg.push_back(static_cast<int>(element_degree(s, src).value()));
            auto B = graded_map(I.ring, src, sdeg, syz, d);
            CHECK_MESSAGE(static_cast<long>(rank(B, I.ring->field())) == nullity, "seed " << seed << " degree " << d);
        }
    }
}

TEST_CASE("dense linear algebra") {
    PrimeField F(7);
    DenseMatrix A(2, 3);
    A.at(0, 0) = 1; A.at(0, 1) = 2; A.at(0, 2) = 3;
    A.at(1, 0) = 2; A.at(1, 1) = 4; A.at(1, 2) = 6;
    CHECK(rank(A, F) == 1);
    auto ker = nullspace(A, F);
    REQUIRE(ker.size() == 2);
    for (const auto& x : ker) {
        Coeff s = 0;
        for (std::size_t c = 0; c < 3; ++c) s = F.add(s, F.mul(A.at(0, c), x[c]));
        CHECK(s == 0);
    }
}
