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

#include "regbound/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "regbound/complexes.hpp"
#include "regbound/errors.hpp"
#include "regbound/hilbert.hpp"
#include "regbound/modops.hpp"
#include "regbound/parse.hpp"

namespace regbound {

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 mixing so nearby (seed, index) pairs give unrelated streams
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + index + 0x632BE59BD9B4E019ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    engine_.seed(z ^ (z >> 31));
}

long SeededRng::uniform(long lo, long hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

bool SeededRng::bernoulli(double p) {
    if (p >= 1.0) return true;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

namespace {

Polynomial random_form(const RingPtr& R, int d, double density, SeededRng& rng) {
    const auto monos = monomials_of_degree(R->nvars(), d);
    const long p = R->field().characteristic();
    std::vector<PolyTerm> terms;
    for (const Monomial& mono : monos)
        if (rng.bernoulli(0.5)) terms.push_back({mono, static_cast<Coeff>(rng.uniform(1, p - 1))});
    if (terms.empty())
        terms.push_back({monos[rng.uniform(0, static_cast<long>(monos.size()) - 1)],
                         static_cast<Coeff>(rng.uniform(1, p - 1))});
    if (!rng.bernoulli(density)) return Polynomial(R);
    return Polynomial::from_terms(R, std::move(terms));
}

long polynomial_reg(const GradedRing& R) { return R.is_polynomial_ring() ? 0 : ring_invariants(R).reg; }

}  // namespace

GradedPresentation random_module(std::uint64_t seed, const RandomModuleParams& params) {
    if (params.max_b <= params.max_a || params.max_a < 0)
        fail(ErrorCode::Precondition, "random modules need max_b > max_a >= 0");
    if (!(params.density > 0.0 && params.density <= 1.0)) fail(ErrorCode::Precondition, "density must lie in (0, 1]");
    if (params.n == 0) fail(ErrorCode::Precondition, "random modules need n >= 1");
    SeededRng rng(seed);
    RingPtr R = make_ring(params.characteristic, params.p_vars);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<int> a;
        for (std::size_t i = 0; i < params.n; ++i) a.push_back(static_cast<int>(rng.uniform(0, params.max_a)));
        const int amin = *std::min_element(a.begin(), a.end());
        std::vector<Column> cols;
        std::vector<std::optional<int>> hints;
        int retries = 0;
        while (cols.size() < params.m && retries < 1000) {
            const int bj = static_cast<int>(rng.uniform(amin + 1, params.max_b));
            Column c;
            bool nonzero = false;
            for (int ai : a) {
                Polynomial f = bj > ai ? random_form(R, bj - ai, params.density, rng) : Polynomial(R);
                nonzero |= !f.is_zero();
                c.push_back(std::move(f));
            }
            if (!nonzero) {
                ++retries;
                continue;
            }
            cols.push_back(std::move(c));
            hints.push_back(bj);
        }
        if (cols.size() < params.m) continue;
        auto M = minimal_presentation(validate_presentation(GradedRing(R), a, std::move(cols), std::move(hints)));
        if (M) return *M;
    }
    fail(ErrorCode::Internal, "random module generation kept producing the zero module");
}

Polynomial random_linear_form(const RingPtr& ring, SeededRng& rng) {
    std::vector<PolyTerm> terms;
    const long p = ring->field().characteristic();
    for (std::size_t v = 0; v < ring->nvars(); ++v)
        terms.push_back({Monomial::variable(v), static_cast<Coeff>(rng.uniform(1, p - 1))});
    return Polynomial::from_terms(ring, std::move(terms));
}

std::optional<bool> BoundEntry::pass() const {
    if (!applicable || !value || !computed) return std::nullopt;
    return BigInt(*computed) <= *value;
}

bool BoundReport::sound() const {
    for (const auto& e : bounds)
        if (e.gating && e.pass() == false) return false;
    return true;
}

const BoundEntry* BoundReport::find(const std::string& id) const {
    for (const auto& e : bounds)
        if (e.id == id) return &e;
    return nullptr;
}

BoundReport audit(const GradedPresentation& input, const AuditOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    auto mp = minimal_presentation(input);
    if (!mp) fail(ErrorCode::ZeroModule, "audit of the zero module");
    const GradedPresentation& M = *mp;
    BoundReport rep;
    const GradedRing& R = M.ring();
    if (R.is_polynomial_ring())
        rep.ring = {static_cast<long>(R.nvars()), 1, 0, true};
    else
        rep.ring = ring_invariants(R);
    const ModuleInvariants inv = module_invariants(M);
    rep.betti = inv.betti;
    rep.reg = inv.betti.regularity().value();
    rep.delta = inv.hilbert.dimension.value();
    rep.c = rep.ring.dim - rep.delta;
    rep.multiplicity = inv.hilbert.multiplicity;
    rep.a = M.twists_descending();
    rep.b = M.degrees_descending();
    rep.n = static_cast<long>(M.rows());
    rep.m = static_cast<long>(M.cols());
    const BoundInputs in = BoundInputs::make(rep.a, rep.b, rep.ring.dim, rep.ring.reg,
                                             static_cast<long>(rep.ring.degree), rep.c, rep.delta,
                                             options.B_override);
    rep.B = in.B;
    const long d = in.dim_R;

    auto add = [&](std::string id, std::string target, std::optional<long> computed, auto&& eval, bool gating = true) {
        BoundEntry e;
        e.id = std::move(id);
        e.target = std::move(target);
        e.gating = gating;
        e.computed = computed;
        try {
            e.value = eval();
            e.applicable = e.value.has_value();
            if (!e.applicable) e.note = "inapplicable";
        } catch (const AlgebraError& err) {
            e.applicable = false;
            e.note = err.what();
        }
        rep.bounds.push_back(std::move(e));
    };
    using OptBig = std::optional<BigInt>;

    // Fitting ideal
    std::optional<long> fitt_reg;
    bool fitt_zero = true;
    if (options.fitting) {
        auto f = fitting_ideal_0(M);
        f.erase(std::remove_if(f.begin(), f.end(), [](const Polynomial& p) { return p.is_zero(); }), f.end());
        fitt_zero = f.empty();
        if (!fitt_zero) fitt_reg = regularity(cyclic_presentation(R, f));
    }
    auto fitt_value = [&](auto&& bound) -> OptBig {
        if (!options.fitting) return std::nullopt;
        if (fitt_zero) fail(ErrorCode::Precondition, "Fitt0 = 0");
        return bound();
    };

    // Symmetric powers
    std::vector<std::optional<long>> sym_reg(options.max_sym_l + 1);
    std::vector<std::string> sym_skip(options.max_sym_l + 1);
    sym_reg[1] = rep.reg;
    for (int l = 2; options.symmetric && l <= options.max_sym_l; ++l) {
        if (binomial(rep.n + l - 1, l) > options.max_sym_rank) {
            sym_skip[l] = "symmetric power too large";
            continue;
        }
        sym_reg[l] = regularity(sym_power(M, l));
    }
    auto sym_target = [](int l) { return l == 1 ? std::string("reg(M)") : "reg(Sym^" + std::to_string(l) + " M)"; };
    auto sym_value = [&](int l, auto&& bound) -> OptBig {
        if (!sym_reg[l]) fail(ErrorCode::Unsupported, sym_skip[l].empty() ? "not computed" : sym_skip[l]);
        return bound();
    };

    if (d <= 1) {
        add("prop20.fitt", "reg(R/Fitt0)", fitt_reg, [&] { return fitt_value([&] { return prop20_bounds(in, 1).fitt; }); });
        for (int l = 1; l <= options.max_sym_l; ++l)
            add("prop20.sym" + std::to_string(l), sym_target(l), sym_reg[l],
                [&] { return sym_value(l, [&] { return prop20_bounds(in, l).sym; }); });
    }
    if (d >= 2 && rep.delta <= 1) {
        add("thm21.fitt", "reg(R/Fitt0)", fitt_reg, [&] { return fitt_value([&] { return thm21_bounds(in, 1).fitt; }); });
        for (int l = 1; l <= options.max_sym_l; ++l)
            add("thm21.sym" + std::to_string(l), sym_target(l), sym_reg[l],
                [&] { return sym_value(l, [&] { return thm21_bounds(in, l).sym; }); });
    }
    if (rep.delta <= 1) add("cor24", "reg(M)", rep.reg, [&] { return OptBig(cor24_bound(in)); });
    add("thm35", "reg(M)", rep.reg, [&] {
        if (!rep.ring.cohen_macaulay) fail(ErrorCode::Precondition, "ring is not Cohen-Macaulay");
        return OptBig(thm35_bound(in));
    });
    if (rep.delta <= 1) {
        if (options.fitting && M.cols() >= M.rows())
            add("lemma22.fitt", "reg(R/Fitt0)", fitt_reg, [&] {
                return fitt_value([&] { return OptBig(lemma22_bound(complex_terms(M, 0), in.reg_R, d)); });
            });
        for (int l = 1; l <= options.max_sym_l; ++l)
            add("lemma22.sym" + std::to_string(l), sym_target(l), sym_reg[l],
                [&] { return sym_value(l, [&] { return OptBig(lemma22_bound(complex_terms(M, l), in.reg_R, d)); }); });
    }
    const std::optional<long> deg =
        rep.multiplicity ? std::optional<long>(static_cast<long>(*rep.multiplicity)) : std::nullopt;
    if (rep.c > 0 && rep.ring.cohen_macaulay) {
        add("prop33", "deg(M)", deg, [&] { return OptBig(prop33_degree_bound(rep.a, rep.b, rep.c, in.deg_R).sum_form); });
        add("cor34", "deg(M)", deg, [&] { return OptBig(prop33_degree_bound(rep.a, rep.b, rep.c, in.deg_R).cor34_form); });
        const bool exact = rep.m == rep.c + rep.n - 1;
        add("rmk37", "reg(M)", rep.reg,
            [&] { return OptBig(rmk37_refined(rep.a, rep.b, rep.c, rep.delta, in.deg_R, in.reg_R).value); }, !exact);
    }
    if (rep.delta >= 2 && rep.ring.cohen_macaulay)
        for (int l = 1; l <= options.max_sym_l; ++l)
            add("rmk38.sym" + std::to_string(l), sym_target(l), sym_reg[l],
                [&] { return sym_value(l, [&] { return OptBig(rmk38_sym_bound(in, in.a.front(), l)); }); });
    if (rep.n == 1 && R.is_polynomial_ring() && rep.m > 0 && rep.a.front() == 0) {
        const long p = static_cast<long>(R.nvars());
        const IdealBounds ib = ideal_bounds(p, in.B, rep.c, 1, in.deg_R, in.reg_R);
        const long reg_I = rep.reg + 1;
        auto ideal = [&](const char* id, const OptBig& v, bool gating) {
            add(id, "reg(I)", reg_I, [&] { return v; }, gating);
        };
        ideal("ex36.general", rep.delta >= 2 ? ib.general_c : std::nullopt, true);
        ideal("ex36.small_p", ib.small_p, true);
        ideal("ex36.large_p", ib.large_p, true);
        ideal("ex36.refined", ib.refined, true);
        ideal("caviglia_sbarra", ib.caviglia_sbarra, false);
        ideal("brodmann_goetsch", ib.brodmann_goetsch, false);
        ideal("galligo_giusti", ib.galligo_giusti, false);
        ideal("bayer_mumford", ib.bayer_mumford, false);
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace {

HilbertData hilbert_or_zero(const GradedPresentation& M) { return hilbert_data(M); }

H0Profile h0_or_empty(const GradedPresentation& M) {
    if (hilbert_or_zero(M).is_zero_module()) return {};
    return h0_profile(M).profile;
}

long sum_above(const H0Profile& p, int mu) {
    long s = 0;
    for (auto it = p.h0_by_degree.upper_bound(mu); it != p.h0_by_degree.end(); ++it) s += it->second;
    return s;
}

}  // namespace

Lemma31Report lemma31_check(const GradedPresentation& M, const Polynomial& l) {
    const ColonKernel K = colon_kernel(M, l);
    if (!K.length) fail(ErrorCode::InfiniteLength, "0 :_M l has infinite length");
    const H0Result h = h0_profile(M);
    const H0Profile& hM = h.profile;
    const GradedPresentation Mbar = quotient_by_linear(M, l);
    const H0Profile hbar = h0_or_empty(Mbar);
    const H0Profile hbarp = h0_or_empty(quotient_by_linear(h.saturated, l));

    Lemma31Report rep;
    rep.k_length = K.length;
    // Hilbert function of K, as a finite map degree -> length
    std::map<int, long> kf;
    if (!K.hilbert.is_zero_module()) {
        const LaurentPoly& series = K.hilbert.reduced;
        for (int e = series.low(); e <= series.high(); ++e)
            if (series.coefficient(e) != 0) kf[e] = series.coefficient(e);
    }
    int lo = *std::min_element(M.row_twists().begin(), M.row_twists().end()), hi = lo;
    auto widen = [&](const auto& m) {
        for (const auto& [e, v] : m) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    };
    widen(kf);
    widen(hM.h0_by_degree);
    widen(hbar.h0_by_degree);
    widen(hbarp.h0_by_degree);
    rep.mu_low = lo - 2;
    rep.mu_high = hi + 2;

    for (int mu = rep.mu_low; mu <= rep.mu_high; ++mu) {
        long lhs = 0;
        for (auto it = kf.lower_bound(mu); it != kf.end(); ++it) lhs += it->second;
        long rhs = hM.at(mu) + sum_above(hbar, mu) - sum_above(hbarp, mu);
        if (lhs != rhs) rep.identity_residuals.emplace_back(mu, lhs - rhs);
    }
    rep.a = hM.empty() ? 1 : hM.a0.value() - hM.indeg.value() + 1;
    for (int mu = rep.mu_low - static_cast<int>(rep.a); mu <= rep.mu_high; ++mu) {
        long rhs = 0;
        for (long j = 1; j <= rep.a; ++j) rhs += hbar.at(mu + j) - hbarp.at(mu + j);
        if (hM.at(mu + static_cast<int>(rep.a)) > rhs) rep.inequality_failures.push_back(mu);
    }
    const PresentationDegrees pd = presentation_degrees(M);
    rep.reg = regularity(M);
    ExtDegree mu_star = max(max(pd.b0 + (pd.h - 1), pd.b1 - 1), ExtDegree(regularity(Mbar) + 1));
    rep.mu_star = mu_star.value();
    for (long mu = rep.mu_star; mu <= rep.mu_star + 1; ++mu)
        if (rep.reg > mu - 1 + hM.at(static_cast<int>(mu))) rep.threshold_ok = false;
    return rep;
}

TowerReport lemma32_tower(const GradedPresentation& M, std::vector<Polynomial> forms, std::uint64_t seed,
                          std::optional<long> s) {
    for (int t : M.row_twists())
        if (t < 0) fail(ErrorCode::Precondition, "tower needs generators in nonnegative degrees");
    const HilbertData hd = hilbert_data(M);
    if (hd.is_zero_module()) fail(ErrorCode::ZeroModule, "tower of the zero module");
    TowerReport rep;
    const bool random = forms.empty();
    rep.s = random ? (s ? *s : std::max(0L, hd.dimension.value() - 1)) : static_cast<long>(forms.size()) - 1;
    if (rep.s < 0) fail(ErrorCode::Precondition, "tower needs at least one form");
    const PresentationDegrees pd = presentation_degrees(M);
    const ExtDegree base = max(pd.b1 - 2, pd.b0 + (pd.h - 2));
    rep.reg = regularity(M);
    SeededRng rng(seed, 32);

    GradedPresentation cur = M;
    for (long i = 0; i <= rep.s; ++i) {
        std::optional<Polynomial> l;
        std::optional<std::int64_t> len;
        if (!random) {
            l = forms[i];
            len = colon_kernel(cur, *l).length;
            if (!len) fail(ErrorCode::InfiniteLength, "0 :_{M_i} l_{i+1} has infinite length");
        } else {
            for (int attempt = 0; attempt < 20 && !len; ++attempt) {
                l = random_linear_form(M.base(), rng);
                len = colon_kernel(cur, *l).length;
            }
            if (!len) {
                rep.found_forms = false;
                return rep;
            }
        }
        TowerStep st{static_cast<std::size_t>(i), cur, regularity(cur), *len, 0, 0, *l};
        st.r = max(base, ExtDegree(st.reg)).value();
        st.Q = 1 + std::max<long>(st.r, static_cast<long>(st.k_length));
        cur = quotient_by_linear(cur, *l);
        rep.steps.push_back(std::move(st));
    }
    for (std::size_t i = 0; i + 1 < rep.steps.size(); ++i)
        if (rep.steps[i].Q > rep.steps[i + 1].Q * rep.steps[i + 1].Q) rep.failed_steps.push_back(i);
    rep.final_bound = power(BigInt(rep.steps.back().Q), power(BigInt(2), rep.s));
    rep.final_ok = BigInt(rep.reg) <= rep.final_bound;
    return rep;
}

MayrMeyerInfo mayr_meyer(int level, int d) {
    if (level < 1 || level > 2) fail(ErrorCode::Precondition, "Mayr-Meyer level must be 1 or 2");
    if (d < 1) fail(ErrorCode::Precondition, "Mayr-Meyer exponent must be positive");
    std::vector<std::string> names{"s", "f"};
    for (int r = 0; r < level; ++r) {
        const std::string k = std::to_string(r);
        names.push_back("S" + k);
        names.push_back("F" + k);
        for (int j = 1; j <= 4; ++j) names.push_back("b" + k + std::to_string(j));
        for (int j = 1; j <= 4; ++j) names.push_back("c" + k + std::to_string(j));
    }
    names.push_back("h");
    RingPtr R = make_ring(101, names);
    auto S = [](int r) { return "S" + std::to_string(r); };
    auto F = [](int r) { return "F" + std::to_string(r); };
    auto b = [](int r, int j) { return "b" + std::to_string(r) + std::to_string(j); };
    auto c = [](int r, int j) { return "c" + std::to_string(r) + std::to_string(j); };
    std::vector<std::string> gens;
    for (int j = 1; j <= 4; ++j)
        gens.push_back(S(0) + "*" + c(0, j) + " - " + F(0) + "*" + c(0, j) + "*" + b(0, j) + "^" + std::to_string(d));
    for (int r = 1; r < level; ++r) {
        gens.push_back(S(r) + " - " + S(r - 1) + "*" + c(r - 1, 1));
        gens.push_back(F(r) + " - " + S(r - 1) + "*" + c(r - 1, 4));
        gens.push_back(S(r - 1) + "*" + c(r - 1, 2) + " - " + S(r - 1) + "*" + c(r - 1, 3));
        gens.push_back(F(r - 1) + "*" + c(r - 1, 2) + " - " + F(r - 1) + "*" + c(r - 1, 3));
        for (int j = 1; j <= 4; ++j)
            gens.push_back(S(r - 1) + "*" + c(r - 1, 3) + "*" + c(r, j) + " - " + S(r - 1) + "*" + c(r - 1, 2) + "*" +
                           c(r, j) + "*" + b(r, j));
    }
    gens.push_back("s - " + S(level - 1) + "*" + c(level - 1, 1));
    gens.push_back("f - " + S(level - 1) + "*" + c(level - 1, 4));

    const std::size_t hv = names.size() - 1;
    std::vector<Polynomial> ideal;
    int top = 0;
    for (const std::string& g : gens) {
        Polynomial p = parse_polynomial(R, g);
        const int deg = static_cast<int>(p.degree().value());
        std::vector<PolyTerm> terms;
        for (const PolyTerm& t : p.terms())
            terms.push_back({t.mono * Monomial::variable(hv, deg - t.mono.degree()), t.coef});
        ideal.push_back(Polynomial::from_terms(R, std::move(terms)));
        top = std::max(top, deg);
    }
    MayrMeyerInfo info{cyclic_presentation(GradedRing(R), ideal), ideal.size(), top, names.size()};
    return info;
}

}  // namespace regbound
