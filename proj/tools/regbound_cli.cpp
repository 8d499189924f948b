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

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "regbound/complexes.hpp"
#include "regbound/errors.hpp"
#include "regbound/format.hpp"
#include "regbound/hilbert.hpp"
#include "regbound/modops.hpp"
#include "regbound/parse.hpp"
#include "regbound/report.hpp"
#include "regbound/resolution.hpp"
#include "regbound/verify.hpp"

using namespace regbound;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string file;
    bool json = false;
    bool csv = false;
    std::optional<long> B;
    int l = 1;
    std::uint64_t seed = 1;
    int trials = 1;
    std::string order;
    std::string linear;
    bool audit = false;
    int level = 1;
    RandomModuleParams random;
};

constexpr int kUsage = 1;
constexpr int kGatingFailure = 2;

std::optional<MonomialOrder> order_of(const Options& o) {
    if (o.order.empty()) return std::nullopt;
    return o.order == "lex" ? MonomialOrder::Lex : MonomialOrder::GRevLex;
}

GradedPresentation load(const Options& o) { return read_file(o.file, order_of(o)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json instance_json(const Options& o) { return {{"id", o.file}, {"seed", nullptr}}; }

int cmd_reg(const Options& o) {
    auto M = load(o);
    long r = regularity(M);
    if (o.json)
        emit({{"instance", instance_json(o)}, {"computed", {{"reg", r}}}});
    else
        std::cout << "reg = " << r << "\n";
    return 0;
}

int cmd_betti(const Options& o) {
    auto M = load(o);
    BettiTable t = betti_table(M);
    if (o.json) {
        emit({{"instance", instance_json(o)},
              {"computed",
               {{"betti", betti_to_json(t)},
                {"reg", t.empty() ? json(nullptr) : json(t.regularity().value())},
                {"pd", t.length()}}}});
    } else {
        std::cout << t.to_string();
    }
    return 0;
}

int cmd_hilbert(const Options& o) {
    auto M = load(o);
    HilbertData h = hilbert_data(M);
    json j = {{"numerator", h.numerator.to_string()},
              {"dim", h.is_zero_module() ? json(nullptr) : json(h.dimension.value())},
              {"codim", h.codimension},
              {"multiplicity", h.multiplicity ? json(*h.multiplicity) : json(nullptr)},
              {"length", h.length ? json(*h.length) : json(nullptr)}};
    if (o.json) {
        emit({{"instance", instance_json(o)}, {"computed", j}});
    } else {
        std::cout << "numerator = " << h.numerator.to_string() << "\n";
        std::cout << "dim = " << h.dimension << ", codim = " << h.codimension << "\n";
        if (h.multiplicity) std::cout << "deg = " << *h.multiplicity << "\n";
        if (h.length) std::cout << "length = " << *h.length << "\n";
    }
    return 0;
}

int print_report(const BoundReport& r, const Options& o) {
    if (o.json)
        emit(report_to_json(r));
    else if (o.csv)
        std::cout << csv_header() << "\n" << csv_row(r) << "\n";
    else
        std::cout << report_table(r);
    return r.sound() ? 0 : kGatingFailure;
}

int cmd_audit(const Options& o) {
    AuditOptions ao;
    ao.B_override = o.B;
    auto r = audit(load(o), ao);
    r.instance = o.file;
    return print_report(r, o);
}

int cmd_bounds(const Options& o) {
    AuditOptions ao;
    ao.B_override = o.B;
    ao.max_sym_l = std::max(1, o.l);
    auto r = audit(load(o), ao);
    r.instance = o.file;
    if (o.json) {
        emit(report_to_json(r));
    } else {
        for (const auto& e : r.bounds)
            if (e.applicable) std::cout << e.id << " = " << e.value->str() << "\n";
    }
    return r.sound() ? 0 : kGatingFailure;
}

int cmd_sym(const Options& o) {
    auto M = load(o);
    auto S = sym_power(M, o.l);
    auto mp = minimal_presentation(S);
    long r = mp ? regularity(*mp) : 0;
    if (o.json) {
        emit({{"instance", instance_json(o)},
              {"computed", {{"l", o.l}, {"reg", mp ? json(r) : json(nullptr)}, {"presentation", serialize(mp ? *mp : S)}}}});
    } else {
        std::cout << serialize(mp ? *mp : S);
        if (mp)
            std::cout << "# reg = " << r << "\n";
        else
            std::cout << "# zero module\n";
    }
    return 0;
}

int cmd_fitt(const Options& o) {
    auto M = load(o);
    auto f = fitting_ideal_0(M);
    std::vector<Polynomial> nz;
    for (auto& p : f)
        if (!p.is_zero()) nz.push_back(p);
    std::optional<long> r;
    if (!nz.empty()) r = regularity(cyclic_presentation(M.ring(), nz));
    json gens = json::array();
    for (auto& p : nz) gens.push_back(p.to_string());
    if (o.json) {
        emit({{"instance", instance_json(o)}, {"computed", {{"generators", gens}, {"reg", r ? json(*r) : json(nullptr)}}}});
    } else {
        if (nz.empty()) std::cout << "Fitt0 = 0\n";
        for (auto& p : nz) std::cout << p << "\n";
        if (r) std::cout << "reg(R/Fitt0) = " << *r << "\n";
    }
    return 0;
}

int cmd_complex(const Options& o) {
    auto M = load(o);
    auto ct = complex_terms(M, o.l);
    long dim_R = M.ring().is_polynomial_ring() ? static_cast<long>(M.base()->nvars()) : ring_invariants(M.ring()).dim;
    long reg_R = M.ring().is_polynomial_ring() ? 0 : ring_invariants(M.ring()).reg;
    long bound = lemma22_bound(ct, reg_R, dim_R);
    json terms = json::array();
    for (const auto& t : ct.terms)
        terms.push_back({{"kind", t.kind == ComplexTerm::Kind::L ? "L" : "N"},
                         {"s", t.s},
                         {"position", t.position},
                         {"rank", t.rank()},
                         {"twists", t.twists}});
    if (o.json) {
        emit({{"instance", instance_json(o)},
              {"computed", {{"l", o.l}, {"sigma", ct.sigma}, {"terms", terms}, {"lemma22", bound}}}});
    } else {
        for (const auto& t : ct.terms) {
            std::cout << "position " << t.position << ": " << (t.kind == ComplexTerm::Kind::L ? "L_" : "N_") << t.s
                      << " rank " << t.rank() << " twists";
            for (int w : t.twists) std::cout << ' ' << w;
            std::cout << "\n";
        }
        std::cout << "complex bound = " << bound << "\n";
    }
    return 0;
}

Polynomial pick_form(const GradedPresentation& M, const Options& o) {
    if (!o.linear.empty()) {
        Polynomial l = parse_polynomial(M.base(), o.linear);
        if (!l.is_zero() && (!l.is_homogeneous() || l.degree().value() != 1))
            fail(ErrorCode::Precondition, "--linear must be a linear form");
        return l;
    }
    SeededRng rng(o.seed, 31);
    for (int attempt = 0; attempt < 20; ++attempt) {
        Polynomial l = random_linear_form(M.base(), rng);
        if (colon_kernel(M, l).length) return l;
    }
    fail(ErrorCode::InfiniteLength, "no linear form with a finite-length colon found in 20 draws");
}

int cmd_lemma31(const Options& o) {
    auto M = load(o);
    Polynomial l = pick_form(M, o);
    auto rep = lemma31_check(M, l);
    json residuals = json::array();
    for (auto [mu, v] : rep.identity_residuals) residuals.push_back({{"mu", mu}, {"residual", v}});
    if (o.json) {
        emit({{"instance", instance_json(o)},
              {"computed",
               {{"form", l.to_string()},
                {"length_K", rep.k_length ? json(*rep.k_length) : json(nullptr)},
                {"window", {rep.mu_low, rep.mu_high}},
                {"a", rep.a},
                {"mu_star", rep.mu_star},
                {"reg", rep.reg}}},
              {"verdicts",
               {{{"id", "identity"}, {"verdict", rep.identity_residuals.empty() ? "pass" : "fail"}},
                {{"id", "shift"}, {"verdict", rep.inequality_failures.empty() ? "pass" : "fail"}},
                {{"id", "threshold"}, {"verdict", rep.threshold_ok ? "pass" : "fail"}}}},
              {"residuals", residuals}});
    } else {
        std::cout << "form l = " << l << "\n";
        std::cout << "length(0 :_M l) = " << *rep.k_length << "\n";
        std::cout << "identity: " << (rep.identity_residuals.empty() ? "pass" : "fail") << " on [" << rep.mu_low << ", "
                  << rep.mu_high << "]\n";
        std::cout << "shift inequality (a = " << rep.a << "): " << (rep.inequality_failures.empty() ? "pass" : "fail")
                  << "\n";
        std::cout << "threshold at mu* = " << rep.mu_star << ": " << (rep.threshold_ok ? "pass" : "fail") << " (reg = "
                  << rep.reg << ")\n";
    }
    return rep.ok() ? 0 : kGatingFailure;
}

int cmd_tower(const Options& o) {
    auto M = load(o);
    auto t = lemma32_tower(M, {}, o.seed);
    if (!t.found_forms) {
        std::cerr << "no linear form with a finite-length colon found\n";
        return kUsage;
    }
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"i", s.i}, {"reg", s.reg}, {"length_K", s.k_length}, {"r", s.r}, {"Q", s.Q}, {"form", s.form.to_string()}});
    if (o.json) {
        emit({{"instance", instance_json(o)},
              {"computed", {{"s", t.s}, {"reg", t.reg}, {"steps", steps}, {"final_bound", big_to_json(t.final_bound)}}},
              {"verdicts",
               {{{"id", "squares"}, {"verdict", t.failed_steps.empty() ? "pass" : "fail"}},
                {{"id", "final"}, {"verdict", t.final_ok ? "pass" : "fail"}}}}});
    } else {
        for (const auto& s : t.steps)
            std::cout << "i = " << s.i << ": reg = " << s.reg << ", length K = " << s.k_length << ", r = " << s.r
                      << ", Q = " << s.Q << "\n";
        std::cout << "reg(M) = " << t.reg << " <= Q_s^(2^s) = " << t.final_bound << ": "
                  << (t.final_ok ? "pass" : "fail") << "\n";
        std::cout << "Q_i <= Q_{i+1}^2: " << (t.failed_steps.empty() ? "pass" : "fail") << "\n";
    }
    return t.ok() ? 0 : kGatingFailure;
}

int cmd_random(const Options& o) {
    int code = 0;
    json all = json::array();
    if (o.audit && o.csv) std::cout << csv_header() << "\n";
    for (int k = 0; k < o.trials; ++k) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
        auto M = random_module(seed, o.random);
        if (!o.audit) {
            if (o.json)
                all.push_back({{"seed", seed}, {"presentation", serialize(M)}});
            else
                std::cout << "# seed " << seed << "\n" << serialize(M);
            continue;
        }
        auto r = audit(M);
        r.seed = seed;
        r.instance = "random-" + std::to_string(seed);
        if (!r.sound()) code = kGatingFailure;
        if (o.json)
            all.push_back(report_to_json(r));
        else if (o.csv)
            std::cout << csv_row(r) << "\n";
        else
            std::cout << report_table(r) << "\n";
    }
    if (o.json) emit(all);
    return code;
}

int cmd_mayr_meyer(const Options& o) {
    auto info = mayr_meyer(o.level);
    if (o.json) {
        emit({{"instance", {{"id", "mayr-meyer-" + std::to_string(o.level)}, {"seed", nullptr}}},
              {"computed",
               {{"generators", info.generator_count},
                {"max_degree", info.max_degree},
                {"variables", info.variable_count},
                {"presentation", serialize(info.presentation)}}}});
    } else {
        std::cout << "# generators " << info.generator_count << ", max degree " << info.max_degree << ", variables "
                  << info.variable_count << "\n";
        std::cout << serialize(info.presentation);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regularity bounds for graded modules over prime fields"};
    app.require_subcommand(1);
    Options o;

    auto with_file = [&](CLI::App* c) {
        c->add_option("file", o.file, "presentation file")->required()->check(CLI::ExistingFile);
        c->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
    };
    auto with_output = [&](CLI::App* c) {
        c->add_flag("--json", o.json, "JSON output");
        c->add_flag("--csv", o.csv, "CSV output");
    };

    auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    auto* betti = app.add_subcommand("betti", "graded Betti table");
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series data");
    auto* aud = app.add_subcommand("audit", "computed invariants against every applicable bound");
    auto* bounds = app.add_subcommand("bounds", "bound values");
    auto* sym = app.add_subcommand("sym", "symmetric power presentation");
    auto* fitt = app.add_subcommand("fitt", "zeroth Fitting ideal");
    auto* cx = app.add_subcommand("complex", "terms of the complex E^(l)");
    auto* l31 = app.add_subcommand("lemma31", "colon length identity and threshold check");
    auto* tower = app.add_subcommand("tower", "hyperplane section tower check");
    auto* rnd = app.add_subcommand("random", "seeded random modules");
    auto* mm = app.add_subcommand("mayr-meyer", "Mayr-Meyer ideal presentation");

    for (auto* c : {reg, betti, hilbert, aud, bounds, sym, fitt, cx, l31, tower}) {
        with_file(c);
        with_output(c);
    }
    with_output(rnd);
    with_output(mm);
    for (auto* c : {aud, bounds}) c->add_option("--B", o.B, "override the degree bound B");
    for (auto* c : {bounds, sym, cx}) c->add_option("--l", o.l, "symmetric power index")->check(CLI::NonNegativeNumber);
    for (auto* c : {l31, tower, rnd}) c->add_option("--seed", o.seed, "random seed");
    l31->add_option("--linear", o.linear, "linear form");
    rnd->add_option("--trials", o.trials, "number of instances")->check(CLI::PositiveNumber);
    rnd->add_flag("--audit", o.audit, "audit each instance");
    rnd->add_option("--vars", o.random.p_vars, "number of variables")->check(CLI::Range(1, 32));
    rnd->add_option("--n", o.random.n, "number of generators")->check(CLI::PositiveNumber);
    rnd->add_option("--m", o.random.m, "number of relations");
    rnd->add_option("--max-a", o.random.max_a, "largest generator degree");
    rnd->add_option("--max-b", o.random.max_b, "largest relation degree");
    rnd->add_option("--density", o.random.density, "probability an entry is nonzero");
    mm->add_option("--level", o.level, "construction level (1 or 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*reg) return cmd_reg(o);
        if (*betti) return cmd_betti(o);
        if (*hilbert) return cmd_hilbert(o);
        if (*aud) return cmd_audit(o);
        if (*bounds) return cmd_bounds(o);
        if (*sym) return cmd_sym(o);
        if (*fitt) return cmd_fitt(o);
        if (*cx) return cmd_complex(o);
        if (*l31) return cmd_lemma31(o);
        if (*tower) return cmd_tower(o);
        if (*rnd) return cmd_random(o);
        if (*mm) return cmd_mayr_meyer(o);
    } catch (const AlgebraError& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
