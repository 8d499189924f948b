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

#ifndef REGBOUND_VERIFY_HPP
#define REGBOUND_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "regbound/bounds.hpp"
#include "regbound/presentation.hpp"
#include "regbound/resolution.hpp"

namespace regbound {

/// Deterministic stream derived from (master seed, index).
class SeededRng {
   public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t index = 0);
    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    /// True with probability p.
    bool bernoulli(double p);

   private:
    std::mt19937_64 engine_;
};

struct RandomModuleParams {
    std::size_t p_vars = 3;
    std::uint32_t characteristic = 101;
    std::size_t n = 2;
    std::size_t m = 3;
    int max_a = 1;
    int max_b = 3;
    double density = 1.0;
};

GradedPresentation random_module(std::uint64_t seed, const RandomModuleParams& params);

/// Homogeneous linear form with all coefficients nonzero.
Polynomial random_linear_form(const RingPtr& ring, SeededRng& rng);

struct BoundEntry {
    std::string id;
    std::string target;  // "reg(M)", "reg(R/Fitt0)", "reg(Sym^l M)", "deg(M)", "reg(I)"
    std::optional<BigInt> value;
    bool applicable = false;
    bool gating = true;
    std::optional<long> computed;
    std::string note;

    /// Empty unless applicable and computed.
    std::optional<bool> pass() const;
};

struct BoundReport {
    std::string instance;
    std::uint64_t seed = 0;
    long reg = 0;
    long delta = 0;
    long c = 0;
    long n = 0, m = 0, B = 1;
    std::vector<int> a, b;  // minimal presentation, descending
    std::optional<std::int64_t> multiplicity;
    RingInvariants ring{};
    BettiTable betti;
    std::vector<BoundEntry> bounds;
    double millis = 0;

    /// No gating bound fails.
    bool sound() const;
    const BoundEntry* find(const std::string& id) const;
};

struct AuditOptions {
    int max_sym_l = 3;
    std::size_t max_sym_rank = 20;
    std::optional<long> B_override;
    bool fitting = true;
    bool symmetric = true;
};

BoundReport audit(const GradedPresentation& M, const AuditOptions& options = {});

struct Lemma31Report {
    int mu_low = 0, mu_high = 0;
    long a = 1;
    long reg = 0;
    long mu_star = 0;
    /// mu with lambda(K_{>=mu}) minus the right side of identity (i), nonzero entries only.
    std::vector<std::pair<int, long>> identity_residuals;
    /// mu where inequality (ii) fails.
    std::vector<int> inequality_failures;
    bool threshold_ok = true;
    std::optional<std::int64_t> k_length;

    bool ok() const { return identity_residuals.empty() && inequality_failures.empty() && threshold_ok; }
};

Lemma31Report lemma31_check(const GradedPresentation& M, const Polynomial& l);

struct TowerStep {
    std::size_t i = 0;
    GradedPresentation module;
    long reg = 0;
    std::int64_t k_length = 0;
    long r = 0;
    long Q = 0;
    Polynomial form;
};

struct TowerReport {
    std::vector<TowerStep> steps;
    long s = 0;
    long reg = 0;
    std::vector<std::size_t> failed_steps;  // i with Q_i > Q_{i+1}^2
    bool final_ok = true;                   // reg(M) <= Q_s^(2^s)
    BigInt final_bound;
    bool found_forms = true;

    bool ok() const { return found_forms && failed_steps.empty() && final_ok; }
};

/// Uses the given forms l_1..l_{s+1} when nonempty, otherwise random ones with s = delta - 1.
TowerReport lemma32_tower(const GradedPresentation& M, std::vector<Polynomial> forms = {},
                          std::uint64_t seed = 1, std::optional<long> s = std::nullopt);

struct MayrMeyerInfo {
    GradedPresentation presentation;
    std::size_t generator_count = 0;
    int max_degree = 0;
    std::size_t variable_count = 0;
};

MayrMeyerInfo mayr_meyer(int level, int d = 2);

}  // namespace regbound

#endif
