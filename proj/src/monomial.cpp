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

#include "regbound/monomial.hpp"

#include <algorithm>
#include <string>

#include "regbound/errors.hpp"

namespace regbound {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
    if (exponents.size() > kMaxVariables)
        fail(ErrorCode::Overflow, "at most " + std::to_string(kMaxVariables) + " variables are supported");
    Monomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > 255) fail(ErrorCode::Overflow, "exponent out of range [0, 255]");
        m.exps_[i] = static_cast<std::uint8_t>(exponents[i]);
        m.degree_ += exponents[i];
    }
    return m;
}

Monomial Monomial::variable(std::size_t index, int power) {
    if (index >= kMaxVariables) fail(ErrorCode::Overflow, "variable index out of range");
    if (power < 0 || power > 255) fail(ErrorCode::Overflow, "exponent out of range [0, 255]");
    Monomial m;
    m.exps_[index] = static_cast<std::uint8_t>(power);
    m.degree_ = power;
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        unsigned s = unsigned(exps_[i]) + other.exps_[i];
        if (s > 255) fail(ErrorCode::Overflow, "monomial exponent overflow");
        r.exps_[i] = static_cast<std::uint8_t>(s);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
    r.degree_ = degree_ - other.degree_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

int compare_shifted(const Monomial& a, const Monomial& sa, const Monomial& b, const Monomial& sb,
                    MonomialOrder order) noexcept {
    if (order == MonomialOrder::GRevLex) {
        int da = a.degree_ + sa.degree_, db = b.degree_ + sb.degree_;
        if (da != db) return da > db ? 1 : -1;
        for (int i = int(kMaxVariables) - 1; i >= 0; --i) {
            int x = a.exps_[i] + sa.exps_[i], y = b.exps_[i] + sb.exps_[i];
            if (x != y) return x < y ? 1 : -1;
        }
        return 0;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        int x = a.exps_[i] + sa.exps_[i], y = b.exps_[i] + sb.exps_[i];
        if (x != y) return x > y ? 1 : -1;
    }
    return 0;
}

namespace {

void enumerate(std::size_t nvars, std::size_t var, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        exps[var] = remaining;
        out.push_back(Monomial::from_exponents(exps));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[var] = e;
        enumerate(nvars, var + 1, remaining - e, exps, out);
    }
    exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d, MonomialOrder order) {
    std::vector<Monomial> out;
    if (d < 0 || nvars == 0) return out;
    std::vector<int> exps(nvars, 0);
    enumerate(nvars, 0, d, exps, out);
    std::sort(out.begin(), out.end(), [order](const Monomial& a, const Monomial& b) { return compare(a, b, order) > 0; });
    return out;
}

}  // namespace regbound
