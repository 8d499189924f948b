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

#ifndef REGBOUND_BOUNDS_HPP
#define REGBOUND_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace regbound {

using BigInt = boost::multiprecision::cpp_int;

/// Smallest B with every a_i <= B - 1 and every b_j <= B.
long derive_B(const std::vector<int>& a, const std::vector<int>& b);

struct BoundInputs {
    std::vector<int> a;  // descending
    std::vector<int> b;  // descending
    long dim_R = 0;
    long reg_R = 0;
    long deg_R = 1;
    long c = 0;
    long delta = 0;
    long B = 1;

    std::size_t n() const noexcept { return a.size(); }
    std::size_t m() const noexcept { return b.size(); }

    /// Sorts a and b descending and derives B unless an override is given.
    static BoundInputs make(std::vector<int> a, std::vector<int> b, long dim_R, long reg_R, long deg_R, long c,
                            long delta, std::optional<long> B_override = std::nullopt);
};

struct Thm21Data {
    std::vector<long> D;  // D[l] for 0 <= l <= m
    long Delta = 0;
    bool m_prime_equal = false;

    long D_at(long l) const;
};

Thm21Data thm21_data(const BoundInputs& in);

struct SymFittBound {
    std::optional<BigInt> sym;
    std::optional<BigInt> fitt;
};

SymFittBound prop20_bounds(const BoundInputs& in, long l);
SymFittBound thm21_bounds(const BoundInputs& in, long l);

BigInt cor24_bound(const BoundInputs& in);

struct DegreeBound {
    BigInt sum_form;
    BigInt series_form;
    BigInt cor34_form;
};

DegreeBound prop33_degree_bound(std::vector<int> a, std::vector<int> b, long c, long deg_R);

BigInt thm35_bound(const BoundInputs& in);

struct IdealBounds {
    std::optional<BigInt> general_c;
    std::optional<BigInt> small_p;
    std::optional<BigInt> large_p;
    std::optional<BigInt> refined;
    std::optional<BigInt> caviglia_sbarra;
    std::optional<BigInt> brodmann_goetsch;
    std::optional<BigInt> galligo_giusti;
    std::optional<BigInt> bayer_mumford;
};

IdealBounds ideal_bounds(long p_vars, long B, std::optional<long> c = std::nullopt, long n = 1, long deg_R = 1,
                         long reg_R = 0);

struct Rmk37Value {
    BigInt value;
    bool exact_case = false;
};

Rmk37Value rmk37_refined(std::vector<int> a, std::vector<int> b, long c, long delta, long deg_R, long reg_R);

BigInt rmk38_sym_bound(const BoundInputs& in, long a_max, long l);

BigInt binomial(long n, long k);
BigInt power(const BigInt& base, const BigInt& exponent);
std::string to_string(const BigInt& v);

}  // namespace regbound

#endif
