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

#include "regbound/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "regbound/errors.hpp"

namespace regbound {

namespace {

void sort_desc(std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

// Elementary symmetric polynomials sigma_0..sigma_k of xs.
std::vector<BigInt> elementary(const std::vector<int>& xs, long k) {
    std::vector<BigInt> e(k + 1, 0);
    e[0] = 1;
    for (int x : xs)
        for (long j = k; j >= 1; --j) e[j] += e[j - 1] * x;
    return e;
}

// Complete homogeneous symmetric polynomials h_0..h_k of xs.
std::vector<BigInt> complete(const std::vector<int>& xs, long k) {
    std::vector<BigInt> h(k + 1, 0);
    h[0] = 1;
    for (int x : xs)
        for (long j = 1; j <= k; ++j) h[j] += h[j - 1] * x;
    return h;
}

// Sum over 1 <= i_1 <= ... <= i_r <= n of prod (b_{i_l + l - 1} - a_{i_l}); a ascending, b descending.
BigInt multi_index_sum(const std::vector<int>& a, const std::vector<int>& b, long r) {
    const long n = static_cast<long>(a.size());
    BigInt total = 0;
    std::function<void(long, long, BigInt)> go = [&](long ell, long start, BigInt acc) {
        if (ell > r) {
            total += acc;
            return;
        }
        for (long i = start; i <= n; ++i) go(ell + 1, i, acc * (b[i + ell - 2] - a[i - 1]));
    };
    go(1, 1, 1);
    return total;
}

BigInt tower(const BigInt& base, long delta) {
    // base^(2^(delta-2)) by repeated squaring
    BigInt v = base;
    for (long i = 2; i < delta; ++i) v *= v;
    return v;
}

}  // namespace

long derive_B(const std::vector<int>& a, const std::vector<int>& b) {
    long B = 1;
    for (int x : a) B = std::max<long>(B, x + 1L);
    for (int x : b) B = std::max<long>(B, x);
    return B;
}

BoundInputs BoundInputs::make(std::vector<int> a, std::vector<int> b, long dim_R, long reg_R, long deg_R, long c,
                              long delta, std::optional<long> B_override) {
    BoundInputs in;
    sort_desc(a);
    sort_desc(b);
    in.B = B_override ? *B_override : derive_B(a, b);
    in.a = std::move(a);
    in.b = std::move(b);
    in.dim_R = dim_R;
    in.reg_R = reg_R;
    in.deg_R = deg_R;
    in.c = c;
    in.delta = delta;
    return in;
}

long Thm21Data::D_at(long l) const {
    if (l < 0 || l >= static_cast<long>(D.size())) fail(ErrorCode::Precondition, "D_l needs l <= m");
    return D[l];
}

Thm21Data thm21_data(const BoundInputs& in) {
    Thm21Data t;
    t.D.push_back(0);
    for (int bi : in.b) t.D.push_back(t.D.back() + bi - 1);
    const long n = static_cast<long>(in.n()), m = static_cast<long>(in.m()), d = in.dim_R;
    if (n == 0) fail(ErrorCode::Precondition, "presentation has no generators");
    long bs = 0;
    for (long i = 0; i < std::min(m, n + d - 1); ++i) bs += in.b[i];
    long as = std::accumulate(in.a.begin(), in.a.end(), 0L);
    t.Delta = bs - as - (d - 1) * in.a.back() - d;
    t.m_prime_equal = m <= n + d - 2;
    return t;
}

SymFittBound prop20_bounds(const BoundInputs& in, long l) {
    if (in.dim_R > 1) fail(ErrorCode::Precondition, "this bound needs dim R <= 1");
    if (l < 1) fail(ErrorCode::Precondition, "symmetric power index must be positive");
    if (in.n() == 0) fail(ErrorCode::Precondition, "presentation has no generators");
    const long a = in.a.front();
    SymFittBound out;
    if (in.dim_R <= 0) {
        out.sym = BigInt(in.reg_R + l * a);
        out.fitt = BigInt(in.reg_R);
        return out;
    }
    if (in.m() == 0) {
        out.sym = BigInt(in.reg_R + l * a);
    } else {
        out.sym = BigInt(in.reg_R + std::max(l * a, (l - 1) * a + in.b.front() - 1));
    }
    if (in.m() >= in.n()) {
        long s = 0;
        for (std::size_t i = 0; i < in.n(); ++i) s += in.b[i] - in.a[i];
        out.fitt = BigInt(in.reg_R + std::max(0L, s - 1));
    }
    return out;
}

SymFittBound thm21_bounds(const BoundInputs& in, long l) {
    const long d = in.dim_R, n = static_cast<long>(in.n()), m = static_cast<long>(in.m());
    if (d < 2) fail(ErrorCode::Precondition, "this bound needs dim R >= 2");
    if (in.delta > 1) fail(ErrorCode::Precondition, "this bound needs dim M <= 1");
    if (m < n + d - 2) fail(ErrorCode::Precondition, "this bound needs m >= n + d - 2");
    const Thm21Data t = thm21_data(in);
    SymFittBound out;
    out.fitt = BigInt(in.reg_R + t.Delta);
    if (l < 1) return out;
    if (l <= d - 1) {
        if (t.m_prime_equal && l == d - 1)
            out.sym = BigInt(in.reg_R + t.D_at(d - 1));
        else
            out.sym = BigInt(in.reg_R + std::max(t.D_at(l), t.Delta + l * in.a.back()));
    } else if (m >= d) {
        out.sym = BigInt(in.reg_R + t.D_at(d) + (l - d) * in.a.front());
    }
    return out;
}

BigInt cor24_bound(const BoundInputs& in) {
    if (in.delta > 1) fail(ErrorCode::Precondition, "this bound needs dim M <= 1");
    if (in.dim_R <= 0 && in.n() <= 1) fail(ErrorCode::Precondition, "this bound needs dim R > 0 or n > 1");
    for (int x : in.a)
        if (x < 0 || x > in.B - 1) fail(ErrorCode::Precondition, "generator degree outside [0, B-1]");
    for (int x : in.b)
        if (x > in.B) fail(ErrorCode::Precondition, "relation degree exceeds B");
    const long d = in.dim_R, n = static_cast<long>(in.n());
    return BigInt(in.reg_R) + BigInt(d + n - 1) * in.B - d;
}

DegreeBound prop33_degree_bound(std::vector<int> a, std::vector<int> b, long c, long deg_R) {
    if (c <= 0) fail(ErrorCode::Precondition, "degree bound needs c > 0");
    const long n = static_cast<long>(a.size());
    if (n == 0) fail(ErrorCode::Precondition, "presentation has no generators");
    if (static_cast<long>(b.size()) < c + n - 1) fail(ErrorCode::Precondition, "too few relation degrees");
    std::sort(a.begin(), a.end());
    sort_desc(b);
    b.resize(c + n - 1);
    DegreeBound out;
    out.sum_form = deg_R * multi_index_sum(a, b, c);
    const auto sigma = elementary(b, c);
    const auto h = complete(a, c);
    BigInt series = 0;
    for (long p = 0; p <= c; ++p) {
        BigInt term = sigma[p] * h[c - p];
        if ((p - c) % 2 != 0) term = -term;
        series += term;
    }
    out.series_form = deg_R * series;
    BigInt prod = 1;
    for (long i = 0; i < c; ++i) prod *= b[i] - a.front();
    out.cor34_form = deg_R * binomial(c + n - 1, n - 1) * prod;
    return out;
}

BigInt thm35_bound(const BoundInputs& in) {
    if (in.n() == 0) fail(ErrorCode::ZeroModule, "bound undefined for the zero module");
    if (in.delta < 0) fail(ErrorCode::ZeroModule, "bound undefined for a module of negative dimension");
    for (int x : in.a)
        if (x < 0 || x > in.B - 1) fail(ErrorCode::Precondition, "generator degree outside [0, B-1]");
    for (int x : in.b)
        if (x > in.B) fail(ErrorCode::Precondition, "relation degree exceeds B");
    const long n = static_cast<long>(in.n()), c = in.c, B = in.B;
    if (in.delta <= 1) {
        if (c > 0) return BigInt(in.reg_R) + BigInt(in.dim_R + n - 1) * B - in.dim_R;
        return BigInt(in.reg_R + B - 1);
    }
    if (c > 0) {
        BigInt base = BigInt(in.deg_R) * (in.reg_R + (c + n) * B - c) * binomial(c + n - 1, c) * power(B, c);
        return tower(base, in.delta);
    }
    return tower(BigInt(n) * in.deg_R * (in.reg_R + B), in.delta);
}

IdealBounds ideal_bounds(long p, long B, std::optional<long> c, long n, long deg_R, long reg_R) {
    if (p < 1 || B < 1) fail(ErrorCode::Precondition, "ideal bounds need p >= 1 and B >= 1");
    IdealBounds out;
    if (c && *c > 0 && p - *c >= 2) out.general_c = tower(BigInt(*c + 1) * power(B, *c + 1), p - *c);
    if (p <= 3) out.small_p = BigInt(p * (B - 1) + 1);
    if (p >= 4) {
        out.large_p = tower(3 * power(B, 3), p - 2);
        out.refined = tower(3 * power(B, 2) * (B - 1), p - 2) + 1;
    }
    if (p >= 3) out.caviglia_sbarra = tower(BigInt(B * B + 2 * B - 1), p - 1);
    out.brodmann_goetsch = tower(BigInt(reg_R + (n + 1) * deg_R + B + 1), p + 1);
    if (p >= 2) out.galligo_giusti = tower(BigInt(2 * B), p);
    BigInt fact = 1;
    for (long i = 2; i <= p - 1; ++i) fact *= i;
    out.bayer_mumford = power(2 * B, fact);
    return out;
}

Rmk37Value rmk37_refined(std::vector<int> a, std::vector<int> b, long c, long delta, long deg_R, long reg_R) {
    const long n = static_cast<long>(a.size()), s = static_cast<long>(b.size());
    if (c <= 0) fail(ErrorCode::Precondition, "refined bound needs c > 0");
    if (n == 0) fail(ErrorCode::Precondition, "presentation has no generators");
    std::sort(a.begin(), a.end());
    sort_desc(b);
    Rmk37Value out;
    if (s == c + n - 1) {
        long v = reg_R + std::accumulate(b.begin(), b.end(), 0L) - std::accumulate(a.begin(), a.end(), 0L) -
                 c * a.front();
        out.value = v;
        out.exact_case = true;
        return out;
    }
    if (s < c + n) fail(ErrorCode::Precondition, "too few relation degrees");
    if (delta < 2) fail(ErrorCode::Precondition, "refined bound needs dim M >= 2");
    long bs = 0;
    for (long i = 0; i < c + n; ++i) bs += b[i];
    BigInt base = BigInt(deg_R) * (reg_R + bs - c) * multi_index_sum(a, b, c);
    out.value = tower(base, delta);
    return out;
}

BigInt rmk38_sym_bound(const BoundInputs& in, long a_max, long l) {
    if (l < 1) fail(ErrorCode::Precondition, "symmetric power index must be positive");
    if (a_max > in.B - 1) fail(ErrorCode::Precondition, "a_max exceeds B - 1");
    if (in.delta < 2) fail(ErrorCode::Precondition, "this bound needs dim M >= 2");
    const long n = static_cast<long>(in.n());
    const long np = static_cast<long>(binomial(n + l - 1, l));
    const long B = in.B + (l - 1) * a_max;
    const long c = in.c;
    if (c > 0) {
        BigInt base = BigInt(in.deg_R) * (in.reg_R + (c + np) * B - c) * binomial(c + np - 1, c) * power(B, c);
        return tower(base, in.delta);
    }
    return tower(BigInt(np) * in.deg_R * (in.reg_R + B), in.delta);
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt power(const BigInt& base, const BigInt& exponent) {
    if (exponent < 0) fail(ErrorCode::Precondition, "negative exponent");
    BigInt result = 1, b = base, e = exponent;
    while (e > 0) {
        if ((e & 1) != 0) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace regbound
