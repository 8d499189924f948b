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

#include "regbound/field.hpp"

#include <string>

#include "regbound/errors.hpp"

namespace regbound {

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t characteristic) : p_(characteristic) {
    if (characteristic >= (1u << 31) || !is_prime(characteristic))
        fail(ErrorCode::NonPrime, "characteristic " + std::to_string(characteristic) + " is not a prime below 2^31");
}

Coeff PrimeField::inv(Coeff a) const {
    if (a == 0) fail(ErrorCode::Precondition, "division by zero in F_" + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrime: return "NonPrime";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NonHomogeneous: return "NonHomogeneous";
        case ErrorCode::EmptyColumn: return "EmptyColumn";
        case ErrorCode::ZeroModule: return "ZeroModule";
        case ErrorCode::Syntax: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::Precondition: return "PreconditionViolation";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::InfiniteLength: return "InfiniteLength";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::Internal: return "InternalError";
    }
    return "Unknown";
}

}  // namespace regbound
