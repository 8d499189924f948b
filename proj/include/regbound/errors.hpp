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

#ifndef REGBOUND_ERRORS_HPP
#define REGBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace regbound {

enum class ErrorCode {
    NonPrime,
    RingMismatch,
    NonHomogeneous,
    EmptyColumn,
    ZeroModule,
    Syntax,
    UnknownVariable,
    Precondition,
    Unsupported,
    InfiniteLength,
    Overflow,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported through this type.
class AlgebraError : public std::runtime_error {
   public:
    AlgebraError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw AlgebraError(code, what); }

}  // namespace regbound

#endif
