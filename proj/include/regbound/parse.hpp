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

#ifndef REGBOUND_PARSE_HPP
#define REGBOUND_PARSE_HPP

#include <string_view>

#include "regbound/polynomial.hpp"

namespace regbound {

/// Parses integer-coefficient expressions with + - * ^ and parentheses.
/// Juxtaposition multiplies ("3xy" = 3*x*y when x and y are variables).
/// Diagnostics report `line` and a 1-based column offset by `column`.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line = 1, int column = 1);

}  // namespace regbound

#endif
