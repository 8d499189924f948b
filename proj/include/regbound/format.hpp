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

#ifndef REGBOUND_FORMAT_HPP
#define REGBOUND_FORMAT_HPP

#include <string>
#include <string_view>

#include "regbound/presentation.hpp"

namespace regbound {

// Presentation files, one directive per line; '#' starts a comment.
//
//   char 101
//   vars x y z
//   order grevlex        (optional; grevlex or lex)
//   quotient             (optional block, one generator of J per line)
//   x*y - z^2
//   end
//   gens 0 0
//   rels                 (one relation per line: n comma-separated entries)
//   x, y
//   y^2, 0
//   end
//
// Each relation line becomes one column of the presentation matrix.

GradedPresentation parse_file(std::string_view text, std::optional<MonomialOrder> order_override = std::nullopt);
GradedPresentation read_file(const std::string& path, std::optional<MonomialOrder> order_override = std::nullopt);
std::string serialize(const GradedPresentation& M);

}  // namespace regbound

#endif
