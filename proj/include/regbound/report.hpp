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

#ifndef REGBOUND_REPORT_HPP
#define REGBOUND_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "regbound/verify.hpp"

namespace regbound {

/// Integer when it fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json big_to_json(const BigInt& v);

nlohmann::ordered_json betti_to_json(const BettiTable& betti);

/// Keys: instance, computed, bounds, verdicts, values.
nlohmann::ordered_json report_to_json(const BoundReport& report);

/// Fixed verdict columns, so rows from different instances line up.
const std::vector<std::string>& csv_bound_ids();
std::string csv_header();
std::string csv_row(const BoundReport& report);

std::string report_table(const BoundReport& report);

}  // namespace regbound

#endif
