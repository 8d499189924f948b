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

#include "regbound/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace regbound {

using json = nlohmann::ordered_json;

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json betti_to_json(const BettiTable& betti) {
    json out = json::array();
    for (const auto& [key, count] : betti.entries()) out.push_back({{"i", key.first}, {"j", key.second}, {"count", count}});
    return out;
}

namespace {

std::string verdict(const BoundEntry& e) {
    auto p = e.pass();
    if (!p) return "n/a";
    return *p ? "pass" : "fail";
}

}  // namespace

json report_to_json(const BoundReport& r) {
    json computed = {
        {"reg", r.reg},
        {"dim", r.delta},
        {"codim", r.c},
        {"multiplicity", r.multiplicity ? json(*r.multiplicity) : json(nullptr)},
        {"n", r.n},
        {"m", r.m},
        {"a", r.a},
        {"b", r.b},
        {"B", r.B},
        {"ring", {{"dim", r.ring.dim}, {"degree", r.ring.degree}, {"reg", r.ring.reg}, {"cohen_macaulay", r.ring.cohen_macaulay}}},
        {"betti", betti_to_json(r.betti)},
    };
    json bounds = json::array(), verdicts = json::array(), values = json::object();
    for (const auto& e : r.bounds) {
        json b = {{"id", e.id},
                  {"target", e.target},
                  {"value", e.value ? big_to_json(*e.value) : json(nullptr)},
                  {"applicable", e.applicable},
                  {"gating", e.gating},
                  {"computed", e.computed ? json(*e.computed) : json(nullptr)}};
        if (!e.note.empty() && !e.applicable) b["note"] = e.note;
        bounds.push_back(std::move(b));
        if (e.pass()) verdicts.push_back({{"id", e.id}, {"verdict", verdict(e)}, {"gating", e.gating}});
        if (e.applicable && e.value) values[e.id] = big_to_json(*e.value);
    }
    return {{"instance", {{"id", r.instance}, {"seed", r.seed}}},
            {"computed", computed},
            {"bounds", bounds},
            {"verdicts", verdicts},
            {"values", values},
            {"sound", r.sound()}};
}

const std::vector<std::string>& csv_bound_ids() {
    static const std::vector<std::string> ids{
        "prop20.fitt", "prop20.sym1", "prop20.sym2", "prop20.sym3", "thm21.fitt",   "thm21.sym1",
        "thm21.sym2",  "thm21.sym3",  "cor24",       "thm35",       "lemma22.fitt", "lemma22.sym1",
        "lemma22.sym2", "lemma22.sym3", "prop33",    "cor34",       "rmk37",        "rmk38.sym1",
        "rmk38.sym2",  "rmk38.sym3",  "ex36.general", "ex36.small_p", "ex36.large_p", "ex36.refined"};
    return ids;
}

std::string csv_header() {
    std::string h = "instance,seed,reg,dim,codim,n,m,B";
    for (const auto& id : csv_bound_ids()) h += "," + id;
    return h + ",sound";
}

std::string csv_row(const BoundReport& r) {
    std::ostringstream os;
    os << r.instance << ',' << r.seed << ',' << r.reg << ',' << r.delta << ',' << r.c << ',' << r.n << ',' << r.m
       << ',' << r.B;
    for (const auto& id : csv_bound_ids()) {
        const BoundEntry* e = r.find(id);
        os << ',' << (e ? verdict(*e) : "n/a");
    }
    os << ',' << (r.sound() ? "pass" : "fail");
    return os.str();
}

std::string report_table(const BoundReport& r) {
    std::ostringstream os;
    os << "instance " << r.instance << "\n";
    os << "reg = " << r.reg << ", dim = " << r.delta << ", codim = " << r.c;
    if (r.multiplicity) os << ", deg = " << *r.multiplicity;
    os << ", B = " << r.B << "\n";
    os << r.betti.to_string();
    os << std::left << std::setw(18) << "bound" << std::setw(18) << "target" << std::setw(12) << "computed"
       << std::setw(24) << "value" << "verdict\n";
    for (const auto& e : r.bounds) {
        std::string value = e.value ? e.value->str() : "-";
        if (value.size() > 22) value = value.substr(0, 8) + "...(" + std::to_string(value.size()) + " digits)";
        os << std::setw(18) << e.id << std::setw(18) << e.target << std::setw(12)
           << (e.computed ? std::to_string(*e.computed) : "-") << std::setw(24) << value;
        if (!e.applicable)
            os << "n/a";
        else
            os << verdict(e) << (e.gating ? "" : " (comparison)");
        os << "\n";
    }
    os << (r.sound() ? "all gating bounds hold\n" : "GATING BOUND VIOLATED\n");
    return os.str();
}

}  // namespace regbound
