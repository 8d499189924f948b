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

#include "regbound/format.hpp"

#include <fstream>
#include <sstream>

#include "regbound/errors.hpp"
#include "regbound/parse.hpp"

namespace regbound {

namespace {

struct Line {
    int number;
    std::string text;
};

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void at(const Line& l, ErrorCode code, const std::string& msg) {
    fail(code, "line " + std::to_string(l.number) + ": " + msg);
}

std::pair<std::string, std::string> split_directive(const std::string& s) {
    std::size_t sp = s.find_first_of(" \t");
    if (sp == std::string::npos) return {s, {}};
    return {s.substr(0, sp), trim(s.substr(sp))};
}

long parse_int(const Line& l, const std::string& tok) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        at(l, ErrorCode::Syntax, "expected an integer, found '" + tok + "'");
    }
}

}  // namespace

GradedPresentation parse_file(std::string_view text, std::optional<MonomialOrder> order_override) {
    std::vector<Line> lines;
    {
        std::istringstream in{std::string(text)};
        int n = 0;
        for (std::string raw; std::getline(in, raw);) {
            ++n;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            std::string t = trim(raw);
            if (!t.empty()) lines.push_back({n, t});
        }
    }
    std::optional<std::uint32_t> characteristic;
    std::vector<std::string> names;
    MonomialOrder order = MonomialOrder::GRevLex;
    std::vector<Line> quotient_lines, rel_lines;
    std::optional<std::vector<int>> gens;
    RingPtr ring;

    auto block = [&](std::size_t& k, std::vector<Line>& out, const Line& head) {
        for (++k; k < lines.size(); ++k) {
            if (lines[k].text == "end") return;
            out.push_back(lines[k]);
        }
        at(head, ErrorCode::Syntax, "block is not terminated by 'end'");
    };

    bool have_rels = false;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const Line& l = lines[k];
        auto [key, rest] = split_directive(l.text);
        if (key == "char") {
            long p = parse_int(l, rest);
            if (p < 2 || p > 0xFFFFFFFFL || !is_prime(static_cast<std::uint64_t>(p)))
                at(l, ErrorCode::NonPrime, "characteristic " + rest + " is not a supported prime");
            characteristic = static_cast<std::uint32_t>(p);
        } else if (key == "vars") {
            std::istringstream in(rest);
            for (std::string v; in >> v;) names.push_back(v);
            if (names.empty()) at(l, ErrorCode::Syntax, "no variables declared");
        } else if (key == "order") {
            if (rest == "grevlex")
                order = MonomialOrder::GRevLex;
            else if (rest == "lex")
                order = MonomialOrder::Lex;
            else
                at(l, ErrorCode::Syntax, "unknown order '" + rest + "'");
        } else if (key == "quotient") {
            block(k, quotient_lines, l);
        } else if (key == "gens") {
            std::istringstream in(rest);
            std::vector<int> a;
            for (std::string tok; in >> tok;) a.push_back(static_cast<int>(parse_int(l, tok)));
            if (a.empty()) at(l, ErrorCode::Syntax, "gens needs at least one twist");
            gens = std::move(a);
        } else if (key == "rels") {
            block(k, rel_lines, l);
            have_rels = true;
        } else {
            at(l, ErrorCode::Syntax, "unknown directive '" + key + "'");
        }
    }
    if (!characteristic) fail(ErrorCode::Syntax, "missing 'char' line");
    if (names.empty()) fail(ErrorCode::Syntax, "missing 'vars' line");
    if (!gens) fail(ErrorCode::Syntax, "missing 'gens' line");
    if (!have_rels) fail(ErrorCode::Syntax, "missing 'rels' block");
    if (order_override) order = *order_override;
    try {
        ring = make_ring(*characteristic, names, order);
    } catch (const AlgebraError& e) {
        fail(e.code(), e.what());
    }

    std::vector<Polynomial> quotient;
    for (const Line& l : quotient_lines) {
        Polynomial f = parse_polynomial(ring, l.text, l.number, 1);
        if (!f.is_homogeneous()) at(l, ErrorCode::NonHomogeneous, "quotient generator is not homogeneous");
        quotient.push_back(std::move(f));
    }
    std::vector<Column> cols;
    std::vector<std::optional<int>> hints;
    for (const Line& l : rel_lines) {
        Column c;
        std::optional<long> deg;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = l.text.find(',', start);
            std::string_view piece = std::string_view(l.text).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            Polynomial f = parse_polynomial(ring, piece, l.number, static_cast<int>(start) + 1);
            const std::size_t i = c.size();
            if (!f.is_zero()) {
                if (!f.is_homogeneous())
                    at(l, ErrorCode::NonHomogeneous, "entry " + std::to_string(i + 1) + " is not homogeneous");
                if (i < gens->size()) {
                    long d = f.degree().value() + (*gens)[i];
                    if (deg && *deg != d)
                        at(l, ErrorCode::NonHomogeneous,
                           "entry " + std::to_string(i + 1) + " has degree inconsistent with the earlier entries");
                    deg = d;
                }
            }
            c.push_back(std::move(f));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (c.size() != gens->size())
            at(l, ErrorCode::Syntax,
               "relation has " + std::to_string(c.size()) + " entries, expected " + std::to_string(gens->size()));
        if (!deg) at(l, ErrorCode::EmptyColumn, "relation is zero");
        cols.push_back(std::move(c));
        hints.push_back(static_cast<int>(*deg));
    }
    return validate_presentation(GradedRing(ring, std::move(quotient)), *gens, std::move(cols), std::move(hints));
}

GradedPresentation read_file(const std::string& path, std::optional<MonomialOrder> order_override) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Syntax, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_file(ss.str(), order_override);
}

std::string serialize(const GradedPresentation& M) {
    std::ostringstream os;
    const RingPtr& R = M.base();
    os << "char " << R->field().characteristic() << "\n";
    os << "vars";
    for (const auto& v : R->names()) os << ' ' << v;
    os << "\n";
    os << "order " << (R->order() == MonomialOrder::Lex ? "lex" : "grevlex") << "\n";
    if (!M.ring().is_polynomial_ring()) {
        os << "quotient\n";
        for (const auto& f : M.ring().quotient()) os << f << "\n";
        os << "end\n";
    }
    os << "gens";
    for (int a : M.row_twists()) os << ' ' << a;
    os << "\nrels\n";
    for (const Column& c : M.columns()) {
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

}  // namespace regbound
