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

#include "regbound/parse.hpp"

#include <cctype>
#include <string>

#include "regbound/errors.hpp"

namespace regbound {

namespace {

class Parser {
   public:
    Parser(const RingPtr& ring, std::string_view text, int line, int column)
        : ring_(ring), text_(text), line_(line), column_(column) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_space();
        if (pos_ != text_.size()) error(ErrorCode::Syntax, std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

   private:
    [[noreturn]] void error(ErrorCode code, const std::string& msg, std::size_t at) const {
        fail(code, "line " + std::to_string(line_) + ", column " + std::to_string(column_ + int(at)) + ": " + msg);
    }
    [[noreturn]] void error(ErrorCode code, const std::string& msg) const { error(code, msg, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Polynomial expression() {
        Polynomial acc(ring_);
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Polynomial t = term();
        acc = negate ? -t : t;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (peek('^')) {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            long e = number();
            if (e > 255) error(ErrorCode::Overflow, "exponent too large", start);
            Polynomial r = Polynomial::constant(ring_, 1);
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    long number() {
        skip_space();
        std::size_t start = pos_;
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (1L << 40)) error(ErrorCode::Overflow, "integer literal too large", start);
            ++pos_;
        }
        if (pos_ == start) error(ErrorCode::Syntax, "expected a number");
        return v;
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size()) error(ErrorCode::Syntax, "unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!peek(')')) error(ErrorCode::Syntax, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        error(ErrorCode::Syntax, std::string("unexpected '") + c + "'");
    }

    // An identifier that is not a variable name contributes its longest
    // variable-name prefix; the rest is read as a juxtaposed factor, so "xy"
    // reads as x*y and "xy^2" as x*y^2.
    Polynomial identifier() {
        std::size_t start = pos_, end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        std::string word(text_.substr(start, end - start));
        if (auto idx = ring_->variable_index(word)) {
            pos_ = end;
            return Polynomial::variable(ring_, *idx);
        }
        std::size_t best = 0, best_idx = 0;
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            const std::string& name = ring_->names()[v];
            if (name.size() > best && word.compare(0, name.size(), name) == 0) {
                best = name.size();
                best_idx = v;
            }
        }
        if (best == 0) error(ErrorCode::UnknownVariable, "unknown variable '" + word + "'", start);
        pos_ = start + best;
        return Polynomial::variable(ring_, best_idx);
    }

    const RingPtr& ring_;
    std::string_view text_;
    int line_;
    int column_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line, int column) {
    return Parser(ring, text, line, column).parse();
}

}  // namespace regbound
