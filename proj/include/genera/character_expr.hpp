#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "genera/laurent.hpp"

namespace genera {

namespace detail {

/// Recursive-descent parser for character expressions in the variable t,
/// e.g. "2 + 3*t^2 + 3*t^-2" or "3*(t + t^-1) + (t^3 + t^-3)".
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | 't' ['^' ['-'] digits] | '(' expr ')'
///
/// The result is returned in the library's mu-representation (t = mu^2).
class CharExprParser {
public:
    explicit CharExprParser(std::string_view text) : s_(text) {}

    LaurentPoly parse() {
        LaurentPoly v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument(error("unexpected trailing input"));
        return v;
    }

private:
    LaurentPoly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        LaurentPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                const bool minus = (get() == '-');
                LaurentPoly t = term();
                acc = minus ? acc - t : acc + t;
            } else {
                return acc;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    LaurentPoly factor() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            get();
            LaurentPoly v = expr();
            skip_ws();
            if (get() != ')') throw std::invalid_argument(error("expected ')'"));
            return v;
        }
        if (c == 't') {
            get();
            int e = 1;
            skip_ws();
            if (peek() == '^') {
                get();
                e = integer();
            }
            return LaurentPoly::term(Rational(1), 2 * e);  // t^e = mu^{2e}
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num = digits();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw std::invalid_argument(error("expected denominator digits"));
                return LaurentPoly(Rational(num, digits()));
            }
            return LaurentPoly(Rational(num));
        }
        throw std::invalid_argument(error("expected a rational, 't' or '('"));
    }

    int integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { get(); neg = true; }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw std::invalid_argument(error("expected exponent digits"));
        const BigInt d = digits();
        if (d > 1000) throw std::invalid_argument(error("exponent out of range"));
        const int v = static_cast<int>(d);
        return neg ? -v : v;
    }

    BigInt digits() {
        BigInt v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    std::string error(const std::string& what) const {
        return "character expression: " + what + " at position " + std::to_string(pos_);
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parses a Laurent polynomial in t from a string, returned in the library's
/// mu-representation (t = mu^2).
inline LaurentPoly parse_character_expression(std::string_view text) {
    return detail::CharExprParser(text).parse();
}

}  // namespace genera
