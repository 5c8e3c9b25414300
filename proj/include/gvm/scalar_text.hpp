#pragma once

// Text form of exact scalars:  -5/2,  1/3+tau,  -tau,  2-1/2*sigma,  tau
//
// A term is a rational `a` or `a/b`, optionally followed by `*name`, or a bare
// `name`.  Terms are joined by + and -.  Whitespace is ignored.

#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "gvm/errors.hpp"
#include "gvm/exact.hpp"

namespace gvm {

inline std::string format_rational(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

inline std::string format_scalar(const ExactScalar& x) {
    std::string out;
    if (x.rational_part() != Rational(0) || x.is_rational()) out = format_rational(x.rational_part());
    for (const auto& [name, c] : x.generic_part()) {
        const bool negative = c < Rational(0);
        const Rational mag = negative ? -c : c;
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (mag != Rational(1)) out += format_rational(mag) + "*";
        out += name;
    }
    return out;
}

namespace detail {

class ScalarParser {
public:
    ScalarParser(std::string_view text, const std::set<std::string>* symbols)
        : symbols_(symbols) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }

    ExactScalar parse() {
        if (text_.empty()) fail("empty scalar");
        ExactScalar total;
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected + or -");
            }
            total += term() * Rational(sign);
            first = false;
        }
        return total;
    }

private:
    ExactScalar term() {
        if (std::isalpha(static_cast<unsigned char>(peek()))) return ExactScalar::symbol(name());
        Rational value = number();
        if (peek() == '/') {
            get();
            const std::int64_t den = integer();
            if (den == 0) fail("zero denominator");
            value /= den;
        }
        if (peek() == '*') {
            get();
            return ExactScalar::symbol(name(), value);
        }
        return value;
    }

    std::int64_t integer() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected a number");
        try {
            return std::stoll(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
    }

    Rational number() { return Rational(integer()); }

    std::string name() {
        const std::size_t start = pos_;
        while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected a symbol name");
        std::string n = text_.substr(start, pos_ - start);
        if (symbols_ && !symbols_->count(n)) fail("unknown symbol '" + n + "'");
        return n;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse scalar '" + text_ + "': " + why);
    }

    std::string text_;
    std::size_t pos_ = 0;
    const std::set<std::string>* symbols_;
};

}  // namespace detail

/// Parses the text form.  When `symbols` is given, only those names are accepted.
inline ExactScalar parse_scalar(std::string_view text, const std::set<std::string>* symbols = nullptr) {
    return detail::ScalarParser(text, symbols).parse();
}

/// The two symbol names exposed on the command line.
inline const std::set<std::string>& cli_symbols() {
    static const std::set<std::string> names{"tau", "sigma"};
    return names;
}

}  // namespace gvm
