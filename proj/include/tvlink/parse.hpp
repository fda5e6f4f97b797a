#pragma once

// Reads rational functions written the way the formatter prints them, plus
// the looser notation used in hand transcriptions: implicit multiplication
// ("2 t", "(1+t)q"), half-integer powers of monomials ("q^(3/2)", "sqrt(t*q)"),
// and integer powers of anything ("(1-q)^2").

#include "tvlink/ratfunc.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace tvlink {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string text) : s_(std::move(text)) {}

    RF parse() {
        RF v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 't' || c == 's' || c == '(';
    }

    RF expr() {
        RF v = term();
        while (true) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    RF term() {
        RF v = unary();
        while (true) {
            if (accept('*'))
                v *= unary();
            else if (accept('/'))
                v /= unary();
            else if (starts_atom())
                v *= unary();
            else
                return v;
        }
    }

    RF unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RF power() {
        RF base = atom();
        if (!accept('^')) return base;
        auto [p, r] = exponent();
        return raise(base, p, r);
    }

    std::pair<long, long> exponent() {
        bool braced = accept('(') || accept('{');
        if (!braced) return {integer(false), 1};
        long p = integer(true);
        long r = 1;
        if (accept('/')) r = integer(false);
        if (!accept(')') && !accept('}')) fail("unclosed exponent");
        if (r <= 0) fail("bad exponent denominator");
        return {p, r};
    }

    long integer(bool allow_sign) {
        skip();
        bool neg = false;
        if (allow_sign && (peek('-') || peek('+'))) neg = s_[pos_++] == '-';
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    RF raise(const RF& base, long p, long r) {
        if (r == 1) return base.pow(static_cast<int>(p));
        // fractional powers only for monomials with unit coefficient
        if (!base.is_polynomial() || !base.numerator().is_monomial() || base.numerator().low().second != 1)
            fail("fractional power of a non-monomial");
        Monomial m = base.numerator().low().first;
        if ((m.ex * p) % r != 0 || (m.ey * p) % r != 0) fail("fractional power leaves a non-half-integer exponent");
        return RF(LP::monomial(static_cast<int>(m.ex * p / r), static_cast<int>(m.ey * p / r)));
    }

    RF atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RF(LP(Rational(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            expect('(');
            RF inner = expr();
            expect(')');
            return raise(inner, 1, 2);
        }
        if (c == 'q') {
            ++pos_;
            return RF(LP::monomial(2, 0));
        }
        if (c == 't') {
            ++pos_;
            return RF(LP::monomial(0, 2));
        }
        if (c == '(') {
            ++pos_;
            RF v = expr();
            expect(')');
            return v;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace detail

inline RF parse_rf(const std::string& text) { return detail::ExprParser(text).parse(); }

}  // namespace tvlink
