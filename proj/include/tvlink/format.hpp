#pragma once

// Plain-text rendering of Laurent polynomials and rational functions.
// Half-integer powers print as sqrt(q), q^(3/2), t^(-1/2).

#include "tvlink/ratfunc.hpp"

#include <string>

namespace tvlink {

inline std::string format_rational(const Rational& c) { return c.get_str(); }

inline std::string format_power(const char* var, int doubled) {
    if (doubled == 0) return {};
    std::string v(var);
    if (doubled == 1) return "sqrt(" + v + ")";
    if (doubled % 2 == 0) {
        int k = doubled / 2;
        if (k == 1) return v;
        return k > 0 ? v + "^" + std::to_string(k) : v + "^(" + std::to_string(k) + ")";
    }
    return v + "^(" + std::to_string(doubled) + "/2)";
}

inline std::string format_monomial(Monomial m) {
    std::string a = format_power("q", m.ex), b = format_power("t", m.ey);
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

inline std::string format_lp(const LP& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string mono = format_monomial(m);
        std::string term;
        if (mono.empty())
            term = format_rational(c);
        else if (c == 1)
            term = mono;
        else if (c == -1)
            term = "-" + mono;
        else
            term = format_rational(c) + "*" + mono;
        if (!first && term[0] != '-') out += "+";
        out += term;
        first = false;
    }
    return out;
}

inline std::string format_rf(const RF& a) {
    std::string num = format_lp(a.numerator());
    if (a.factors().empty()) return num;
    if (a.numerator().size() > 1) num = "(" + num + ")";
    std::string den;
    std::size_t pieces = 0;
    for (const auto& [f, m] : a.factors()) {
        if (!den.empty()) den += "*";
        den += "(" + format_lp(f) + ")";
        if (m > 1) den += "^" + std::to_string(m);
        pieces += static_cast<std::size_t>(m);
    }
    return num + "/" + (pieces > 1 ? "(" + den + ")" : den);
}

}  // namespace tvlink
