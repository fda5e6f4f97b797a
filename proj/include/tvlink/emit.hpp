#pragma once

// Deterministic text output for series.

#include "tvlink/format.hpp"
#include "tvlink/kahler.hpp"
#include "tvlink/qseries.hpp"

#include <string>

namespace tvlink {

/// Residual series only, e.g. "t+(1+t)q+(1+t)q^2".
inline std::string format_qseries(const QSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, poly] : s.coeffs) {
        std::string c = format_lp(poly);
        std::string qp = format_power("q", k);
        std::string term;
        if (qp.empty())
            term = poly.size() > 1 && !first ? "(" + c + ")" : c;
        else if (poly.is_constant())
            term = c == "1" ? qp : c == "-1" ? "-" + qp : c + qp;
        else if (poly.is_monomial())
            term = c + "*" + qp;
        else
            term = "(" + c + ")" + qp;
        if (!first && term[0] != '-') out += "+";
        out += term;
        first = false;
    }
    return out;
}

inline std::string emit_text(const QSeries& s) { return format_qseries(s); }

/// One line per nonzero determined coefficient, "(r,s): value", graded order.
inline std::string emit_text(const KahlerSeries& z) {
    const auto& terms = z.terms();
    if (terms.empty()) return "0";
    if (terms.size() == 1 && terms.begin()->first == Bidegree{0, 0}) return format_rf(terms.begin()->second);
    std::string out;
    for (auto [r, s] : KahlerSeries::bidegrees(z.cutoff())) {
        auto it = terms.find({r, s});
        if (it == terms.end()) continue;
        if (!out.empty()) out += "\n";
        out += "(" + std::to_string(r) + "," + std::to_string(s) + "): " + format_rf(it->second);
    }
    return out;
}

}  // namespace tvlink
