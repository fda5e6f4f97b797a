#pragma once

// JSON encodings. Integers that may exceed machine range are decimal strings.

#include "tvlink/kahler.hpp"
#include "tvlink/qseries.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace tvlink {

using json = nlohmann::json;

inline json lp_to_json(const LP& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back({{"ex", m.ex}, {"ey", m.ey}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return out;
}

inline LP lp_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("Laurent polynomial JSON must be a list");
    std::vector<LP::Term> terms;
    for (const auto& t : j) {
        Rational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
        c.canonicalize();
        terms.push_back({Monomial{t.at("ex").get<int>(), t.at("ey").get<int>()}, c});
    }
    return LP::from_terms(std::move(terms));
}

/// {num, den} with den expanded; den_factors keeps the product form for exact re-emission.
inline json rf_to_json(const RF& a) {
    json factors = json::array();
    for (const auto& [f, m] : a.factors()) factors.push_back({{"poly", lp_to_json(f)}, {"power", m}});
    return {{"num", lp_to_json(a.numerator())}, {"den", lp_to_json(a.denominator())}, {"den_factors", factors}};
}

inline RF rf_from_json(const json& j) {
    LP num = lp_from_json(j.at("num"));
    if (j.contains("den_factors")) {
        std::vector<std::pair<LP, int>> fs;
        for (const auto& f : j.at("den_factors")) fs.push_back({lp_from_json(f.at("poly")), f.at("power").get<int>()});
        RF r = RF::from_factors(num, fs);
        if (j.contains("den") && !(r == RF::quotient(num, lp_from_json(j.at("den")))))
            throw std::invalid_argument("den and den_factors disagree");
        return r;
    }
    return RF::quotient(num, lp_from_json(j.at("den")));
}

/// {"cutoff", "terms": [{r, s, coeff}]}; every determined bidegree is listed.
inline json kahler_to_json(const KahlerSeries& z) {
    json terms = json::array();
    for (auto [r, s] : KahlerSeries::bidegrees(z.cutoff()))
        if (z.determined(r, s)) terms.push_back({{"r", r}, {"s", s}, {"coeff", rf_to_json(z.at(r, s))}});
    return {{"cutoff", z.cutoff()}, {"terms", terms}};
}

inline KahlerSeries kahler_from_json(const json& j) {
    KahlerSeries z(j.at("cutoff").get<int>(), false);
    for (const auto& t : j.at("terms")) z.set(t.at("r").get<int>(), t.at("s").get<int>(), rf_from_json(t.at("coeff")));
    return z;
}

inline json qseries_to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& [k, poly] : s.coeffs) {
        json pt = json::array();
        for (const auto& [m, c] : poly.terms())
            pt.push_back({{"te", m.ey}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
        coeffs.push_back({{"qe", k}, {"poly_t", pt}});
    }
    return {{"prefactor", lp_to_json(s.prefactor)}, {"order", s.order2}, {"coeffs", coeffs}};
}

inline QSeries qseries_from_json(const json& j) {
    QSeries s;
    s.prefactor = lp_from_json(j.at("prefactor"));
    s.order2 = j.at("order").get<int>();
    for (const auto& c : j.at("coeffs")) {
        std::vector<LP::Term> terms;
        for (const auto& t : c.at("poly_t")) {
            Rational v(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
            v.canonicalize();
            terms.push_back({Monomial{0, t.at("te").get<int>()}, v});
        }
        LP poly = LP::from_terms(std::move(terms));
        if (!poly.is_zero()) s.coeffs.emplace(c.at("qe").get<int>(), std::move(poly));
    }
    return s;
}

}  // namespace tvlink
