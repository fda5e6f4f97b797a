#pragma once

// Transcribed reference series and their comparison against computed ones.
//
// A rational fixture lists exact coefficients c_{r,s}; every bidegree of
// total degree <= complete_through that is not listed must vanish. Errata
// replace a displayed value by a corrected one, and the comparison also
// demands that the displayed value really differs from the computed one.
//
// An expansion fixture lists q-expansions of single coefficients. Both the
// list and the computed coefficient go through extract_prefactor, then the
// residuals are compared exactly through the printed order.

#include "tvlink/amplitude.hpp"
#include "tvlink/analysis.hpp"
#include "tvlink/parse.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tvlink {

enum class FixtureKind { rational, expansion };

struct Erratum {
    int r = 0, s = 0;
    std::string displayed, corrected, reason;
};

struct ExpansionList {
    int r = 0, s = 0;
    int printed_order = 0;  // highest q power printed
    std::string series;
};

struct Fixture {
    std::string id;
    std::string source;
    FixtureKind kind = FixtureKind::rational;
    AmplitudeSpec spec;
    bool normalized = true;
    int complete_through = 0;
    std::map<Bidegree, std::string> values;
    std::vector<Erratum> errata;
    std::vector<ExpansionList> lists;

    const Erratum* erratum(int r, int s) const {
        for (const auto& e : errata)
            if (e.r == r && e.s == s) return &e;
        return nullptr;
    }
};

inline AmplitudeSpec spec_from_json(const json& j) {
    AmplitudeSpec s;
    s.geometry = parse_geometry(j.value("geometry", std::string("local-p1xp1")));
    s.alpha = parse_partition(j.value("alpha", std::string("[]")));
    s.gamma = parse_partition(j.value("gamma", std::string("[]")));
    s.refined = j.value("refined", false);
    s.cutoff = j.value("cutoff", 3);
    s.q_order = j.value("q_order", 15);
    return s;
}

inline json spec_to_json(const AmplitudeSpec& s) {
    return {{"geometry", to_string(s.geometry)}, {"alpha", to_string(s.alpha)}, {"gamma", to_string(s.gamma)},
            {"refined", s.refined}, {"cutoff", s.cutoff}, {"q_order", s.q_order}};
}

inline Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.id = j.at("id").get<std::string>();
    f.source = j.at("source").get<std::string>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational")
        f.kind = FixtureKind::rational;
    else if (kind == "expansion")
        f.kind = FixtureKind::expansion;
    else
        throw std::invalid_argument("fixture " + f.id + ": unknown kind '" + kind + "'");
    f.spec = spec_from_json(j.at("spec"));
    f.normalized = j.value("normalized", true);
    f.complete_through = j.value("complete_through", 0);
    if (j.contains("values"))
        for (const auto& v : j.at("values"))
            f.values[{v.at("r").get<int>(), v.at("s").get<int>()}] = v.at("value").get<std::string>();
    if (j.contains("errata"))
        for (const auto& e : j.at("errata"))
            f.errata.push_back({e.at("r").get<int>(), e.at("s").get<int>(), e.at("displayed").get<std::string>(),
                                e.at("corrected").get<std::string>(), e.value("reason", std::string())});
    if (j.contains("lists"))
        for (const auto& l : j.at("lists"))
            f.lists.push_back({l.at("r").get<int>(), l.at("s").get<int>(), l.at("printed_order").get<int>(),
                               l.at("series").get<std::string>()});
    if (f.source.empty()) throw std::invalid_argument("fixture " + f.id + " has no source citation");
    return f;
}

inline Fixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path.string());
    return fixture_from_json(json::parse(in));
}

/// Every *.json in dir except the suite manifest, sorted by id.
inline std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
    std::vector<Fixture> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto& p = entry.path();
        if (p.extension() != ".json" || p.filename() == "suite.json") continue;
        out.push_back(load_fixture(p));
    }
    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.id < b.id; });
    return out;
}

/// The series a fixture is compared against.
inline KahlerSeries fixture_series(const Fixture& f) {
    return f.normalized ? normalized_amplitude(f.spec) : raw_amplitude(f.spec);
}

/// Residual of a printed list: the extracted residual through the printed
/// order minus the list's own q-shift, plus that shift in half-units.
struct ListResidual {
    QSeries residual;
    int shift2 = 0;
};

inline ListResidual list_residual(const ExpansionList& l) {
    RF v = parse_rf(l.series);
    if (!v.is_polynomial()) throw ParseError("expansion list for " + bidegree_label(l.r, l.s) + " is not a polynomial");
    const LP& p = v.numerator();
    if (p.is_zero()) throw ParseError("expansion list for " + bidegree_label(l.r, l.s) + " is empty");
    const int shift2 = p.min_ex();
    const int order2 = 2 * l.printed_order - shift2;
    if (order2 < 0) throw ParseError("printed order below the first term");
    return {extract_prefactor(p.truncated(2 * l.printed_order), order2), shift2};
}

namespace detail {

inline std::string first_difference(const QSeries& want, const QSeries& got) {
    for (int k = 0; k <= want.order2; ++k) {
        auto a = want.coeffs.find(k), b = got.coeffs.find(k);
        LP x = a == want.coeffs.end() ? LP{} : a->second;
        LP y = b == got.coeffs.end() ? LP{} : b->second;
        if (!(x == y))
            return "coefficient of " + (k ? format_power("q", k) : std::string("q^0")) + ": expected " +
                   (x.is_zero() ? "0" : format_lp(x)) + ", computed " + (y.is_zero() ? "0" : format_lp(y));
    }
    return "series differ";
}

}  // namespace detail

inline CheckReport fixture_compare(const Fixture& f, const KahlerSeries& computed) {
    const std::string id = "fixture:" + f.id;
    if (f.kind == FixtureKind::rational) {
        int n = 0;
        for (auto [r, s] : KahlerSeries::bidegrees(f.complete_through)) {
            if (!computed.determined(r, s)) return CheckReport::fail(id, bidegree_label(r, s) + " not computed");
            const RF got = computed.at(r, s);
            auto it = f.values.find({r, s});
            RF want;
            if (it != f.values.end()) {
                if (const Erratum* e = f.erratum(r, s)) {
                    if (parse_rf(e->displayed) == got)
                        return CheckReport::fail(id, bidegree_label(r, s) + " erratum: displayed value already matches");
                    want = parse_rf(e->corrected);
                } else {
                    want = parse_rf(it->second);
                }
            }
            if (!(want == got))
                return CheckReport::fail(id, bidegree_label(r, s) + ": expected " + format_rf(want) + ", computed " +
                                                 format_rf(got));
            ++n;
        }
        std::string detail = std::to_string(n) + " coefficients equal through degree " + std::to_string(f.complete_through);
        if (!f.errata.empty()) detail += " (" + std::to_string(f.errata.size()) + " with errata)";
        return CheckReport::pass(id, detail);
    }
    int n = 0;
    for (const auto& l : f.lists) {
        const std::string where = bidegree_label(l.r, l.s);
        if (!computed.determined(l.r, l.s)) return CheckReport::fail(id, where + " not computed");
        const ListResidual want = list_residual(l);
        QSeries got;
        try {
            got = expand(computed.at(l.r, l.s), want.residual.order2 / 2);
        } catch (const ExpansionError& e) {
            return {id, Verdict::inconclusive, where + ": " + e.what(), {}};
        }
        if (!(want.residual.coeffs == got.coeffs))
            return CheckReport::fail(id, where + " " + detail::first_difference(want.residual, got));
        ++n;
    }
    return CheckReport::pass(id, std::to_string(n) + " lists equal through their printed orders");
}

}  // namespace tvlink
