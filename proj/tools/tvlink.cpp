// tvlink: compute amplitudes, expand coefficients, run check suites,
// compare regular/refined or local P1xP1/conifold series.

#include "tvlink/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace tvlink;

namespace {

struct Options {
    std::string geometry = "local-p1xp1";
    std::string alpha = "[]";
    std::string gamma = "[]";
    bool refined = false;
    int cutoff = 3;
    int q_order = 15;
    std::string coeff;
    std::string suite = "all";
    std::string filter;
    std::string fixtures_dir;
    std::string output = "text";
    std::string against = "refined";
    bool raw = false;
    int max_cutoff = 4;
    int max_q_order = 20;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

AmplitudeSpec make_spec(const Options& o) {
    AmplitudeSpec s;
    try {
        s.geometry = parse_geometry(o.geometry);
        s.alpha = parse_partition(o.alpha);
        s.gamma = parse_partition(o.gamma);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.cutoff < 0) throw UsageError("cutoff must be nonnegative");
    if (o.cutoff > o.max_cutoff)
        throw UsageError("cutoff " + std::to_string(o.cutoff) + " exceeds the ceiling " + std::to_string(o.max_cutoff) +
                         " (raise --max-cutoff)");
    if (o.q_order < 0) throw UsageError("q-order must be nonnegative");
    if (o.q_order > o.max_q_order)
        throw UsageError("q-order " + std::to_string(o.q_order) + " exceeds the ceiling " + std::to_string(o.max_q_order) +
                         " (raise --max-q-order)");
    s.refined = o.refined;
    s.cutoff = o.cutoff;
    s.q_order = o.q_order;
    return s;
}

Bidegree parse_coeff(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        int r = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        std::string rest = text.substr(comma + 1);
        int s = std::stoi(rest, &used);
        if (used != rest.size() || r < 0 || s < 0) throw std::invalid_argument("");
        return {r, s};
    } catch (const std::exception&) {
        throw UsageError("--coeff expects r,s with nonnegative integers, got '" + text + "'");
    }
}

std::filesystem::path fixtures_dir(const Options& o) {
    if (!o.fixtures_dir.empty()) return o.fixtures_dir;
    if (const char* env = std::getenv("TVLINK_FIXTURES_DIR"); env && *env) return env;
#ifdef TVLINK_DEFAULT_FIXTURES_DIR
    return TVLINK_DEFAULT_FIXTURES_DIR;
#else
    throw UsageError("no fixtures directory: pass --fixtures-dir or set TVLINK_FIXTURES_DIR");
#endif
}

KahlerSeries series_for(const AmplitudeSpec& s, bool raw) { return raw ? raw_amplitude(s) : normalized_amplitude(s); }

int cmd_compute(const Options& o) {
    const AmplitudeSpec spec = make_spec(o);
    const KahlerSeries z = series_for(spec, o.raw);
    if (o.output == "json")
        std::cout << json{{"spec", spec_to_json(spec)}, {"normalized", !o.raw}, {"series", kahler_to_json(z)}}.dump(2) << "\n";
    else
        std::cout << emit_text(z) << "\n";
    return 0;
}

int cmd_expand(const Options& o) {
    const AmplitudeSpec spec = make_spec(o);
    const KahlerSeries z = series_for(spec, o.raw);
    std::vector<Bidegree> which;
    if (!o.coeff.empty()) {
        const Bidegree b = parse_coeff(o.coeff);
        if (!KahlerSeries::in_range(b.first, b.second, spec.cutoff))
            throw UsageError("--coeff " + o.coeff + " is beyond the cutoff " + std::to_string(spec.cutoff));
        which.push_back(b);
    } else {
        for (const auto& [b, c] : z.terms()) which.push_back(b);
        std::sort(which.begin(), which.end(), [](const Bidegree& a, const Bidegree& b) {
            return std::pair(a.first + a.second, a.first) < std::pair(b.first + b.second, b.first);
        });
    }
    json out = json::array();
    std::ostringstream text;
    for (const auto& [r, s] : which) {
        const QSeries e = expand(z.at(r, s), spec.q_order);
        out.push_back({{"r", r}, {"s", s}, {"expansion", qseries_to_json(e)}});
        if (o.coeff.empty())
            text << bidegree_label(r, s) << ": " << format_qseries(e) << "\n";
        else
            text << format_qseries(e) << "\n";
    }
    if (o.output == "json")
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int cmd_check(const Options& o) {
    const auto dir = fixtures_dir(o);
    const auto checks = select_checks(load_manifest(dir / "suite.json"), o.suite, o.filter);
    if (checks.empty()) throw UsageError("no checks match suite '" + o.suite + "'" + (o.filter.empty() ? "" : " and filter '" + o.filter + "'"));
    SuiteRunner runner(dir);
    const auto results = runner.run(checks);
    int bad = 0;
    for (const auto& r : results) bad += !r.ok();
    if (o.output == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(suite_result_to_json(r));
        std::cout << json{{"results", arr}, {"total", results.size()}, {"mismatches", bad}}.dump(2) << "\n";
    } else {
        std::size_t w = 0;
        for (const auto& r : results) w = std::max(w, r.check.id.size());
        for (const auto& r : results) {
            std::cout << std::left << std::setw(static_cast<int>(w) + 2) << r.check.id << std::setw(14)
                      << to_string(r.report.verdict) << (r.ok() ? "ok        " : "MISMATCH  ")
                      << (r.report.witness.empty() ? r.report.detail : r.report.witness) << "\n";
        }
        std::cout << results.size() - static_cast<std::size_t>(bad) << "/" << results.size()
                  << " checks matched their expected verdicts\n";
    }
    return bad == 0 ? 0 : 1;
}

int cmd_compare(const Options& o) {
    AmplitudeSpec spec = make_spec(o);
    std::vector<std::array<std::string, 4>> rows;
    std::string left, right;
    if (o.against == "refined") {
        left = "regular";
        right = "refined";
        AmplitudeSpec reg = spec, ref = spec;
        reg.refined = false;
        ref.refined = true;
        const KahlerSeries a = series_for(reg, o.raw), b = series_for(ref, o.raw);
        for (auto [r, s] : KahlerSeries::bidegrees(spec.cutoff))
            rows.push_back({bidegree_label(r, s), format_rf(a.at(r, s)), format_rf(b.at(r, s)),
                            b.at(r, s).substitute_t_eq_q() == a.at(r, s) ? "equal at t=q" : "differ at t=q"});
    } else if (o.against == "conifold") {
        left = "local-p1xp1";
        right = "resolved-conifold";
        AmplitudeSpec con = spec;
        spec.geometry = Geometry::local_p1xp1;
        con.geometry = Geometry::resolved_conifold;
        const KahlerSeries a = series_for(spec, o.raw), b = series_for(con, o.raw);
        for (int r = 0; r <= spec.cutoff; ++r) {
            const RF x = a.at(r, 0), y = b.at(r, 0);
            rows.push_back({bidegree_label(r, 0), format_rf(x), format_rf(y),
                            x == y ? "equal" : x == -y ? "opposite" : "different"});
        }
    } else {
        throw UsageError("--against must be refined or conifold");
    }
    if (o.output == "json") {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back({{"bidegree", row[0]}, {left, row[1]}, {right, row[2]}, {"relation", row[3]}});
        std::cout << json{{"spec", spec_to_json(spec)}, {"rows", arr}}.dump(2) << "\n";
        return 0;
    }
    std::size_t w1 = left.size(), w2 = right.size();
    for (const auto& row : rows) {
        w1 = std::max(w1, row[1].size());
        w2 = std::max(w2, row[2].size());
    }
    std::cout << std::left << std::setw(9) << "coeff" << std::setw(static_cast<int>(w1) + 2) << left
              << std::setw(static_cast<int>(w2) + 2) << right << "relation\n";
    for (const auto& row : rows)
        std::cout << std::left << std::setw(9) << row[0] << std::setw(static_cast<int>(w1) + 2) << row[1]
                  << std::setw(static_cast<int>(w2) + 2) << row[2] << row[3] << "\n";
    return 0;
}

void add_spec_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--geometry", o.geometry, "local-p1xp1 or resolved-conifold")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "first color, e.g. \"[1,1]\"")->capture_default_str();
    cmd->add_option("--gamma", o.gamma, "second color")->capture_default_str();
    cmd->add_flag("--refined", o.refined, "refined (t,q) amplitude");
    cmd->add_option("--cutoff", o.cutoff, "total Kahler degree")->capture_default_str();
    cmd->add_option("--max-cutoff", o.max_cutoff, "ceiling for --cutoff")->capture_default_str();
    cmd->add_flag("--raw", o.raw, "unnormalized amplitude instead of Z/Z_00");
    cmd->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological-vertex link amplitudes on local P1xP1"};
    app.require_subcommand(1, 1);
    Options o;

    auto* compute = app.add_subcommand("compute", "amplitude as a truncated Kahler series");
    add_spec_flags(compute, o);

    auto* exp = app.add_subcommand("expand", "q-expansion of coefficients after prefactor extraction");
    add_spec_flags(exp, o);
    exp->add_option("--coeff", o.coeff, "bidegree r,s (default: every nonzero coefficient)");
    exp->add_option("--q-order", o.q_order, "residual q order")->capture_default_str();
    exp->add_option("--max-q-order", o.max_q_order, "ceiling for --q-order")->capture_default_str();

    auto* check = app.add_subcommand("check", "run a check suite from the manifest");
    check->add_option("--suite", o.suite, "all, a group (fixtures, laws, conjectures, comparison, structure) or a criterion number")
        ->capture_default_str();
    check->add_option("--filter", o.filter, "glob on check ids");
    check->add_option("--fixtures-dir", o.fixtures_dir, "fixtures directory (default: $TVLINK_FIXTURES_DIR)");
    check->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    auto* compare = app.add_subcommand("compare", "side-by-side regular/refined or local P1xP1/conifold");
    add_spec_flags(compare, o);
    compare->add_option("--against", o.against, "refined or conifold")->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*compute) return cmd_compute(o);
        if (*exp) return cmd_expand(o);
        if (*check) return cmd_check(o);
        if (*compare) return cmd_compare(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
