#pragma once

// Check suites declared in a manifest (suite.json in the fixtures directory).
// Each entry names a check kind, its inputs and the expected verdict; a
// declared "fail" is the passing outcome for checks that must not hold.

#include "tvlink/fixture.hpp"

#include <fnmatch.h>

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace tvlink {

struct SuiteCheck {
    std::string id;
    std::string kind;
    std::string group;
    int criterion = 0;
    Verdict expect = Verdict::pass;
    json params;
};

struct SuiteResult {
    SuiteCheck check;
    CheckReport report;
    double seconds = 0;

    bool ok() const { return report.verdict == check.expect; }
};

inline Verdict parse_verdict(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "inconclusive") return Verdict::inconclusive;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

inline std::vector<SuiteCheck> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite manifest " + path.string());
    const json j = json::parse(in);
    std::vector<SuiteCheck> out;
    for (const auto& c : j.at("checks")) {
        SuiteCheck s;
        s.id = c.at("id").get<std::string>();
        s.kind = c.at("kind").get<std::string>();
        s.group = c.at("group").get<std::string>();
        s.criterion = c.value("criterion", 0);
        s.expect = parse_verdict(c.value("expect", std::string("pass")));
        s.params = c;
        out.push_back(std::move(s));
    }
    return out;
}

/// "all", a group name, or a criterion number; then an optional id glob.
inline std::vector<SuiteCheck> select_checks(const std::vector<SuiteCheck>& all, const std::string& suite,
                                             const std::string& glob = {}) {
    std::vector<SuiteCheck> out;
    for (const auto& c : all) {
        const bool in_suite = suite == "all" || c.group == suite || std::to_string(c.criterion) == suite;
        if (!in_suite) continue;
        if (!glob.empty() && fnmatch(glob.c_str(), c.id.c_str(), 0) != 0) continue;
        out.push_back(c);
    }
    return out;
}

class SuiteRunner {
public:
    explicit SuiteRunner(std::filesystem::path fixtures_dir) : dir_(std::move(fixtures_dir)) {}

    std::vector<SuiteResult> run(const std::vector<SuiteCheck>& checks) {
        std::vector<SuiteResult> out;
        for (const auto& c : checks) {
            const auto t0 = std::chrono::steady_clock::now();
            CheckReport r;
            try {
                r = run_one(c);
            } catch (const std::exception& e) {
                r = {c.id, Verdict::inconclusive, std::string("error: ") + e.what(), {}};
            }
            r.id = c.id;
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            out.push_back({c, std::move(r), dt});
        }
        return out;
    }

    const std::filesystem::path& fixtures_dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::map<std::string, KahlerSeries> cache_;
    std::map<std::string, Fixture> fixtures_;

    const KahlerSeries& series(AmplitudeSpec spec, bool normalized) {
        const std::string key = spec_to_json(spec).dump() + (normalized ? "/n" : "/r");
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, normalized ? normalized_amplitude(spec) : raw_amplitude(spec)).first->second;
    }

    const Fixture& fixture(const std::string& id) {
        auto it = fixtures_.find(id);
        if (it != fixtures_.end()) return it->second;
        return fixtures_.emplace(id, load_fixture(dir_ / (id + ".json"))).first->second;
    }

    CheckReport run_one(const SuiteCheck& c) {
        const json& p = c.params;
        if (c.kind == "fixture") {
            const Fixture& f = fixture(p.at("fixture").get<std::string>());
            return fixture_compare(f, series(f.spec, f.normalized));
        }
        const AmplitudeSpec spec = spec_from_json(p.at("spec"));
        const bool normalized = p.value("normalized", true);
        if (c.kind == "positivity") return positivity_check(series(spec, normalized), p.at("q_order").get<int>(), spec.refined);
        if (c.kind == "support") return support_check(series(spec, true), spec.alpha, spec.gamma);
        if (c.kind == "symmetry") return symmetry_check_tq(series(spec, normalized));
        if (c.kind == "pure-qb-truncation") return pure_qb_truncation(series(spec, normalized), p.at("max_power").get<int>());
        if (c.kind == "pure-qf-vanishing") return pure_qf_vanishing(series(spec, normalized));
        if (c.kind == "reduction") {
            AmplitudeSpec reg = spec, ref = spec;
            reg.refined = false;
            ref.refined = true;
            return reduction_check(series(ref, normalized), series(reg, normalized));
        }
        if (c.kind == "conifold") {
            AmplitudeSpec con = spec;
            con.geometry = Geometry::resolved_conifold;
            return conifold_comparison(series(spec, true), series(con, true));
        }
        throw std::invalid_argument("unknown check kind '" + c.kind + "'");
    }
};

inline json suite_result_to_json(const SuiteResult& r) {
    json j = report_to_json(r.report);
    j["group"] = r.check.group;
    j["criterion"] = r.check.criterion;
    j["expect"] = to_string(r.check.expect);
    j["ok"] = r.ok();
    return j;
}

}  // namespace tvlink
