#pragma once

// Finite-order checks on amplitude series: positivity of q-expansions,
// support of the normalized series, t=q reduction and t<->q symmetry.
// A pass means "holds through the stated order", nothing more.

#include "tvlink/emit.hpp"
#include "tvlink/json_io.hpp"
#include "tvlink/partition.hpp"

#include <string>
#include <vector>

namespace tvlink {

enum class Verdict { pass, fail, inconclusive };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}

struct CheckReport {
    std::string id;
    Verdict verdict = Verdict::pass;
    std::string witness;  // set whenever verdict is fail or inconclusive
    std::string detail;

    bool passed() const { return verdict == Verdict::pass; }

    static CheckReport pass(std::string id, std::string detail = {}) { return {std::move(id), Verdict::pass, {}, std::move(detail)}; }
    static CheckReport fail(std::string id, std::string witness, std::string detail = {}) {
        return {std::move(id), Verdict::fail, std::move(witness), std::move(detail)};
    }
};

inline json report_to_json(const CheckReport& r) {
    json j = {{"id", r.id}, {"verdict", to_string(r.verdict)}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

inline std::string bidegree_label(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

/// Every q^k t^j coefficient of every expanded (r,s) coefficient must be a
/// nonnegative integer (after the overall sign * q^a t^b is removed);
/// regular mode additionally demands t-free coefficients.
inline CheckReport positivity_check(const KahlerSeries& z, int q_order, bool refined, std::string id = "positivity") {
    int checked = 0, flipped = 0;
    for (auto [r, s] : KahlerSeries::bidegrees(z.cutoff())) {
        if (!z.determined(r, s)) continue;
        const RF c = z.at(r, s);
        if (c.is_zero()) continue;
        if (!refined && !c.t_free()) return CheckReport::fail(id, bidegree_label(r, s) + " depends on t in regular mode");
        QSeries e;
        try {
            e = expand(c, q_order);
        } catch (const ExpansionError& err) {
            return {id, Verdict::inconclusive, bidegree_label(r, s) + ": " + err.what(), {}};
        }
        const Rational scale = abs(e.prefactor.low().second);
        if (e.prefactor.low().second < 0) ++flipped;
        for (const auto& [k, poly] : e.coeffs)
            for (const auto& [m, v] : poly.terms()) {
                Rational x = v * scale;
                if (x < 0 || x.get_den() != 1)
                    return CheckReport::fail(id, bidegree_label(r, s) + " coefficient of " + format_power("q", k) +
                                                     (m.ey ? "*" + format_power("t", m.ey) : std::string()) + " is " +
                                                     x.get_str());
            }
        ++checked;
    }
    std::string detail = "pass through q^" + std::to_string(q_order) + " on " + std::to_string(checked) + " coefficients";
    if (flipped) detail += " (" + std::to_string(flipped) + " with overall sign -1)";
    return CheckReport::pass(id, detail);
}

/// c_{r,s} may be nonzero only for r >= 1 and (r+s <= |alpha|+|gamma| or s > 0);
/// the leading c_{0,0} is exempt from the r >= 1 clause.
inline CheckReport support_check(const KahlerSeries& zhat, const Partition& alpha, const Partition& gamma,
                                 std::string id = "support") {
    const int n = alpha.size() + gamma.size();
    int zeros = 0, nonzero_allowed = 0;
    for (auto [r, s] : KahlerSeries::bidegrees(zhat.cutoff())) {
        if (!zhat.determined(r, s) || (r == 0 && s == 0)) continue;
        const bool allowed = r >= 1 && (r + s <= n || s > 0);
        const bool nonzero = !zhat.at(r, s).is_zero();
        if (!allowed && nonzero) return CheckReport::fail(id, bidegree_label(r, s) + " is nonzero outside the support");
        if (!allowed) ++zeros;
        if (allowed && nonzero) ++nonzero_allowed;
    }
    return CheckReport::pass(id, std::to_string(zeros) + " forbidden coefficients vanish; " +
                                     std::to_string(nonzero_allowed) + " allowed coefficients are nonzero");
}

inline CheckReport reduction_check(const KahlerSeries& refined, const KahlerSeries& regular, std::string id = "reduction") {
    if (refined.cutoff() != regular.cutoff()) return CheckReport::fail(id, "cutoffs differ");
    int n = 0;
    for (auto [r, s] : KahlerSeries::bidegrees(refined.cutoff())) {
        if (!refined.determined(r, s) || !regular.determined(r, s)) continue;
        if (!(refined.at(r, s).substitute_t_eq_q() == regular.at(r, s)))
            return CheckReport::fail(id, bidegree_label(r, s) + " differs at t=q");
        ++n;
    }
    return CheckReport::pass(id, std::to_string(n) + " coefficients agree at t=q");
}

inline CheckReport symmetry_check_tq(const KahlerSeries& z, std::string id = "tq-symmetry") {
    int n = 0;
    for (auto [r, s] : KahlerSeries::bidegrees(z.cutoff())) {
        if (!z.determined(r, s)) continue;
        const RF c = z.at(r, s);
        if (!(c.swap_qt() == c)) return CheckReport::fail(id, bidegree_label(r, s) + " changes under t<->q");
        ++n;
    }
    return CheckReport::pass(id, std::to_string(n) + " coefficients symmetric");
}

/// Pure Q_b coefficients c_{m,0} vanish for all determined m > max_power.
inline CheckReport pure_qb_truncation(const KahlerSeries& z, int max_power, std::string id = "pure-qb-truncation") {
    for (int m = max_power + 1; m <= z.cutoff(); ++m)
        if (z.determined(m, 0) && !z.at(m, 0).is_zero()) return CheckReport::fail(id, bidegree_label(m, 0) + " is nonzero");
    return CheckReport::pass(id, "Q_b^m vanishes for " + std::to_string(max_power) + " < m <= " + std::to_string(z.cutoff()));
}

/// Pure Q_f coefficients c_{0,s} vanish for all determined s >= 1.
inline CheckReport pure_qf_vanishing(const KahlerSeries& z, std::string id = "pure-qf-vanishing") {
    for (int s = 1; s <= z.cutoff(); ++s)
        if (z.determined(0, s) && !z.at(0, s).is_zero()) return CheckReport::fail(id, bidegree_label(0, s) + " is nonzero");
    return CheckReport::pass(id, "no sole Q_f terms through degree " + std::to_string(z.cutoff()));
}

/// Pure Q_b coefficients of a local P1xP1 series against the resolved-conifold
/// series in the same colors: degree 0 equal, degree 1 equal up to a sign
/// flip, degree 2 different both with and without the flip.
inline CheckReport conifold_comparison(const KahlerSeries& local, const KahlerSeries& conifold,
                                       std::string id = "conifold-comparison") {
    for (int r = 0; r <= 2; ++r)
        if (!local.determined(r, 0) || !conifold.determined(r, 0))
            return CheckReport::fail(id, bidegree_label(r, 0) + " not computed");
    if (!(local.at(0, 0) == conifold.at(0, 0))) return CheckReport::fail(id, "leading coefficients differ");
    if (!(local.at(1, 0) == -conifold.at(1, 0))) return CheckReport::fail(id, "Q_b coefficients are not opposite");
    if (local.at(2, 0) == conifold.at(2, 0) || local.at(2, 0) == -conifold.at(2, 0))
        return CheckReport::fail(id, "Q_b^2 coefficients agree up to sign");
    return CheckReport::pass(id, "leading equal, Q_b opposite, Q_b^2 different");
}

}  // namespace tvlink
