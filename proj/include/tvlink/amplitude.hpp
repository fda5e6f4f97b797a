#pragma once

// Open and closed amplitudes on local P1xP1 (two branes with colors alpha,
// gamma on external legs of the square toric graph) and on the resolved
// conifold, as truncated series in the Kahler parameters.

#include "tvlink/kahler.hpp"
#include "tvlink/vertex.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tvlink {

enum class Geometry { local_p1xp1, resolved_conifold };

inline std::string to_string(Geometry g) { return g == Geometry::local_p1xp1 ? "local-p1xp1" : "resolved-conifold"; }

inline Geometry parse_geometry(const std::string& s) {
    if (s == "local-p1xp1" || s == "local_p1xp1") return Geometry::local_p1xp1;
    if (s == "resolved-conifold" || s == "resolved_conifold") return Geometry::resolved_conifold;
    throw std::invalid_argument("unknown geometry '" + s + "' (expected local-p1xp1 or resolved-conifold)");
}

struct AmplitudeSpec {
    Geometry geometry = Geometry::local_p1xp1;
    Partition alpha;
    Partition gamma;
    bool refined = false;
    int cutoff = 3;
    int q_order = 15;
};

namespace detail {

/// Box-counting factor with the column-height reading of nu used by the
/// gluing formulas: prod over cells of nu^t of (1 - x^{a+1} y^{l})^{-1}.
inline RF box_factor(const Partition& nu, Var first) { return macdonald_tilde_z(conjugate(nu), first); }

/// Runs fn(i) for i in [0, n) on a few threads; results are kept per index.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& fn) {
    std::vector<T> out(n);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
        }));
    for (auto& j : jobs) j.get();
    return out;
}

inline void check_cutoff(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
}

/// Contribution of one (nu1, nu2) pair, indexed by the Q_f degree.
struct PairTerm {
    int r = 0;
    std::vector<RF> by_s;
};

inline std::vector<std::pair<Partition, Partition>> outer_pairs(int cutoff) {
    std::vector<std::pair<Partition, Partition>> out;
    const auto ps = enumerate_up_to(cutoff);
    for (const auto& n1 : ps)
        for (const auto& n2 : ps)
            if (n1.size() + n2.size() <= cutoff) out.push_back({n1, n2});
    return out;
}

/// sum over lambda, beta of the fiber weights, combined into Q_f degrees 0..budget.
template <class LF, class BF>
std::vector<RF> fiber_sums(int budget, LF&& lambda_term, BF&& beta_term) {
    std::vector<RF> lsum(static_cast<std::size_t>(budget) + 1), bsum(static_cast<std::size_t>(budget) + 1);
    for (int k = 0; k <= budget; ++k)
        for (const auto& p : tvlink::partitions_of(k)) {
            lsum[static_cast<std::size_t>(k)] += lambda_term(p);
            bsum[static_cast<std::size_t>(k)] += beta_term(p);
        }
    std::vector<RF> out(static_cast<std::size_t>(budget) + 1);
    for (int a = 0; a <= budget; ++a) {
        if (lsum[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; a + b <= budget; ++b)
            if (!bsum[static_cast<std::size_t>(b)].is_zero())
                out[static_cast<std::size_t>(a + b)] += lsum[static_cast<std::size_t>(a)] * bsum[static_cast<std::size_t>(b)];
    }
    return out;
}

inline KahlerSeries assemble(int cutoff, const std::vector<PairTerm>& terms) {
    KahlerSeries z(cutoff, true);
    for (const auto& pt : terms)
        for (std::size_t s = 0; s < pt.by_s.size(); ++s)
            if (!pt.by_s[s].is_zero()) z.add(pt.r, static_cast<int>(s), pt.by_s[s]);
    return z;
}

}  // namespace detail

/// Z_{alpha gamma^t}(Q_b, Q_f, q), unnormalized.
inline KahlerSeries open_amplitude_regular(const Partition& alpha, const Partition& gamma, int cutoff) {
    detail::check_cutoff(cutoff);
    const Partition a = conjugate(alpha), g = conjugate(gamma);
    const Alphabet rho = Alphabet::rho();
    const auto pairs = detail::outer_pairs(cutoff);
    auto terms = detail::parallel_map<detail::PairTerm>(pairs.size(), [&](std::size_t i) {
        const auto& [n1, n2] = pairs[i];
        const Partition n1t = conjugate(n1), n2t = conjugate(n2);
        const Alphabet a1 = Alphabet::rho(n1), a2 = Alphabet::rho(n2), a1t = Alphabet::rho(n1t);
        detail::PairTerm pt;
        pt.r = n1.size() + n2.size();
        RF base = RF(q_half(-kappa(n1) - kappa(n2))) * schur(n1t, rho) * schur(n2, rho) * schur(n1, rho) *
                  schur(n2t, rho) * schur(a, a1t) * schur(g, a1t);
        if (base.is_zero()) return pt;
        auto fiber = [&](const Partition& p) { return schur(p, a1) * schur(p, a2); };
        pt.by_s = detail::fiber_sums(cutoff - pt.r, fiber, fiber);
        for (auto& c : pt.by_s) c = c.is_zero() ? c : base * c;
        return pt;
    });
    return detail::assemble(cutoff, terms);
}

/// Refined Z_{alpha gamma^t}(Q_b, Q_f, t, q), unnormalized.
inline KahlerSeries open_amplitude_refined(const Partition& alpha, const Partition& gamma, int cutoff) {
    detail::check_cutoff(cutoff);
    const Partition a = conjugate(alpha), g = conjugate(gamma);
    const auto pairs = detail::outer_pairs(cutoff);
    auto terms = detail::parallel_map<detail::PairTerm>(pairs.size(), [&](std::size_t i) {
        const auto& [n1, n2] = pairs[i];
        const Partition n1t = conjugate(n1), n2t = conjugate(n2);
        detail::PairTerm pt;
        pt.r = n1.size() + n2.size();
        const Alphabet qt_n1t = Alphabet::principal(Var::q, Var::t, n1t);  // q^{-rho} t^{-nu1^t}
        const Alphabet tq_n1 = Alphabet::principal(Var::t, Var::q, n1);    // t^{-rho} q^{-nu1}
        const Alphabet qt_n2 = Alphabet::principal(Var::q, Var::t, n2);    // q^{-rho} t^{-nu2}
        RF c1 = RF(q_half(norm_sq(n1))) * detail::box_factor(n1, Var::t) * schur(a, qt_n1t);
        RF c2 = RF(q_half(norm_sq(n2t))) * detail::box_factor(n2t, Var::t);
        RF c3 = RF(t_half(norm_sq(n1t))) * detail::box_factor(n1t, Var::q) * schur(g, qt_n1t);
        RF c4 = RF(t_half(norm_sq(n2))) * detail::box_factor(n2, Var::q);
        RF base = sign_rf(pt.r) * c1 * c2 * c3 * c4 * framing_refined_pair(n1, n2);
        if (base.is_zero()) return pt;
        auto lambda_term = [&](const Partition& l) {
            const int sl = l.size();
            RF fl = sign_rf(sl) * RF(q_over_t(-(norm_sq(conjugate(l)) - sl)) * q_half(-kappa(l)));
            LP m = q_over_t(sl) * q_over_t(norm_sq(l)) * t_half(kappa(l)) * q_over_t(-sl);
            return sign_rf(sl) * fl * RF(m) * schur(l, tq_n1) * schur(l, qt_n2);
        };
        auto beta_term = [&](const Partition& b) {
            const int sb = b.size();
            RF fb = sign_rf(sb) * RF(q_over_t(norm_sq(conjugate(b)) - sb) * t_half(-kappa(b)));
            LP m = q_over_t(-norm_sq(b)) * q_half(kappa(b)) * q_over_t(sb) * q_over_t(-sb);
            return sign_rf(sb) * fb * RF(m) * schur(b, tq_n1) * schur(b, qt_n2);
        };
        pt.by_s = detail::fiber_sums(cutoff - pt.r, lambda_term, beta_term);
        for (auto& c : pt.by_s) c = c.is_zero() ? c : base * c;
        return pt;
    });
    return detail::assemble(cutoff, terms);
}

inline KahlerSeries open_amplitude(const Partition& alpha, const Partition& gamma, bool refined, int cutoff) {
    return refined ? open_amplitude_refined(alpha, gamma, cutoff) : open_amplitude_regular(alpha, gamma, cutoff);
}

/// Z_{empty empty}
inline KahlerSeries closed_amplitude(bool refined, int cutoff) { return open_amplitude({}, {}, refined, cutoff); }

inline KahlerSeries normalize(const KahlerSeries& open, const KahlerSeries& closed) { return series_divide(open, closed); }

/// Two vertices joined by one edge of weight Q (stored as the Q_b power; Q_f is absent).
inline KahlerSeries resolved_conifold_amplitude(const Partition& alpha, const Partition& gamma, bool refined, int cutoff) {
    detail::check_cutoff(cutoff);
    const Partition a = conjugate(alpha), g = conjugate(gamma);
    const Var tv = refined ? Var::t : Var::q;
    KahlerSeries z(cutoff, true);
    for (const auto& nu : enumerate_up_to(cutoff)) {
        const Partition nt = conjugate(nu);
        const Alphabet al = Alphabet::principal(Var::q, tv, nt);
        RF box = refined ? detail::box_factor(nu, Var::t) * detail::box_factor(nt, Var::q)
                         : (detail::box_factor(nu, Var::t) * detail::box_factor(nt, Var::q)).substitute_t_eq_q();
        LP m = q_half(norm_sq(nu)) * (refined ? t_half(norm_sq(nt)) : q_half(norm_sq(nt)));
        z.add(nu.size(), 0, sign_rf(nu.size()) * RF(m) * box * schur(a, al) * schur(g, al));
    }
    return z;
}

/// Any geometry, normalized by the matching closed amplitude.
inline KahlerSeries normalized_amplitude(const AmplitudeSpec& spec) {
    if (spec.geometry == Geometry::resolved_conifold)
        return normalize(resolved_conifold_amplitude(spec.alpha, spec.gamma, spec.refined, spec.cutoff),
                         resolved_conifold_amplitude({}, {}, spec.refined, spec.cutoff));
    return normalize(open_amplitude(spec.alpha, spec.gamma, spec.refined, spec.cutoff),
                     closed_amplitude(spec.refined, spec.cutoff));
}

inline KahlerSeries raw_amplitude(const AmplitudeSpec& spec) {
    if (spec.geometry == Geometry::resolved_conifold)
        return resolved_conifold_amplitude(spec.alpha, spec.gamma, spec.refined, spec.cutoff);
    return open_amplitude(spec.alpha, spec.gamma, spec.refined, spec.cutoff);
}

}  // namespace tvlink
