#pragma once

// Truncated q-expansions of rational functions. t is carried as a Laurent
// polynomial inside each q-coefficient.

#include "tvlink/format.hpp"
#include "tvlink/ratfunc.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace tvlink {

struct ExpansionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Residual series: value = prefactor * sum_k q^{k/2} coeffs[k], k <= order2.
struct QSeries {
    LP prefactor{1};
    int order2 = 0;  // doubled q order, inclusive
    std::map<int, LP> coeffs;  // values use only the t exponent

    bool is_zero() const { return coeffs.empty(); }

    /// The represented Laurent polynomial, prefactor multiplied back in.
    LP to_laurent() const {
        std::vector<LP::Term> terms;
        const Monomial pm = prefactor.is_zero() ? Monomial{} : prefactor.low().first;
        const Rational pc = prefactor.is_zero() ? Rational(0) : prefactor.low().second;
        for (const auto& [k, poly] : coeffs)
            for (const auto& [m, c] : poly.terms()) terms.push_back({Monomial{pm.ex + k, pm.ey + m.ey}, c * pc});
        return LP::from_terms(std::move(terms));
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.prefactor == b.prefactor && a.order2 == b.order2 && a.coeffs == b.coeffs;
    }
};

namespace detail {

/// 1/f as a q-series through doubled exponent `limit`; f must be content-free
/// with a single-monomial lowest q part.
inline LP invert_factor(const LP& f, int limit) {
    LP f0, g;
    for (const auto& [m, c] : f.terms()) {
        if (m.ex == f.min_ex())
            f0 += LP::monomial(m, c);
        else
            g += LP::monomial(m, c);
    }
    if (!f0.is_monomial()) return {};
    const Monomial m0 = f0.low().first;
    const Rational c0 = f0.low().second;
    // f = f0 (1 + h), h = g / f0
    LP h = -g.scaled(1 / c0, Monomial{} / m0);
    LP inv(1), power(1);
    while (true) {
        power = LP::mul_truncated(power, h, limit);
        if (power.is_zero()) break;
        inv += power;
    }
    return inv.scaled(1 / c0, Monomial{} / m0);
}

}  // namespace detail

inline bool unit_lowest_q_part(const LP& f) {
    int n = 0;
    for (const auto& [m, c] : f.terms())
        if (m.ex == f.min_ex()) ++n;
    return n == 1;
}

/// All terms of the q-expansion with doubled q exponent <= abs_limit.
inline LP series_in_q(const RF& a, int abs_limit) {
    if (a.is_zero()) return {};
    const LP& num = a.numerator();
    for (const auto& [f, m] : a.factors())
        if (!unit_lowest_q_part(f))
            throw ExpansionError("denominator factor (" + format_lp(f) +
                                 ") has no unit lowest-q term; q-expansion is ambiguous");
    const int rel = abs_limit - num.min_ex();
    if (rel < 0) return {};
    LP den_inv(1);
    for (const auto& [f, m] : a.factors()) {
        LP inv = detail::invert_factor(f, rel);
        for (int i = 0; i < m; ++i) den_inv = LP::mul_truncated(den_inv, inv, rel);
    }
    return LP::mul_truncated(num, den_inv, abs_limit);
}

/// gcd of the numerators over lcm of the denominators, positive.
inline Rational content(const LP& p) {
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    if (g == 0) return 1;
    Rational r(g, l);
    r.canonicalize();
    return r;
}

/// Splits a truncated expansion into c * q^{a/2} t^{b/2} times a residual:
/// a is the lowest q exponent, b the lowest t exponent in range, |c| the
/// content of the retained terms and sign(c) that of the lowest term.
/// order2 is the residual doubled order to record.
inline QSeries extract_prefactor(const LP& raw, int order2) {
    QSeries s;
    s.order2 = order2;
    if (raw.is_zero()) return s;
    const int a = raw.min_ex(), b = raw.min_ey();
    const Rational scale = content(raw) * (raw.low().second > 0 ? 1 : -1);
    s.prefactor = LP::monomial(a, b, scale);
    std::map<int, std::vector<LP::Term>> buckets;
    for (const auto& [m, c] : raw.terms()) buckets[m.ex - a].push_back({Monomial{0, m.ey - b}, c / scale});
    for (auto& [k, terms] : buckets) {
        LP poly = LP::from_terms(std::move(terms));
        if (!poly.is_zero()) s.coeffs.emplace(k, std::move(poly));
    }
    return s;
}

/// q-expansion through residual order q^{q_order}, prefactor extracted.
inline QSeries expand(const RF& a, int q_order) {
    if (q_order < 0) throw std::invalid_argument("q_order must be nonnegative");
    if (a.is_zero()) return extract_prefactor(LP{}, 2 * q_order);
    const int e_min = a.numerator().min_ex();
    return extract_prefactor(series_in_q(a, e_min + 2 * q_order), 2 * q_order);
}

}  // namespace tvlink
