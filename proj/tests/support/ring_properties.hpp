#pragma once

// Randomized algebraic identities for Laurent polynomials, rational functions
// and q-expansions. Deterministic for a given seed.

#include "tvlink/format.hpp"
#include "tvlink/json_io.hpp"
#include "tvlink/parse.hpp"
#include "tvlink/qseries.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using tvlink::LP;
using tvlink::RF;

class RandomRing {
public:
    explicit RandomRing(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    tvlink::Rational coefficient() {
        int num = uniform(-9, 9);
        if (num == 0) num = 1;
        tvlink::Rational c(num, uniform(1, 3));
        c.canonicalize();
        return c;
    }

    LP poly(int max_terms = 4) {
        LP p;
        const int n = uniform(1, max_terms);
        for (int i = 0; i < n; ++i) p += LP::monomial(uniform(-4, 6), uniform(-4, 4), coefficient());
        return p.is_zero() ? LP(1) : p;
    }

    /// 1 - q^{a/2} t^{b/2} or 1 + q^{a/2} with a > 0, b >= 0: unit lowest q part,
    /// and nonzero at t=q.
    LP factor() {
        const int a = 2 * uniform(1, 3);
        if (uniform(0, 4) == 0) return LP(1) + LP::monomial(a, 0);
        return LP(1) - LP::monomial(a, 2 * uniform(0, 2));
    }

    RF ratfunc() {
        RF r(poly());
        const int k = uniform(0, 2);
        for (int i = 0; i < k; ++i) r /= RF(factor());
        return r;
    }

private:
    std::mt19937_64 rng_;
};

struct PropertyTally {
    int checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 20) failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
};

/// Runs `rounds` rounds of ring identities; each round checks 20 identities.
inline PropertyTally ring_identities(std::uint64_t seed, int rounds) {
    RandomRing g(seed);
    PropertyTally t;
    for (int round = 0; round < rounds; ++round) {
        const LP a = g.poly(), b = g.poly(), c = g.poly();
        const std::string tag = " (round " + std::to_string(round) + ")";
        t.expect((a + b) + c == a + (b + c), "LP addition associative" + tag);
        t.expect(a * b == b * a, "LP multiplication commutative" + tag);
        t.expect((a * b) * c == a * (b * c), "LP multiplication associative" + tag);
        t.expect(a * (b + c) == a * b + a * c, "LP distributive" + tag);
        t.expect(a - a == LP{}, "LP additive inverse" + tag);
        {
            auto q = (a * b).divide_exact(b);
            t.expect(q && *q == a, "LP exact division recovers the factor" + tag);
        }
        t.expect(a.swap_qt().swap_qt() == a, "swap_qt involution" + tag);
        t.expect((a * b).substitute_t_eq_q() == a.substitute_t_eq_q() * b.substitute_t_eq_q(),
                 "t=q substitution multiplicative" + tag);

        const RF x = g.ratfunc(), y = g.ratfunc(), z = g.ratfunc();
        t.expect((x + y) - y == x, "RF add then subtract" + tag);
        t.expect(x + y == y + x, "RF addition commutative" + tag);
        t.expect((x + y) + z == x + (y + z), "RF addition associative" + tag);
        t.expect(x * (y + z) == x * y + x * z, "RF distributive" + tag);
        t.expect((x * y) / y == x, "RF multiply then divide" + tag);
        t.expect(x / x == RF(1), "RF self quotient" + tag);
        t.expect((x * y).swap_qt() == x.swap_qt() * y.swap_qt(), "RF swap_qt multiplicative" + tag);
        t.expect((x + y).substitute_t_eq_q() == x.substitute_t_eq_q() + y.substitute_t_eq_q(),
                 "RF t=q substitution additive" + tag);
        t.expect(tvlink::rf_from_json(tvlink::rf_to_json(x)) == x, "RF JSON round trip" + tag);
        t.expect(tvlink::parse_rf(tvlink::format_rf(x)) == x, "RF text round trip" + tag);

        const int lim = 12;
        const LP sx = tvlink::series_in_q(x, lim), sy = tvlink::series_in_q(y, lim);
        const int lo = std::min(x.numerator().min_ex(), y.numerator().min_ex());
        // the product of two truncations is exact up to lim plus the lower start
        const int exact = lim + lo;
        t.expect(tvlink::series_in_q(x * y, exact) == LP::mul_truncated(sx, sy, exact),
                 "q-expansion multiplicative" + tag);
        t.expect(tvlink::series_in_q(x + y, lim) == sx + sy, "q-expansion additive" + tag);
    }
    return t;
}

}  // namespace oracle
