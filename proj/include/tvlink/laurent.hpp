#pragma once

// Laurent polynomials in q^{1/2}, t^{1/2} with exact rational coefficients.
// A monomial q^{ex/2} t^{ey/2} is stored by its doubled exponents (ex, ey).

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tvlink {

using Rational = mpq_class;

struct Monomial {
    int ex = 0;  // doubled q exponent
    int ey = 0;  // doubled t exponent

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    Monomial operator*(const Monomial& o) const { return {ex + o.ex, ey + o.ey}; }
    Monomial operator/(const Monomial& o) const { return {ex - o.ex, ey - o.ey}; }
    Monomial swapped() const { return {ey, ex}; }
};

class LaurentPolynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    LaurentPolynomial() = default;
    LaurentPolynomial(long c) {  // NOLINT: implicit constants are convenient in formulas
        if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
    }
    explicit LaurentPolynomial(const Rational& c) {
        if (c != 0) terms_.push_back({Monomial{}, c});
    }

    static LaurentPolynomial monomial(int ex, int ey, const Rational& c = 1) {
        LaurentPolynomial p;
        if (c != 0) p.terms_.push_back({Monomial{ex, ey}, c});
        return p;
    }
    static LaurentPolynomial monomial(Monomial m, const Rational& c = 1) { return monomial(m.ex, m.ey, c); }

    /// Builds from arbitrary (possibly repeated, zero) terms.
    static LaurentPolynomial from_terms(std::vector<Term> terms) {
        LaurentPolynomial p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{}); }

    const Term& low() const { return terms_.front(); }
    const Term& lead() const { return terms_.back(); }

    Rational coefficient(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        return (it != terms_.end() && it->first == m) ? it->second : Rational(0);
    }

    int min_ex() const { return terms_.front().first.ex; }
    int max_ex() const { return terms_.back().first.ex; }
    int min_ey() const {
        int m = terms_.front().first.ey;
        for (const auto& t : terms_) m = std::min(m, t.first.ey);
        return m;
    }
    int max_ey() const {
        int m = terms_.front().first.ey;
        for (const auto& t : terms_) m = std::max(m, t.first.ey);
        return m;
    }
    bool t_free() const {
        for (const auto& t : terms_)
            if (t.first.ey != 0) return false;
        return true;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial p = *this;
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return merge(a, b, false);
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return merge(a, b, true);
    }
    LaurentPolynomial& operator+=(const LaurentPolynomial& b) { return *this = *this + b; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& b) { return *this = *this - b; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_monomial()) return b.scaled(a.terms_[0].second, a.terms_[0].first);
        if (b.is_monomial()) return a.scaled(b.terms_[0].second, b.terms_[0].first);
        std::vector<Term> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) out.push_back({x.first * y.first, x.second * y.second});
        return from_terms(std::move(out));
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& b) { return *this = *this * b; }

    /// c * m * this
    LaurentPolynomial scaled(const Rational& c, Monomial m = {}) const {
        if (c == 0) return {};
        LaurentPolynomial p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.first * m, t.second * c});
        return p;
    }

    LaurentPolynomial pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
        LaurentPolynomial r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

    /// Product truncated to terms with doubled q exponent <= max_ex.
    static LaurentPolynomial mul_truncated(const LaurentPolynomial& a, const LaurentPolynomial& b, int max_ex) {
        std::vector<Term> out;
        for (const auto& x : a.terms_) {
            if (b.is_zero() || x.first.ex + b.min_ex() > max_ex) break;
            for (const auto& y : b.terms_) {
                if (x.first.ex + y.first.ex > max_ex) break;
                out.push_back({x.first * y.first, x.second * y.second});
            }
        }
        return from_terms(std::move(out));
    }

    LaurentPolynomial truncated(int max_ex) const {
        LaurentPolynomial p;
        for (const auto& t : terms_)
            if (t.first.ex <= max_ex) p.terms_.push_back(t);
        return p;
    }

    LaurentPolynomial swap_qt() const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back({t.first.swapped(), t.second});
        return from_terms(std::move(out));
    }

    LaurentPolynomial substitute_t_eq_q() const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back({Monomial{t.first.ex + t.first.ey, 0}, t.second});
        return from_terms(std::move(out));
    }

    /// Replaces q^{1/2} -> mq, t^{1/2} -> mt (monomials with coefficients).
    LaurentPolynomial substitute_monomials(Monomial mq, Monomial mt) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_)
            out.push_back({Monomial{mq.ex * t.first.ex + mt.ex * t.first.ey, mq.ey * t.first.ex + mt.ey * t.first.ey},
                           t.second});
        return from_terms(std::move(out));
    }

    /// Exact quotient this / f, or nullopt when f does not divide.
    std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f) const {
        if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
        if (is_zero()) return LaurentPolynomial{};
        if (f.is_monomial()) return scaled(1 / f.terms_[0].second, Monomial{} / f.terms_[0].first);
        // Quotient exponents are confined to a box fixed by the degree ranges.
        const int ex_lo = min_ex() - f.min_ex(), ex_hi = max_ex() - f.max_ex();
        const int ey_lo = min_ey() - f.min_ey(), ey_hi = max_ey() - f.max_ey();
        if (ex_lo > ex_hi || ey_lo > ey_hi) return std::nullopt;
        const Monomial flead = f.lead().first;
        const Rational fc = f.lead().second;
        LaurentPolynomial r = *this;
        std::vector<Term> quot;
        while (!r.is_zero()) {
            Monomial m = r.lead().first / flead;
            if (m.ex < ex_lo || m.ex > ex_hi || m.ey < ey_lo || m.ey > ey_hi) return std::nullopt;
            Rational c = r.lead().second / fc;
            quot.push_back({m, c});
            r -= f.scaled(c, m);
        }
        return from_terms(std::move(quot));
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
        return true;
    }

    /// Total order used as a map key; not an algebraic order.
    friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
            int c = cmp(a.terms_[i].second, b.terms_[i].second);
            if (c != 0) return c < 0;
        }
        return a.terms_.size() < b.terms_.size();
    }

private:
    std::vector<Term> terms_;  // sorted by monomial, no zero coefficients

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.second == 0; });
        terms_ = std::move(out);
    }

    static LaurentPolynomial merge(const LaurentPolynomial& a, const LaurentPolynomial& b, bool subtract) {
        LaurentPolynomial p;
        p.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
                p.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
                p.terms_.push_back({b.terms_[j].first, subtract ? Rational(-b.terms_[j].second) : b.terms_[j].second});
                ++j;
            } else {
                Rational c = subtract ? Rational(a.terms_[i].second - b.terms_[j].second)
                                      : Rational(a.terms_[i].second + b.terms_[j].second);
                if (c != 0) p.terms_.push_back({a.terms_[i].first, c});
                ++i;
                ++j;
            }
        }
        return p;
    }
};

using LP = LaurentPolynomial;

inline LP q_half(int e) { return LP::monomial(e, 0); }
inline LP t_half(int e) { return LP::monomial(0, e); }
inline LP mono(int ex, int ey, const Rational& c = 1) { return LP::monomial(ex, ey, c); }

}  // namespace tvlink
