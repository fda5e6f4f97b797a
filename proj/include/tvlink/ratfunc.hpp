#pragma once

// Rational functions in q^{1/2}, t^{1/2}. The denominator is kept in product
// form: a multiset of content-free polynomial factors, each normalized so its
// lowest term is exactly 1. Sums use the factor-wise lcm; factors that divide
// the numerator are cancelled by trial division. No polynomial GCD is used.

#include "tvlink/laurent.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace tvlink {

class RationalFunction {
public:
    using Factors = std::map<LP, int>;

    RationalFunction() = default;
    RationalFunction(long c) : num_(c) {}  // NOLINT
    RationalFunction(LP num) : num_(std::move(num)) {}  // NOLINT

    /// num / den for an arbitrary nonzero den.
    static RationalFunction quotient(const LP& num, const LP& den) { return RationalFunction(num) / RationalFunction(den); }

    /// num / prod(factors^mult); factors need not be canonical.
    static RationalFunction from_factors(LP num, const std::vector<std::pair<LP, int>>& factors) {
        RationalFunction r(std::move(num));
        for (const auto& [f, m] : factors) {
            if (m < 0) throw std::invalid_argument("negative factor multiplicity");
            for (int i = 0; i < m; ++i) r = r / RationalFunction(f);
        }
        return r;
    }

    const LP& numerator() const { return num_; }
    const Factors& factors() const { return den_; }

    /// Expanded denominator polynomial.
    LP denominator() const {
        LP d(1);
        for (const auto& [f, m] : den_) d *= f.pow(m);
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return combine(a, b, false); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return combine(a, b, true); }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        RationalFunction r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (const auto& [f, m] : b.den_) r.den_[f] += m;
        if (!r.den_.empty() && !r.num_.is_monomial()) r.cancel();
        return r;
    }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        if (a.is_zero()) return {};
        RationalFunction r;
        auto [unit, canon] = split_content(b.num_);
        r.den_ = a.den_;
        LP up(1);
        for (const auto& [f, m] : b.den_) {
            auto it = r.den_.find(f);
            int k = m;
            if (it != r.den_.end()) {
                int used = std::min(k, it->second);
                it->second -= used;
                k -= used;
                if (it->second == 0) r.den_.erase(it);
            }
            if (k > 0) up *= f.pow(k);
        }
        r.num_ = (a.num_ * up).scaled(1 / unit.second, Monomial{} / unit.first);
        if (!canon.is_zero()) r.den_[canon] += 1;
        r.cancel();
        return r;
    }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    RationalFunction pow(int n) const {
        if (n < 0) return RationalFunction(1) / pow(-n);
        RationalFunction r(1);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    /// Value equality by cross-multiplication over a common multiple of the denominators.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        Factors l = lcm(a.den_, b.den_);
        return a.num_ * complement(l, a.den_) == b.num_ * complement(l, b.den_);
    }

    RationalFunction swap_qt() const { return map_polys([](const LP& p) { return p.swap_qt(); }); }
    RationalFunction substitute_t_eq_q() const { return map_polys([](const LP& p) { return p.substitute_t_eq_q(); }); }
    RationalFunction substitute_monomials(Monomial mq, Monomial mt) const {
        return map_polys([&](const LP& p) { return p.substitute_monomials(mq, mt); });
    }

    bool t_free() const {
        if (!num_.t_free()) return false;
        for (const auto& [f, m] : den_)
            if (!f.t_free()) return false;
        return true;
    }

    /// Splits p = c * m * canon with canon content-free and lowest term 1;
    /// canon is the zero polynomial when p is a monomial.
    static std::pair<std::pair<Monomial, Rational>, LP> split_content(const LP& p) {
        if (p.is_zero()) throw std::domain_error("content of the zero polynomial");
        if (p.is_monomial()) return {{p.low().first, p.low().second}, LP{}};
        Monomial shift{p.min_ex(), p.min_ey()};
        LP shifted = p.scaled(1, Monomial{} / shift);
        Rational c = shifted.low().second;
        LP canon = shifted.scaled(1 / c);
        return {{shift, c}, canon};
    }

private:
    LP num_;
    Factors den_;

    static Factors lcm(const Factors& a, const Factors& b) {
        Factors l = a;
        for (const auto& [f, m] : b) {
            auto& slot = l[f];
            slot = std::max(slot, m);
        }
        return l;
    }

    /// prod over l of f^(l_f - a_f)
    static LP complement(const Factors& l, const Factors& a) {
        LP out(1);
        for (const auto& [f, m] : l) {
            auto it = a.find(f);
            int k = m - (it == a.end() ? 0 : it->second);
            if (k > 0) out *= f.pow(k);
        }
        return out;
    }

    static RationalFunction combine(const RationalFunction& a, const RationalFunction& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        RationalFunction r;
        if (a.den_ == b.den_) {
            r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
        } else {
            r.den_ = lcm(a.den_, b.den_);
            LP x = a.num_ * complement(r.den_, a.den_);
            LP y = b.num_ * complement(r.den_, b.den_);
            r.num_ = subtract ? x - y : x + y;
        }
        r.cancel();
        return r;
    }

    void cancel() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                auto q = num_.divide_exact(it->first);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            if (it->second == 0)
                it = den_.erase(it);
            else
                ++it;
        }
    }

    template <class F>
    RationalFunction map_polys(F&& fn) const {
        RationalFunction r(fn(num_));
        for (const auto& [f, m] : den_) {
            LP g = fn(f);
            if (g.is_zero()) throw std::domain_error("substitution sends a denominator factor to zero");
            RationalFunction gf(g);
            for (int i = 0; i < m; ++i) r = r / gf;
        }
        return r;
    }
};

using RF = RationalFunction;

}  // namespace tvlink
