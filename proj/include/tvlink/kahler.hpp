#pragma once

// Formal series in Q_b, Q_f with rational-function coefficients, truncated at
// a total degree. A presence bitmap separates proven zeros from unknowns.

#include "tvlink/ratfunc.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tvlink {

using Bidegree = std::pair<int, int>;  // (r, s): powers of Q_b, Q_f

class KahlerSeries {
public:
    KahlerSeries() : KahlerSeries(0, false) {}

    /// When `determined` is set every bidegree with r+s <= cutoff is known (zero unless assigned).
    explicit KahlerSeries(int cutoff, bool determined = true) : cutoff_(cutoff) {
        if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
        known_.assign(slots(cutoff), determined);
    }

    int cutoff() const { return cutoff_; }
    const std::map<Bidegree, RF>& terms() const { return terms_; }

    static bool in_range(int r, int s, int cutoff) { return r >= 0 && s >= 0 && r + s <= cutoff; }

    bool determined(int r, int s) const { return in_range(r, s, cutoff_) && known_[index(r, s)]; }

    /// Coefficient of Q_b^r Q_f^s; nullopt when it is not determined.
    std::optional<RF> coefficient(int r, int s) const {
        if (!determined(r, s)) return std::nullopt;
        auto it = terms_.find({r, s});
        return it == terms_.end() ? RF() : it->second;
    }

    /// Coefficient or throw if undetermined.
    RF at(int r, int s) const {
        auto c = coefficient(r, s);
        if (!c) throw std::out_of_range("coefficient (" + std::to_string(r) + "," + std::to_string(s) + ") is not determined");
        return *c;
    }

    void set(int r, int s, RF value) {
        if (!in_range(r, s, cutoff_)) throw std::out_of_range("bidegree beyond cutoff");
        known_[index(r, s)] = true;
        if (value.is_zero())
            terms_.erase({r, s});
        else
            terms_[{r, s}] = std::move(value);
    }

    void add(int r, int s, const RF& value) {
        if (!in_range(r, s, cutoff_)) throw std::out_of_range("bidegree beyond cutoff");
        known_[index(r, s)] = true;
        if (value.is_zero()) return;
        auto it = terms_.find({r, s});
        if (it == terms_.end()) {
            terms_.emplace(Bidegree{r, s}, value);
        } else {
            it->second += value;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void mark_unknown(int r, int s) {
        if (!in_range(r, s, cutoff_)) return;
        known_[index(r, s)] = false;
        terms_.erase({r, s});
    }

    /// All bidegrees r+s <= cutoff in graded order: total degree, then r ascending.
    static std::vector<Bidegree> bidegrees(int cutoff) {
        std::vector<Bidegree> out;
        for (int d = 0; d <= cutoff; ++d)
            for (int r = 0; r <= d; ++r) out.push_back({r, d - r});
        return out;
    }

    /// Restriction to a lower cutoff.
    KahlerSeries truncated(int cutoff) const {
        KahlerSeries out(std::min(cutoff, cutoff_), false);
        for (auto [r, s] : bidegrees(out.cutoff_))
            if (determined(r, s)) out.set(r, s, at(r, s));
        return out;
    }

    template <class F>
    KahlerSeries map_coefficients(F&& fn) const {
        KahlerSeries out(cutoff_, false);
        for (auto [r, s] : bidegrees(cutoff_))
            if (determined(r, s)) out.set(r, s, fn(at(r, s)));
        return out;
    }

    KahlerSeries swap_qt() const { return map_coefficients([](const RF& c) { return c.swap_qt(); }); }
    KahlerSeries substitute_t_eq_q() const { return map_coefficients([](const RF& c) { return c.substitute_t_eq_q(); }); }

    friend bool operator==(const KahlerSeries& a, const KahlerSeries& b) {
        if (a.cutoff_ != b.cutoff_ || a.known_ != b.known_) return false;
        for (auto [r, s] : bidegrees(a.cutoff_))
            if (a.determined(r, s) && !(a.at(r, s) == b.at(r, s))) return false;
        return true;
    }

private:
    int cutoff_;
    std::map<Bidegree, RF> terms_;  // nonzero determined coefficients only
    std::vector<bool> known_;      // presence bitmap over the triangle r+s <= cutoff

    static std::size_t slots(int c) { return static_cast<std::size_t>((c + 1) * (c + 2) / 2); }
    static std::size_t index(int r, int s) {
        int d = r + s;
        return static_cast<std::size_t>(d * (d + 1) / 2 + r);
    }
};

/// Product truncated at the shared cutoff; a coefficient is determined when all its inputs are.
inline KahlerSeries series_multiply(const KahlerSeries& a, const KahlerSeries& b) {
    if (a.cutoff() != b.cutoff()) throw std::invalid_argument("series_multiply: mismatched cutoffs");
    KahlerSeries out(a.cutoff(), false);
    for (auto [r, s] : KahlerSeries::bidegrees(a.cutoff())) {
        RF acc;
        bool ok = true;
        for (int i = 0; i <= r && ok; ++i)
            for (int j = 0; j <= s && ok; ++j) {
                if (!a.determined(i, j) || !b.determined(r - i, s - j)) {
                    ok = false;
                    break;
                }
                const RF ca = a.at(i, j);
                if (ca.is_zero()) continue;
                const RF cb = b.at(r - i, s - j);
                if (!cb.is_zero()) acc += ca * cb;
            }
        if (ok) out.set(r, s, acc);
    }
    return out;
}

/// Order-by-order quotient num / den.
inline KahlerSeries series_divide(const KahlerSeries& num, const KahlerSeries& den) {
    if (num.cutoff() != den.cutoff()) throw std::invalid_argument("series_divide: mismatched cutoffs");
    auto d00 = den.coefficient(0, 0);
    if (!d00 || d00->is_zero()) throw std::domain_error("series_divide: denominator constant term is zero");
    KahlerSeries out(num.cutoff(), false);
    for (auto [r, s] : KahlerSeries::bidegrees(num.cutoff())) {
        if (!num.determined(r, s)) continue;
        RF acc = num.at(r, s);
        bool ok = true;
        for (int i = 0; i <= r && ok; ++i)
            for (int j = 0; j <= s; ++j) {
                if (i == r && j == s) continue;
                if (!out.determined(i, j) || !den.determined(r - i, s - j)) {
                    ok = false;
                    break;
                }
                const RF c = out.at(i, j);
                if (c.is_zero()) continue;
                const RF d = den.at(r - i, s - j);
                if (!d.is_zero()) acc -= c * d;
            }
        if (ok) out.set(r, s, acc / *d00);
    }
    return out;
}

/// Evaluates sum c_{r,s} Q_b^r Q_f^s at Q_b = qb, Q_f = qf (monomials), over determined bidegrees.
inline RF substitute_kahler(const KahlerSeries& z, const LP& qb, const LP& qf) {
    RF out;
    for (auto [r, s] : KahlerSeries::bidegrees(z.cutoff())) {
        if (!z.determined(r, s)) continue;
        RF c = z.at(r, s);
        if (c.is_zero()) continue;
        out += c * RF(qb.pow(r) * qf.pow(s));
    }
    return out;
}

}  // namespace tvlink
