#pragma once

// Schur and Macdonald specializations at alphabets of the form
// prefix + geometric tail, e.g. q^{-rho-nu} = {q^{i-1/2-nu_i}}.

#include "tvlink/partition.hpp"
#include "tvlink/ratfunc.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace tvlink {

enum class Var { q, t };

inline Monomial var_power(Var v, int doubled) { return v == Var::q ? Monomial{doubled, 0} : Monomial{0, doubled}; }

struct Alphabet {
    std::vector<Monomial> prefix;
    std::optional<Monomial> tail_start;  // absent for a finite alphabet
    Monomial tail_ratio{};

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
    friend bool operator<(const Alphabet& a, const Alphabet& b) {
        return std::tie(a.prefix, a.tail_start, a.tail_ratio) < std::tie(b.prefix, b.tail_start, b.tail_ratio);
    }

    bool finite() const { return !tail_start.has_value(); }

    /// u^{-rho} v^{-nu} = {u^{i-1/2} v^{-nu_i}}_{i>=1}.
    static Alphabet principal(Var u, Var v, const Partition& nu) {
        Alphabet a;
        for (std::size_t i = 1; i <= nu.length(); ++i)
            a.prefix.push_back(var_power(u, 2 * static_cast<int>(i) - 1) * var_power(v, -2 * nu.row(i)));
        a.tail_start = var_power(u, 2 * static_cast<int>(nu.length()) + 1);
        a.tail_ratio = var_power(u, 2);
        return a;
    }
    /// q^{-rho-nu}
    static Alphabet rho(const Partition& nu = {}) { return principal(Var::q, Var::q, nu); }

    static Alphabet finite_letters(std::vector<Monomial> letters) {
        Alphabet a;
        a.prefix = std::move(letters);
        return a;
    }

    /// Letter k (0-based) of the full sequence.
    Monomial letter(std::size_t k) const {
        if (k < prefix.size()) return prefix[k];
        if (!tail_start) throw std::out_of_range("finite alphabet exhausted");
        Monomial m = *tail_start;
        for (std::size_t i = prefix.size(); i < k; ++i) m = m * tail_ratio;
        return m;
    }

    /// Finite letters followed by this alphabet.
    Alphabet prepended(const std::vector<Monomial>& letters) const {
        Alphabet a = *this;
        a.prefix.insert(a.prefix.begin(), letters.begin(), letters.end());
        return a;
    }

    void validate() const {
        if (tail_start) {
            const bool pure_q = tail_ratio.ey == 0 && tail_ratio.ex > 0;
            const bool pure_t = tail_ratio.ex == 0 && tail_ratio.ey > 0;
            if (!pure_q && !pure_t) throw std::invalid_argument("tail ratio must be a positive power of q^{1/2} or t^{1/2}");
        }
    }
};

namespace detail {

class HMemo {
public:
    static HMemo& instance() {
        static HMemo m;
        return m;
    }

    RF get(int k, const Alphabet& a) {
        {
            std::shared_lock lock(mu_);
            auto it = table_.find(a);
            if (it != table_.end() && static_cast<int>(it->second.size()) > k) return it->second[static_cast<std::size_t>(k)];
        }
        std::vector<RF> values = compute(k, a);
        std::unique_lock lock(mu_);
        auto& slot = table_[a];
        if (slot.size() < values.size()) slot = values;  // idempotent: values are deterministic
        return slot[static_cast<std::size_t>(k)];
    }

private:
    std::shared_mutex mu_;
    std::map<Alphabet, std::vector<RF>> table_;

    static std::vector<RF> compute(int k, const Alphabet& a) {
        a.validate();
        // h_j of the prefix: coefficients of prod 1/(1 - x z)
        std::vector<LP> hp(static_cast<std::size_t>(k) + 1);
        hp[0] = LP(1);
        for (const auto& x : a.prefix) {
            LP xm = LP::monomial(x);
            for (int j = 1; j <= k; ++j) hp[static_cast<std::size_t>(j)] += xm * hp[static_cast<std::size_t>(j) - 1];
        }
        std::vector<RF> out;
        out.reserve(static_cast<std::size_t>(k) + 1);
        if (!a.tail_start) {
            for (int j = 0; j <= k; ++j) out.emplace_back(hp[static_cast<std::size_t>(j)]);
            return out;
        }
        const Monomial c = *a.tail_start, r = a.tail_ratio;
        // h_m(tail) = c^m / prod_{i<=m}(1 - r^i); combine over the common denominator prod_{i<=n}(1 - r^i)
        auto one_minus = [](Monomial m) { return LP(1) - LP::monomial(m); };
        auto rpow = [&](int i) { return Monomial{r.ex * i, r.ey * i}; };
        auto cpow = [&](int i) { return Monomial{c.ex * i, c.ey * i}; };
        for (int n = 0; n <= k; ++n) {
            LP num;
            for (int j = 0; j <= n; ++j) {
                LP term = hp[static_cast<std::size_t>(j)] * LP::monomial(cpow(n - j));
                for (int i = n - j + 1; i <= n; ++i) term *= one_minus(rpow(i));
                num += term;
            }
            std::vector<std::pair<LP, int>> factors;
            for (int i = 1; i <= n; ++i) factors.push_back({one_minus(rpow(i)), 1});
            out.push_back(RF::from_factors(num, factors));
        }
        return out;
    }
};

}  // namespace detail

/// h_k(A); h_0 = 1 and negative k gives 0.
inline RF complete_homogeneous(int k, const Alphabet& a) {
    if (k < 0) return RF();
    if (k == 0) return RF(1);
    return detail::HMemo::instance().get(k, a);
}

/// s_{lambda/eta}(A) by Jacobi-Trudi; zero unless eta is contained in lambda.
inline RF skew_schur(const Partition& lambda, const Partition& eta, const Alphabet& a) {
    if (!contains(lambda, eta)) return RF();
    if (lambda == eta) return RF(1);
    const int n = static_cast<int>(lambda.length());
    std::vector<std::vector<RF>> m(static_cast<std::size_t>(n), std::vector<RF>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                complete_homogeneous(lambda.row(static_cast<std::size_t>(i)) - eta.row(static_cast<std::size_t>(j)) - i + j, a);
    // Laplace expansion row by row, memoized on the set of used columns.
    std::vector<std::optional<RF>> memo(static_cast<std::size_t>(1) << n);
    auto det = [&](auto&& self, unsigned used) -> RF {
        const int row = __builtin_popcount(used);
        if (row == n) return RF(1);
        auto& slot = memo[used];
        if (slot) return *slot;
        RF acc;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (used & (1u << j)) continue;
            const RF& e = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
            if (!e.is_zero()) {
                RF minor = self(self, used | (1u << j));
                if (!minor.is_zero()) {
                    if (pos % 2 == 0)
                        acc += e * minor;
                    else
                        acc -= e * minor;
                }
            }
            ++pos;
        }
        slot = acc;
        return acc;
    };
    return det(det, 0u);
}

inline RF schur(const Partition& lambda, const Alphabet& a) { return skew_schur(lambda, Partition{}, a); }

/// prod_{s in nu} (1 - x^{a(s)+1} y^{l(s)})^{-1} with (x, y) = (t, q) or (q, t), row-convention arm/leg.
inline RF macdonald_tilde_z(const Partition& nu, Var first) {
    const Var second = first == Var::t ? Var::q : Var::t;
    std::vector<std::pair<LP, int>> factors;
    for (const auto& [cell, st] : cell_stats(nu)) {
        Monomial m = var_power(first, 2 * (st.arm + 1)) * var_power(second, 2 * st.leg);
        factors.push_back({LP(1) - LP::monomial(m), 1});
    }
    return RF::from_factors(LP(1), factors);
}

/// P_{nu^t}(t^{-rho}; q, t) = t^{||nu||^2/2} tilde-Z_nu(t, q).
inline RF macdonald_p_at_rho(const Partition& nu) {
    return RF(LP::monomial(0, norm_sq(nu))) * macdonald_tilde_z(nu, Var::t);
}

/// prod_{s in nu} (1 - q^{hook(s)})^{-1}
inline RF hook_product(const Partition& nu) {
    std::vector<std::pair<LP, int>> factors;
    for (const auto& [cell, st] : cell_stats(nu)) factors.push_back({LP(1) - LP::monomial(2 * st.hook, 0), 1});
    return RF::from_factors(LP(1), factors);
}

}  // namespace tvlink
