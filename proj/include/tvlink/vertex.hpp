#pragma once

// Regular and refined topological vertices and the framing factors used when
// gluing them along an internal edge.

#include "tvlink/specialize.hpp"

namespace tvlink {

/// (q/t)^{n/2}
inline LP q_over_t(int n) { return LP::monomial(n, -n); }

inline RF sign_rf(int n) { return RF(n % 2 == 0 ? 1 : -1); }

/// C_{lambda mu nu}(q) = q^{kappa(mu)/2} s_{nu^t}(q^{-rho}) sum_eta s_{lambda^t/eta}(q^{-rho-nu}) s_{mu/eta}(q^{-rho-nu^t})
inline RF vertex_regular(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const Partition lt = conjugate(lambda), nt = conjugate(nu);
    const Alphabet a_nu = Alphabet::rho(nu), a_nt = Alphabet::rho(nt);
    RF sum;
    for (const auto& eta : common_subpartitions(lt, mu)) {
        RF x = skew_schur(lt, eta, a_nu);
        if (x.is_zero()) continue;
        sum += x * skew_schur(mu, eta, a_nt);
    }
    return RF(q_half(kappa(mu))) * schur(nt, Alphabet::rho()) * sum;
}

inline RF framing_regular(const Partition& nu) {
    return sign_rf(nu.size()) * RF(q_half(-kappa(nu)));
}

/// C_{lambda mu nu}(t,q); with first == Var::q every t and q are exchanged.
inline RF vertex_refined(const Partition& lambda, const Partition& mu, const Partition& nu, Var first = Var::t) {
    const Partition lt = conjugate(lambda), nt = conjugate(nu);
    const Alphabet a1 = Alphabet::principal(Var::t, Var::q, nu);   // t^{-rho} q^{-nu}
    const Alphabet a2 = Alphabet::principal(Var::q, Var::t, nt);   // q^{-rho} t^{-nu^t}
    RF sum;
    for (const auto& eta : common_subpartitions(lt, mu)) {
        RF x = skew_schur(lt, eta, a1);
        if (x.is_zero()) continue;
        sum += RF(q_over_t(eta.size() + lambda.size() - mu.size())) * x * skew_schur(mu, eta, a2);
    }
    RF out = RF(q_over_t(norm_sq(mu) + norm_sq(nu)) * t_half(kappa(mu))) * macdonald_p_at_rho(nu) * sum;
    return first == Var::t ? out : out.swap_qt();
}

/// f_{nu1}(t,q) f_{nu2}(q,t)
inline RF framing_refined_pair(const Partition& nu1, const Partition& nu2) {
    const int s1 = nu1.size(), s2 = nu2.size();
    LP m = q_over_t(-(norm_sq(conjugate(nu1)) - s1)) * q_half(-kappa(nu1)) *
           q_over_t(norm_sq(conjugate(nu2)) - s2) * t_half(-kappa(nu2));
    return sign_rf(s1 + s2) * RF(m);
}

}  // namespace tvlink
