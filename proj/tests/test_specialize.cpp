#include "support/tableau_oracle.hpp"
#include "tvlink/format.hpp"
#include "tvlink/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tvlink;

namespace {

RF rf(const std::string& s) { return parse_rf(s); }

// Doubled q order through which determinant and tableau sums are compared (q^8).
constexpr int kBound = 16;

std::string label(const Partition& l, const Partition& e) { return to_string(l) + "/" + to_string(e); }

}  // namespace

TEST_CASE("complete homogeneous values") {
    const Alphabet rho = Alphabet::rho();
    CHECK(complete_homogeneous(0, rho) == RF(1));
    CHECK(complete_homogeneous(-1, rho).is_zero());
    CHECK(complete_homogeneous(1, rho) == rf("sqrt(q)/(1-q)"));
    CHECK(complete_homogeneous(2, rho) == rf("q/((1-q)*(1-q^2))"));
}

TEST_CASE("complete homogeneous matches direct monomial sums") {
    // h_k over letters q^{1/2}, q^{3/2}, ...: weakly increasing index multisets
    const std::vector<Alphabet> alphabets = {Alphabet::rho(), Alphabet::rho(Partition{2, 1}),
                                             Alphabet::principal(Var::q, Var::t, Partition{1})};
    for (const auto& a : alphabets)
        for (int k = 1; k <= 6; ++k) {
            const Partition row{k};
            const LP direct = oracle::skew_schur_truncated(row, {}, a, kBound);
            REQUIRE(series_in_q(complete_homogeneous(k, a), kBound) == direct);
        }
}

TEST_CASE("schur examples") {
    const Alphabet rho = Alphabet::rho();
    CHECK(schur({}, rho) == RF(1));
    CHECK(schur(Partition{1}, rho) == rf("sqrt(q)/(1-q)"));
    CHECK(schur(Partition{2}, rho) == rf("q/((1-q)*(1-q^2))"));
    CHECK(schur(Partition{1, 1}, rho) == rf("q^2/((1-q)*(1-q^2))"));
    CHECK(skew_schur(Partition{2, 1}, Partition{2, 1}, rho) == RF(1));
    CHECK(skew_schur(Partition{1}, Partition{2}, rho).is_zero());
    CHECK(skew_schur(Partition{2}, Partition{1}, rho) == complete_homogeneous(1, rho));
}

TEST_CASE("tableau oracle single-cell cases") {
    const LP one = oracle::skew_schur_truncated(Partition{1}, {}, Alphabet::rho(), 11);
    LP expect;
    for (int k = 0; k <= 5; ++k) expect += mono(2 * k + 1, 0);
    CHECK(one == expect);
}

TEST_CASE("determinant evaluation matches tableau enumeration over q^{-rho}") {
    const Alphabet a = Alphabet::rho();
    for (const auto& lambda : enumerate_up_to(5))
        for (const auto& eta : enumerate_up_to(lambda.size())) {
            if (!contains(lambda, eta)) continue;
            INFO(label(lambda, eta));
            REQUIRE(series_in_q(skew_schur(lambda, eta, a), kBound) ==
                    oracle::skew_schur_truncated(lambda, eta, a, kBound));
        }
}

TEST_CASE("determinant evaluation matches tableau enumeration over q^{-rho-(1)}") {
    const Alphabet a = Alphabet::rho(Partition{1});
    for (const auto& lambda : enumerate_up_to(5))
        for (const auto& eta : enumerate_up_to(lambda.size())) {
            if (!contains(lambda, eta)) continue;
            INFO(label(lambda, eta));
            REQUIRE(series_in_q(skew_schur(lambda, eta, a), kBound) ==
                    oracle::skew_schur_truncated(lambda, eta, a, kBound));
        }
}

TEST_CASE("determinant evaluation matches tableau enumeration over t^{-rho} q^{-(2,1)}") {
    // The tail of t^{-rho}q^{-(2,1)} is geometric in t, so both sides are
    // expanded in t: evaluate at the swapped alphabet and exchange q and t back.
    const Alphabet lib = Alphabet::principal(Var::t, Var::q, Partition{2, 1});
    const Alphabet swapped = Alphabet::principal(Var::q, Var::t, Partition{2, 1});
    for (const auto& lambda : enumerate_up_to(5))
        for (const auto& eta : enumerate_up_to(lambda.size())) {
            if (!contains(lambda, eta)) continue;
            INFO(label(lambda, eta));
            const RF value = skew_schur(lambda, eta, lib).swap_qt();
            REQUIRE(series_in_q(value, kBound) == oracle::skew_schur_truncated(lambda, eta, swapped, kBound));
        }
}

TEST_CASE("skew branching over a finite prefix") {
    // s_{lambda/eta}(A u B) = sum_mu s_{lambda/mu}(A) s_{mu/eta}(B), A finite, B q^{-rho}
    const std::vector<Monomial> a_letters = {{3, 1}, {1, -2}};
    const Alphabet a = Alphabet::finite_letters(a_letters);
    const Alphabet b = Alphabet::rho();
    const Alphabet ab = b.prepended(a_letters);
    for (const auto& lambda : enumerate_up_to(4))
        for (const auto& eta : enumerate_up_to(lambda.size())) {
            if (!contains(lambda, eta)) continue;
            RF sum;
            for (const auto& mu : enumerate_up_to(lambda.size()))
                if (contains(lambda, mu) && contains(mu, eta)) sum += skew_schur(lambda, mu, a) * skew_schur(mu, eta, b);
            INFO(label(lambda, eta));
            REQUIRE(skew_schur(lambda, eta, ab) == sum);
        }
}

TEST_CASE("box counting function values") {
    CHECK(macdonald_tilde_z({}, Var::t) == RF(1));
    CHECK(macdonald_tilde_z(Partition{1}, Var::t) == rf("1/(1-t)"));
    CHECK(macdonald_tilde_z(Partition{1}, Var::q) == rf("1/(1-q)"));
    CHECK(macdonald_tilde_z(Partition{2}, Var::t) == rf("1/((1-t)*(1-t^2))"));
    CHECK(macdonald_tilde_z(Partition{1, 1}, Var::t) == rf("1/((1-t)*(1-t*q))"));
    for (const auto& nu : enumerate_up_to(6)) {
        INFO(to_string(nu));
        REQUIRE(macdonald_tilde_z(nu, Var::t).substitute_t_eq_q() == hook_product(nu));
        REQUIRE(macdonald_tilde_z(nu, Var::q) == macdonald_tilde_z(nu, Var::t).swap_qt());
    }
}

TEST_CASE("macdonald principal specialization values") {
    CHECK(macdonald_p_at_rho({}) == RF(1));
    CHECK(macdonald_p_at_rho(Partition{1}) == rf("sqrt(t)/(1-t)"));
    const Alphabet rho = Alphabet::rho();
    for (const auto& nu : enumerate_up_to(5)) {
        INFO(to_string(nu));
        REQUIRE(macdonald_p_at_rho(nu).substitute_t_eq_q() == schur(conjugate(nu), rho));
    }
}

TEST_CASE("hook product matches the principal schur specialization") {
    // s_nu(q^{-rho}) = q^{||nu^t||^2/2} / prod (1 - q^hook)
    const Alphabet rho = Alphabet::rho();
    for (const auto& nu : enumerate_up_to(6)) {
        INFO(to_string(nu));
        REQUIRE(schur(nu, rho) == RF(q_half(norm_sq(conjugate(nu)))) * hook_product(nu));
    }
}

TEST_CASE("alphabet letters and validation") {
    const Alphabet a = Alphabet::rho(Partition{2});
    CHECK(a.letter(0) == Monomial{-3, 0});
    CHECK(a.letter(1) == Monomial{3, 0});
    CHECK(a.letter(3) == Monomial{7, 0});
    CHECK_FALSE(a.finite());
    CHECK_THROWS(Alphabet::finite_letters({{1, 0}}).letter(1));
    Alphabet bad = Alphabet::rho();
    bad.tail_ratio = Monomial{2, 2};
    CHECK_THROWS(bad.validate());
}
