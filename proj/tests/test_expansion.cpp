#include <doctest.h>

#include "jmc/catalan.hpp"
#include "jmc/expansion.hpp"
#include "jmc/oracle.hpp"

using jmc::ClassExpansion;
using jmc::ExpansionEngine;
using jmc::Family;
using jmc::Partition;
using jmc::Poly;
using jmc::ReducedExpansion;

namespace {

const Poly z = Poly::z();
const Poly a = Poly::alpha();
const Poly one(1);

ExpansionEngine& engine() { return ExpansionEngine::shared(); }

void check_support(const ReducedExpansion& r, const std::map<Partition, Poly>& expected) {
    for (const auto& [rho, c] : expected) {
        INFO("rho=" << rho.to_string());
        CHECK(r.at(rho) == c);
    }
    for (const auto& [rho, c] : r.coeffs) {
        INFO("rho=" << rho.to_string());
        CHECK((c.is_zero() || expected.contains(rho)));
    }
}

}  // namespace

TEST_CASE("reduced coefficients at low degree") {
    check_support(engine().reduced_coeffs(Family::p, 2), {{{3}, one}, {{1, 1}, one}});
    check_support(engine().reduced_coeffs(Family::hl, 2), {{{3}, Poly(2) - z}, {{2, 2}, one - z}, {{1, 1}, one}});
    check_support(engine().reduced_coeffs(Family::hl, 3), {
                                                              {{4}, z * z - Poly(5) * z + Poly(5)},
                                                              {{3, 2}, (one - z) * (Poly(2) - z)},
                                                              {{2, 2, 2}, (one - z) * (one - z)},
                                                              {{2, 1, 1}, one - z},
                                                              {{2, 1}, Poly(2) * (Poly(2) - z)},
                                                              {{2}, one},
                                                          });
    check_support(engine().reduced_coeffs(Family::jack_p, 2), {{{3}, one}, {{2}, a - one}, {{1, 1}, a}});
    check_support(engine().reduced_coeffs(Family::jack_p, 3), {
                                                                  {{4}, one},
                                                                  {{3}, Poly(3) * a - Poly(3)},
                                                                  {{2, 1}, Poly(2) * a},
                                                                  {{2}, a * a - a + one},
                                                                  {{1, 1}, a * a - a},
                                                              });
    check_support(engine().reduced_coeffs(Family::hl, 1), {{{2}, one}});
    check_support(engine().reduced_coeffs(Family::hl, 0), {{{}, one}});
    check_support(engine().reduced_coeffs(Family::p, 0), {{{1}, one}});
}

TEST_CASE("assembly") {
    const ClassExpansion p2 = jmc::assemble(engine().reduced_coeffs(Family::p, 2), 4);
    CHECK(p2.at({3, 1}) == one);
    CHECK(p2.at({1, 1, 1, 1}) == Poly(6));
    const ClassExpansion h3 = jmc::assemble(engine().reduced_coeffs(Family::h, 3), 3);
    CHECK(h3.at({2, 1}) == Poly(5));
    const ClassExpansion empty = jmc::assemble(ReducedExpansion{}, 4);
    CHECK(empty.coeffs.size() == 5);
    for (const auto& [mu, c] : empty.coeffs) CHECK(c.is_zero());
}

TEST_CASE("engine matches the group-algebra oracle") {
    for (Family f : {Family::p, Family::h, Family::hl}) {
        for (int k = 1; k <= 4; ++k) {
            for (int n = 1; n <= 6; ++n) {
                INFO(jmc::family_name(f) << " k=" << k << " n=" << n);
                CHECK(engine().expand({f, k, 0}, n) == jmc::oracle_expansion({f, k, 0}, n));
            }
        }
    }
    for (const jmc::SymFunSpec& spec : {jmc::SymFunSpec{Family::hook, 2, 1}, jmc::SymFunSpec{Family::he, 2, 1},
                                        jmc::SymFunSpec{Family::pkl, 3, 2}, jmc::SymFunSpec{Family::e1e, 2, 0}}) {
        for (int n = 1; n <= 6; ++n) {
            INFO(spec.to_string() << " n=" << n);
            CHECK(engine().expand(spec, n) == jmc::oracle_expansion(spec, n));
        }
    }
}

TEST_CASE("capped tables are exact") {
    ExpansionEngine local;
    const ReducedExpansion capped = local.reduced_coeffs(Family::hl, 5, 4);
    const ReducedExpansion full = engine().reduced_coeffs(Family::hl, 5);
    for (const auto& [rho, c] : full.coeffs) {
        if (rho.weight() <= 4) CHECK(capped.at(rho) == c);
    }
    for (const auto& [rho, c] : capped.coeffs) CHECK(rho.weight() <= 4);
    local.clear();
    CHECK(local.reduced_coeffs(Family::hl, 5) == full);
}

TEST_CASE("Jucys closed form") {
    const ClassExpansion e24 = jmc::elementary_expansion(2, 4);
    for (const auto& [mu, c] : e24.coeffs) CHECK(c == ((mu == Partition{3, 1} || mu == Partition{2, 2}) ? one : Poly()));
    const ClassExpansion e0 = jmc::elementary_expansion(0, 5);
    for (const auto& [mu, c] : e0.coeffs) CHECK(c == (mu == Partition{1, 1, 1, 1, 1} ? one : Poly()));
    const ClassExpansion e35 = jmc::elementary_expansion(3, 5);
    for (const auto& [mu, c] : e35.coeffs) CHECK(c == ((mu == Partition{4, 1} || mu == Partition{3, 2}) ? one : Poly()));
    for (int n = 1; n <= 7; ++n) {
        for (int k = 0; k < n; ++k) CHECK(jmc::assemble(engine().elementary_reduced(k), n) == jmc::elementary_expansion(k, n));
    }
}

TEST_CASE("e_1 e_k closed form") {
    const ClassExpansion e = jmc::e1ek_expansion(2, 5);
    CHECK(e.at({4, 1}) == Poly(6));
    CHECK(e.at({3, 2}) == Poly(4));
    CHECK(e.at({2, 1, 1, 1}) == Poly(9));
    for (int n = 2; n <= 7; ++n) {
        for (int k = 1; k < n; ++k) {
            const ClassExpansion f = jmc::e1ek_expansion(k, n);
            for (const auto& [mu, c] : f.coeffs) {
                if (mu.length() != n - k - 1 && mu.length() != n - k + 1) CHECK(c.is_zero());
            }
            CHECK(f == engine().expand({Family::e1e, k, 0}, n));
        }
    }
}

TEST_CASE("hook expansions") {
    for (int k = 1; k <= 5; ++k) {
        ReducedExpansion h = engine().reduced_coeffs(Family::h, k);
        CHECK(engine().hook_expansion(k, 0).coeffs == h.coeffs);
        for (int n = 1; n <= 7; ++n) CHECK(jmc::assemble(engine().hook_expansion(1, k - 1), n) == jmc::elementary_expansion(k, n));
    }
    check_support(engine().hook_expansion(2, 1), {{{4}, Poly(5)}, {{3, 2}, Poly(3)}, {{2, 2, 2}, Poly(2)}, {{2, 1, 1}, one}, {{2, 1}, Poly(2)}});
}

TEST_CASE("h_k e_l and p_{k,l}") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(engine().pkl_expansion(k, 1).coeffs == engine().reduced_coeffs(Family::p, k).coeffs);
        CHECK(engine().pkl_expansion(k, k).coeffs == engine().hook_expansion(1, k - 1).coeffs);
        ReducedExpansion sum;
        for (int l = 1; l <= k; ++l) sum = sum + engine().pkl_expansion(k, l);
        CHECK(sum.coeffs == engine().reduced_coeffs(Family::h, k).coeffs);
    }
    CHECK(engine().he_expansion(0, 3).coeffs == engine().elementary_reduced(3).coeffs);
    CHECK(engine().reduced({Family::e1e, 3, 0}).coeffs == engine().he_expansion(1, 3).coeffs);
}

TEST_CASE("moment expansion") {
    const ReducedExpansion s2 = engine().moment_expansion(2);
    CHECK(s2.at({1}) == one);
    CHECK(s2.at({}).is_zero());
    CHECK(s2.at({2}).is_zero());
    CHECK(engine().moment_expansion(0).at({}) == one);
    CHECK(engine().moment_expansion(3).at({2}) == engine().reduced_coeffs(Family::p, 3).at({2, 1}));
}

TEST_CASE("leading coefficients") {
    CHECK(jmc::leading_coefficient({5}, Family::h) == Poly(14));
    CHECK(jmc::leading_coefficient({3, 2}, Family::hl) == (one - z) * (Poly(2) - z));
    CHECK(jmc::leading_coefficient({5}, Family::hl) == (Poly(2) - z) * (z * z - Poly(7) * z + Poly(7)));
    CHECK_THROWS_AS(((void)jmc::leading_coefficient({3, 1}, Family::h)), std::invalid_argument);
    CHECK_THROWS_AS(((void)jmc::leading_coefficient({3}, Family::p)), std::invalid_argument);
}

TEST_CASE("support, parity and degree bounds") {
    for (int k = 1; k <= 9; ++k) {
        for (Family f : {Family::p, Family::h, Family::hl, Family::jack_p}) {
            for (const auto& [rho, c] : engine().reduced_coeffs(f, k).coeffs) {
                INFO(jmc::family_name(f) << " k=" << k << " rho=" << rho.to_string());
                const int d = rho.weight() - rho.length();
                CHECK(d <= k);
                if (f != Family::jack_p) CHECK((k - d) % 2 == 0);
                if (d == k) CHECK(rho.multiplicity(1) == 0);
                if (f == Family::p || f == Family::jack_p) CHECK(rho.weight() + rho.length() <= k + 2);
                if (f == Family::hl) CHECK(c.degree(jmc::Var::z) <= k - 1);
                CHECK(c.has_integer_coefficients());
            }
        }
    }
}

TEST_CASE("Hall-Littlewood slices") {
    for (int k = 1; k <= 7; ++k) {
        const ReducedExpansion hl = engine().reduced_coeffs(Family::hl, k);
        const ReducedExpansion h = engine().reduced_coeffs(Family::h, k);
        const ReducedExpansion p = engine().reduced_coeffs(Family::p, k);
        const ReducedExpansion j = engine().reduced_coeffs(Family::jack_p, k);
        for (const auto& [rho, c] : hl.coeffs) {
            CHECK(c.specialize(jmc::Var::z, 0) == h.at(rho));
            CHECK(c.specialize(jmc::Var::z, 1) == p.at(rho));
        }
        for (const auto& [rho, c] : j.coeffs) CHECK(c.specialize(jmc::Var::alpha, 1) == p.at(rho));
    }
}

TEST_CASE("content identity") {
    CHECK(jmc::content_identity_check({Family::p, 2, 0}, {2, 1}));
    CHECK(jmc::content_identity_check({Family::h, 0, 0}, {3, 2}));
    CHECK(jmc::content_identity_check({Family::hl, 3, 0}, {3, 1}));
    CHECK_THROWS_AS(((void)jmc::content_identity_check({Family::p, 2, 0}, {})), std::invalid_argument);
}

TEST_CASE("elementary reduced coefficients are hooks") {
    CHECK(engine().elementary_reduced(0).coeffs.size() == 1);
    CHECK(engine().elementary_reduced(0).at({}) == one);
}
