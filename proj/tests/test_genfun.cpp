#include <doctest.h>

#include "jmc/characters.hpp"
#include "jmc/expansion.hpp"
#include "jmc/fixtures.hpp"
#include "jmc/genfun.hpp"

using jmc::Family;
using jmc::Partition;
using jmc::Poly;
using jmc::Rational;
using jmc::TSeries;

namespace {

TSeries at_z1(const TSeries& s) {
    std::vector<Poly> c;
    for (const auto& x : s.coeffs()) c.push_back(x.specialize(jmc::Var::z, 1));
    return TSeries(c);
}

}  // namespace

TEST_CASE("phi series examples") {
    const TSeries sinh = jmc::phi_series(Family::p, {2}, 6).series;
    CHECK(sinh == TSeries(std::vector<Poly>{Poly(), Poly(1), Poly(), Poly(Rational(1, 6)), Poly(), Poly(Rational(1, 120))}));
    const TSeries cosh = jmc::phi_series(Family::p, {1, 1}, 5).series;
    CHECK(cosh == TSeries(std::vector<Poly>{Poly(), Poly(), Poly(Rational(1, 2)), Poly(), Poly(Rational(1, 24))}));
    const Poly a = Poly::alpha();
    const TSeries jack = jmc::phi_series(Family::jack_p, {2}, 4).series;
    CHECK(jack == TSeries(std::vector<Poly>{Poly(), Poly(1), Rational(1, 2) * (a - Poly(1)), Rational(1, 6) * (a * a - a + Poly(1))}));
}

TEST_CASE("phi coefficients are the reduced coefficients") {
    for (Family f : {Family::p, Family::h, Family::hl, Family::jack_p}) {
        for (const Partition& rho : {Partition{2}, Partition{2, 1}, Partition{3, 2}, Partition{2, 2, 1}}) {
            const auto g = jmc::phi_series(f, rho, 9);
            CHECK(g.family == f);
            CHECK(g.rho == rho);
            for (std::size_t k = 0; k < 9; ++k) {
                CHECK(g.series.egf_coeff(k) == jmc::ExpansionEngine::shared().reduced_coeffs(f, static_cast<int>(k)).at(rho));
            }
        }
    }
}

TEST_CASE("closed form at z = 1") {
    CHECK(jmc::phi_closed_form_z1({2}, 10) == jmc::phi_series(Family::p, {2}, 10).series);
    CHECK(jmc::phi_closed_form_z1({1, 1}, 10) == jmc::phi_series(Family::p, {1, 1}, 10).series);
    // t^{|ρ|-l(ρ)} divides; the (1 - e^{-t})^{|ρ|-2} factor raises the order to 7
    CHECK(jmc::phi_closed_form_z1({3, 2, 1}, 10).valuation() >= 3);
    CHECK(jmc::phi_closed_form_z1({3, 2, 1}, 10).valuation() == 7);
    CHECK_THROWS_AS((jmc::phi_closed_form_z1({1}, 10)), std::invalid_argument);
    CHECK_THROWS_AS((jmc::phi_closed_form_z1({}, 10)), std::invalid_argument);
    CHECK(jmc::phi_closed_form_z1({1}, 4, true).coeff(0) == Poly(1));
    CHECK(jmc::phi_closed_form_z1({}, 4, true).is_zero());
    for (int w = 2; w <= 6; ++w) {
        for (const auto& rho : jmc::partitions_of(w)) CHECK(jmc::phi_closed_form_z1(rho, 12) == jmc::phi_series(Family::p, rho, 12).series);
    }
}

TEST_CASE("phi parity and valuation") {
    for (Family f : {Family::p, Family::h, Family::hl}) {
        for (int w = 2; w <= 6; ++w) {
            for (const auto& rho : jmc::partitions_of(w)) {
                const TSeries s = jmc::phi_series(f, rho, 12).series;
                CHECK(s.negate_t() == Poly(rho.sign()) * s);
                CHECK(s.valuation() >= static_cast<std::size_t>(rho.weight() - rho.length()));
            }
        }
    }
}

TEST_CASE("psi at z = 1") {
    // (r, 1^s): |ρ|! ψ_ρ = (e^t - 1)^{r-1} (e^{-t} - 1)^s
    const TSeries hook = jmc::psi_closed_form_z1({2, 1}, 8);
    TSeries expected = (TSeries::exp_linear(Poly(1), 8) - TSeries::exp_linear(Poly(0), 8)) *
                       (TSeries::exp_linear(Poly(-1), 8) - TSeries::exp_linear(Poly(0), 8));
    expected *= Poly(Rational(1, 6));
    CHECK(hook == expected);
    CHECK(jmc::psi_closed_form_z1({2, 2}, 8).is_zero());
    CHECK(at_z1(jmc::psi_series({2, 2}, 8)).is_zero());
    for (int w = 2; w <= 6; ++w) {
        for (const auto& rho : jmc::partitions_of(w)) {
            INFO("rho=" << rho.to_string());
            CHECK(at_z1(jmc::psi_series(rho, 10)) == jmc::psi_closed_form_z1(rho, 10));
            CHECK(jmc::psi_series(rho, 10, Family::p) == jmc::psi_closed_form_z1(rho, 10));
        }
    }
}

TEST_CASE("psi of the conjugate partition") {
    for (int w = 1; w <= 5; ++w) {
        for (const auto& rho : jmc::partitions_of(w)) {
            CHECK(jmc::psi_series(rho.conjugate(), 10) == jmc::psi_series(rho, 10).negate_t());
        }
    }
}

TEST_CASE("phi is recovered from psi by characters") {
    // φ_ρ = Σ_σ χ^σ_ρ ψ_σ
    for (const auto& rho : jmc::partitions_of(4)) {
        TSeries sum(8);
        for (const auto& sigma : jmc::partitions_of(4)) {
            sum += Poly(jmc::mn_character(sigma, rho)) * jmc::psi_series(sigma, 8);
        }
        CHECK(sum == jmc::phi_series(Family::hl, rho, 8).series);
    }
}
