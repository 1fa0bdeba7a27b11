#include <doctest.h>

#include <random>

#include "jmc/poly.hpp"

using jmc::Poly;
using jmc::Rational;
using jmc::Var;

namespace {

const Poly z = Poly::z();
const Poly a = Poly::alpha();

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Poly p;
    const int terms = deg(rng) + 1;
    for (int i = 0; i < terms; ++i) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        p += Poly::monomial({static_cast<std::uint16_t>(deg(rng)), static_cast<std::uint16_t>(deg(rng))}, c);
    }
    return p;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(jmc::binomial(5, 2) == 10);
    CHECK(jmc::binomial(3, 5) == 0);
    CHECK(jmc::binomial(0, 0) == 1);
    CHECK(jmc::binomial(40, 20) == jmc::Integer("137846528820"));
    CHECK_THROWS_AS(jmc::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic examples") {
    const Poly product = (Poly(2) - z) * (z * z - Poly(7) * z + Poly(7));
    CHECK(product == -pow(z, 3) + Poly(9) * z * z - Poly(21) * z + Poly(14));
    CHECK(product.to_string() == "-z^3 + 9*z^2 - 21*z + 14");
    CHECK((Poly(2) - z).eval({{Var::z, 1}}) == 1);
    CHECK((Poly(1) - z * z).coeff(Var::z, 2) == Poly(-1));
    CHECK(Poly().to_string() == "0");
    CHECK((a * z + Poly(Rational(1, 2))).to_string() == "alpha*z + 1/2");
    CHECK((pow(a, 2) - a + Poly(1)).to_string() == "alpha^2 - alpha + 1");
}

TEST_CASE("structural normal form") {
    CHECK((z - z).is_zero());
    CHECK((z - z).terms().empty());
    CHECK(Poly(0).is_zero());
    CHECK(Poly(3).is_constant());
    CHECK(Poly(3).constant_term() == 3);
    CHECK((z + Poly(4)).constant_term() == 4);
    CHECK(z.degree(Var::z) == 1);
    CHECK(z.degree(Var::alpha) == 0);
    CHECK(Poly().degree(Var::z) == -1);
    CHECK(jmc::geometric_sum(3) == Poly(1) + z + z * z);
    CHECK(jmc::geometric_sum(0).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = random_poly(rng);
        const Poly q = random_poly(rng);
        const Poly r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Poly());
        CHECK(p * Poly(1) == p);
        CHECK((p * Poly(0)).is_zero());
        if (!q.is_zero()) CHECK((p * q).divide_exact(q) == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    const std::map<Var, Rational> at{{Var::z, Rational(3, 7)}, {Var::alpha, Rational(-5, 2)}};
    for (int trial = 0; trial < 100; ++trial) {
        const Poly p = random_poly(rng);
        const Poly q = random_poly(rng);
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
        CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
        CHECK(p.specialize(Var::z, Rational(3, 7)).eval(at) == p.eval(at));
    }
}

TEST_CASE("evaluation requires every occurring indeterminate") {
    CHECK_THROWS_AS(((void)(z * a).eval({{Var::z, 1}})), std::invalid_argument);
    CHECK(Poly(5).eval({}) == 5);
    CHECK(z.eval({{Var::z, 2}, {Var::alpha, 9}}) == 2);
}

TEST_CASE("exact division") {
    const Poly f = (Poly(1) - z) * (Poly(2) - z);
    CHECK(f.divide_exact(Poly(1) - z) == Poly(2) - z);
    CHECK_THROWS_AS((void)f.divide_exact(Poly(3) - z), std::domain_error);
    CHECK_THROWS_AS((void)f.divide_exact(Poly()), std::domain_error);
    CHECK((Poly(6) * a).divide_exact(Poly(3)) == Poly(2) * a);
}

TEST_CASE("beta re-expansion") {
    // alpha^2 - alpha + 1 = beta^2 + beta + 1
    const Poly in_beta = (a * a - a + Poly(1)).in_beta();
    CHECK(in_beta == a * a + a + Poly(1));
    CHECK(Poly::beta() == a - Poly(1));
    CHECK(Poly::beta().in_beta() == a);
    CHECK((Poly(3) * a - Poly(3)).in_beta().has_nonnegative_coefficients());
    CHECK_FALSE((a - Poly(2)).in_beta().has_nonnegative_coefficients());
    CHECK(Poly(Rational(1, 2)).has_integer_coefficients() == false);
}

TEST_CASE("substitution") {
    CHECK((z * z).substitute(Var::z, Poly(1) - z) == Poly(1) - Poly(2) * z + z * z);
    CHECK((a * z).specialize(Var::alpha, 1) == z);
}
