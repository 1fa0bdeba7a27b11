#include <doctest.h>

#include "independent.hpp"
#include "jmc/characters.hpp"
#include "jmc/transition.hpp"

using jmc::Partition;
using jmc::Rational;

TEST_CASE("character examples") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& mu : jmc::partitions_of(n)) CHECK(jmc::mn_character(Partition{n}, mu) == 1);
    }
    CHECK(jmc::mn_character({2, 1}, {3}) == -1);
    CHECK(jmc::mn_character({2, 1}, {2, 1}) == 0);
    CHECK(jmc::mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(jmc::mn_character({}, {}) == 1);
    CHECK_THROWS_AS(((void)jmc::mn_character({2, 1}, {2})), std::invalid_argument);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius alternant formula") {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = jmc::partitions_of(n);
        for (const auto& lambda : parts) {
            for (const auto& mu : parts) {
                INFO("lambda=" << lambda.to_string() << " mu=" << mu.to_string());
                CHECK(jmc::mn_character(lambda, mu) == ref::frobenius_character(lambda, mu));
            }
        }
    }
}

TEST_CASE("sign twist by conjugation") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& lambda : jmc::partitions_of(n)) {
            for (const auto& mu : jmc::partitions_of(n)) {
                CHECK(jmc::mn_character(lambda.conjugate(), mu) == mu.sign() * jmc::mn_character(lambda, mu));
            }
        }
    }
}

TEST_CASE("dimensions") {
    CHECK(jmc::dimension({2, 1}) == 2);
    CHECK(jmc::dimension({1, 1, 1, 1}) == 1);
    CHECK(jmc::dimension({3, 2}) == 5);
    for (const auto& lambda : jmc::partitions_of(7)) CHECK(jmc::dimension(lambda) == jmc::mn_character(lambda, Partition{1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("character table orthogonality") {
    for (int n = 1; n <= 8; ++n) {
        const auto& t = jmc::char_table(n);
        const auto& p = t.partitions();
        CHECK(&t == &jmc::char_table(n));
        for (std::size_t a = 0; a < p.size(); ++a) {
            CHECK(t.index(p[a]) == a);
            for (std::size_t b = 0; b < p.size(); ++b) {
                jmc::Integer cols = 0;
                for (std::size_t r = 0; r < p.size(); ++r) cols += t.at(r, a) * t.at(r, b);
                CHECK(cols == (a == b ? p[a].z_order() : jmc::Integer(0)));
                CHECK(t.at(p[a], p[b]) == jmc::mn_character(p[a], p[b]));
            }
        }
    }
}

TEST_CASE("central characters") {
    for (const auto& lambda : jmc::partitions_of(5)) CHECK(jmc::central_character(lambda, {1, 1, 1, 1, 1}) == 1);
    CHECK(jmc::central_character({2, 1}, {3}) == -1);
    CHECK(jmc::central_character({2}, {2}) == 1);
    // θ^λ_{(2,1^{n-2})} = p_1(A_λ)
    for (int n = 2; n <= 8; ++n) {
        for (const auto& lambda : jmc::partitions_of(n)) {
            CHECK(jmc::central_character(lambda, Partition{2}.pad(n)) == Rational(jmc::content_power_sum(lambda, 1)));
        }
    }
}

TEST_CASE("content power sums") {
    CHECK(jmc::content_power_sum({2, 1}, 1) == 0);
    CHECK(jmc::content_power_sum({2, 2}, 2) == 2);
    CHECK(jmc::content_power_sum({3, 1}, 0) == 4);
    // e_2 = (p_1^2 - p_2)/2 on {0, 1, -1}
    const jmc::Integer p1 = jmc::content_power_sum({2, 1}, 1);
    const jmc::Integer p2 = jmc::content_power_sum({2, 1}, 2);
    CHECK((p1 * p1 - p2) / 2 == -1);
}

TEST_CASE("transition measure examples") {
    const auto empty = jmc::transition_measure({});
    REQUIRE(empty.atoms.size() == 1);
    CHECK(empty.atoms[0].u == 0);
    CHECK(empty.atoms[0].p == 1);

    const auto one = jmc::transition_measure({1});
    REQUIRE(one.atoms.size() == 2);
    CHECK(one.atoms[0].u == 1);
    CHECK(one.atoms[0].p == Rational(1, 2));
    CHECK(one.atoms[1].u == -1);
    CHECK(one.atoms[1].p == Rational(1, 2));

    const auto m = jmc::transition_measure({2, 1});
    REQUIRE(m.atoms.size() == 3);
    CHECK(m.atoms[0].u == 2);
    CHECK(m.atoms[0].p == Rational(3, 8));
    CHECK(m.atoms[1].u == 0);
    CHECK(m.atoms[1].p == Rational(1, 4));
    CHECK(m.atoms[2].u == -2);
    CHECK(m.atoms[2].p == Rational(3, 8));
}

TEST_CASE("transition measure invariants") {
    for (int n = 0; n <= 9; ++n) {
        for (const auto& lambda : jmc::partitions_of(n)) {
            const auto m = jmc::transition_measure(lambda);
            Rational mass = 0;
            Rational mean = 0;
            for (std::size_t i = 0; i < m.atoms.size(); ++i) {
                CHECK(m.atoms[i].p > 0);
                if (i > 0) CHECK(m.atoms[i].u < m.atoms[i - 1].u);
                mass += m.atoms[i].p;
                mean += m.atoms[i].p * m.atoms[i].u;
            }
            CHECK(mass == 1);
            CHECK(mean == 0);
        }
    }
}

TEST_CASE("low moments") {
    for (const Partition& lambda : {Partition{2, 1}, Partition{3, 2, 1}, Partition{4}}) {
        CHECK(jmc::moment(lambda, 2) == lambda.weight());
    }
    CHECK(jmc::moment({2, 1}, 3) == 0);
    CHECK(jmc::moment({}, 0) == 1);
    CHECK(jmc::moment({}, 1) == 0);
    CHECK(jmc::moment({3}, 3) == 2 * Rational(jmc::content_power_sum({3}, 1)));
}

TEST_CASE("moment series identity") {
    CHECK(jmc::check_moment_series({1}, 3));
    CHECK(jmc::check_moment_series({}, 5));
    CHECK(jmc::check_moment_series({3, 2, 1}, Rational(7, 2)));
    CHECK_THROWS_AS(((void)jmc::check_moment_series({1}, 1)), std::domain_error);
    CHECK_THROWS_AS(((void)jmc::check_moment_series({1}, 0)), std::domain_error);
}

TEST_CASE("content polynomial") {
    CHECK(jmc::content_polynomial({2, 1}, 2) == Rational(2 * 3 * 1));
    CHECK(jmc::content_polynomial({}, 9) == 1);
}

TEST_CASE("linear relations between central characters") {
    CHECK(jmc::central_relation_lhs({1}, {2}, 0) == 0);
    CHECK(jmc::check_central_relation({1}, {2}, 0));
    CHECK(jmc::central_relation_lhs({1}, {1, 1}, 0) == 1);
    CHECK(jmc::check_central_relation({1}, {1, 1}, 0));
    CHECK(jmc::check_central_relation({2, 1}, {2, 2}, 2));
    CHECK_THROWS_AS(((void)jmc::check_central_relation({2, 1}, {2, 1}, 0)), std::invalid_argument);
    CHECK_THROWS_AS(((void)jmc::check_central_relation({2, 1}, {2, 2}, 3)), std::invalid_argument);
    CHECK(jmc::theta_or_zero({2, 1}, std::nullopt) == 0);
    CHECK(jmc::theta_or_zero({2, 1}, Partition{3}) == -1);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : jmc::partitions_of(n)) {
            for (const auto& mu : jmc::partitions_of(n + 1)) {
                for (int r = 0; r <= 2; ++r) CHECK(jmc::check_central_relation(lambda, mu, r));
            }
        }
    }
}
