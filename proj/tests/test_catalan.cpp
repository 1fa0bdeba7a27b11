#include <doctest.h>

#include "jmc/catalan.hpp"

using jmc::CatalanMethod;
using jmc::Poly;
using jmc::Var;

namespace {
const Poly z = Poly::z();
}

TEST_CASE("Catalan numbers") {
    const std::vector<long> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (std::size_t r = 0; r < expected.size(); ++r) CHECK(jmc::catalan_number(static_cast<int>(r)) == expected[r]);
}

TEST_CASE("first generalized Catalan polynomials") {
    CHECK(jmc::gen_catalan(0) == Poly(1));
    CHECK(jmc::gen_catalan(1) == Poly(1));
    CHECK(jmc::gen_catalan(2) == Poly(2) - z);
    CHECK(jmc::gen_catalan(3) == z * z - Poly(5) * z + Poly(5));
    CHECK(jmc::gen_catalan(4) == (Poly(2) - z) * (z * z - Poly(7) * z + Poly(7)));
    CHECK(jmc::gen_catalan(4).eval({{Var::z, 0}}) == 14);
    CHECK(jmc::gen_catalan(5).eval({{Var::z, 1}}) == 1);
}

TEST_CASE("all methods agree") {
    for (int r = 0; r <= 12; ++r) {
        const Poly reference = jmc::gen_catalan(r);
        for (CatalanMethod m : jmc::all_catalan_methods()) {
            INFO("r=" << r << " " << jmc::method_name(m));
            CHECK(jmc::gen_catalan(r, m) == reference);
        }
    }
    CHECK(jmc::all_catalan_methods().size() == 5);
}

TEST_CASE("tower invariants") {
    for (int r = 0; r <= 14; ++r) {
        const Poly c = jmc::gen_catalan(r);
        CHECK(c.eval({{Var::z, 0}}) == jmc::Rational(jmc::catalan_number(r)));
        CHECK(c.eval({{Var::z, 1}}) == 1);
        CHECK(c.has_integer_coefficients());
        if (r >= 1) CHECK(c.degree(Var::z) == r - 1);
        if (r >= 2 && r % 2 == 0) CHECK_NOTHROW((void)c.divide_exact(Poly(2) - z));
    }
}

TEST_CASE("quadratic recurrence") {
    std::vector<Poly> c;
    for (int r = 0; r <= 14; ++r) c.push_back(jmc::gen_catalan(r));
    for (int r = 2; r <= 14; ++r) {
        Poly sum;
        for (int i = 1; i <= r - 2; ++i) sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(r - i - 1)];
        CHECK(c[static_cast<std::size_t>(r)] == (Poly(1) - z) * sum + (Poly(2) - z) * c[static_cast<std::size_t>(r - 1)]);
    }
}

TEST_CASE("method names") {
    CHECK(jmc::method_name(CatalanMethod::hl_spec) == "hl_spec");
    CHECK(jmc::method_name(CatalanMethod::defsum) == "defsum");
    CHECK_THROWS(jmc::gen_catalan(-1));
}
