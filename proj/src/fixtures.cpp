#include "jmc/fixtures.hpp"

#include <stdexcept>

namespace jmc {

namespace {

Rational q(const char* text) {
    Rational r(text);
    r.canonicalize();
    return r;
}

const Poly& z() {
    static const Poly value = Poly::z();
    return value;
}

// z^2 + c (z - 1)
Poly quad(const Rational& c) { return z() * z() + (z() - Poly(1)) * c; }

Rational choose(const Rational& m, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= (m - i) / Rational(i + 1);
    return r;
}

std::vector<FixtureRow> rows(int r, std::initializer_list<std::tuple<std::vector<int>, const char*, const char*, const char*>> data) {
    std::vector<FixtureRow> out;
    for (const auto& [I, a, b, c] : data) {
        std::vector<int> padded = I;
        padded.resize(static_cast<std::size_t>(r + 1), 0);
        out.push_back({std::move(padded), q(a), q(b), q(c)});
    }
    return out;
}

// (e^{kt} - 1) + ε (e^{-kt} - 1)
TSeries e_pair(int k, int eps, std::size_t order) {
    const TSeries one = TSeries::monomial(0, order);
    return (TSeries::exp_linear(Poly(k), order) - one) + (TSeries::exp_linear(Poly(-k), order) - one) * Poly(eps);
}

// t (e^{kt} - ε e^{-kt})
TSeries t_pair(int k, int eps, std::size_t order) {
    return (TSeries::exp_linear(Poly(k), order) - TSeries::exp_linear(Poly(-k), order) * Poly(eps)).shift(1);
}

// Σ_I M_I(w, m) (z^4 + a_I z^2 (z-1) + b_I (z-1)^2)
Poly quartic_sum(const std::vector<FixtureRow>& table, int w, const Partition& rho) {
    const Poly zm1 = z() - Poly(1);
    Poly total;
    for (const auto& row : table) {
        const Poly shape = pow(z(), 4) + z() * z() * zm1 * row.a + zm1 * zm1 * row.b;
        total += shape * Rational(m_weight(row.I, w, rho));
    }
    return total;
}

Rational c_sum(const std::vector<FixtureRow>& table, int w, const Partition& rho) {
    Rational total = 0;
    for (const auto& row : table) total += row.c * Rational(m_weight(row.I, w, rho));
    return total;
}

}  // namespace

Poly r_poly(int k) {
    if (k < 1) throw std::invalid_argument("r_poly: k must be positive");
    Poly r(1);
    for (int j = 1; j < k; ++j) r *= Poly(k) - z() * Rational(j);
    return r * (Rational(1) / Rational(factorial(k - 1)));
}

Integer m_weight(const std::vector<int>& I, int w, const Partition& rho) {
    if (I.empty()) throw std::invalid_argument("m_weight: empty index");
    Integer value = binomial(w - 2, I[0]);
    int total = I[0];
    for (std::size_t u = 1; u < I.size(); ++u) {
        if (I[u] == 0) continue;
        value *= binomial(rho.multiplicity(static_cast<int>(u)), I[u]);
        total += I[u];
    }
    return total % 2 == 0 ? value : Integer(-value);
}

std::vector<std::vector<int>> index_family(int r) {
    std::vector<std::vector<int>> out;
    for (int i0 = r; i0 >= 0; --i0) {
        for (const auto& lambda : partitions_of(r - i0)) {
            std::vector<int> I(static_cast<std::size_t>(r + 1), 0);
            I[0] = i0;
            for (int part : lambda.parts()) ++I[static_cast<std::size_t>(part)];
            out.push_back(std::move(I));
        }
    }
    return out;
}

// The published tables print two index pairs against a single row of values:
// (4,0,..) with (3,1,..) and (0,2,1,..) with (0,0,0,0,1), and at weight 7
// (5,0,..) with (4,1,..). Both members of a pair carry that row.
const std::vector<FixtureRow>& weight6_table() {
    static const std::vector<FixtureRow> table = rows(4, {
        {{4, 0, 0, 0, 0}, "-7/2", "7/4", "0"},
        {{3, 1, 0, 0, 0}, "-7/2", "7/4", "0"},
        {{0, 4, 0, 0, 0}, "-245/12", "2035/24", "5/4"},
        {{1, 3, 0, 0, 0}, "-91/16", "591/32", "-5/8"},
        {{2, 2, 0, 0, 0}, "-47/6", "37/12", "5/24"},
        {{2, 0, 1, 0, 0}, "0", "0", "-5/24"},
        {{0, 2, 1, 0, 0}, "-33/4", "-77/8", "-5/4"},
        {{0, 0, 0, 0, 1}, "-33/4", "-77/8", "-5/4"},
        {{1, 1, 1, 0, 0}, "-263/48", "-197/96", "5/8"},
        {{0, 0, 2, 0, 0}, "115/12", "235/24", "5/4"},
        {{0, 1, 0, 1, 0}, "-5/12", "115/24", "5/4"},
        {{1, 0, 0, 1, 0}, "-11/16", "-49/32", "-5/8"},
    });
    return table;
}

const std::vector<FixtureRow>& weight7_table_i4() {
    static const std::vector<FixtureRow> table = rows(4, {
        {{4, 0, 0, 0, 0}, "-47/10", "22/5", "0"},
        {{3, 1, 0, 0, 0}, "-47/10", "22/5", "0"},
        {{0, 4, 0, 0, 0}, "-47/3", "212/3", "0"},
        {{1, 3, 0, 0, 0}, "-172/15", "304/15", "0"},
        {{2, 2, 0, 0, 0}, "-88/15", "136/15", "0"},
        {{2, 0, 1, 0, 0}, "-71/30", "-74/15", "0"},
        {{0, 2, 1, 0, 0}, "-26/3", "-40/3", "0"},
        {{0, 0, 0, 0, 1}, "-26/3", "-40/3", "0"},
        {{1, 1, 1, 0, 0}, "-4/15", "-32/15", "0"},
        {{0, 0, 2, 0, 0}, "37/3", "44/3", "0"},
        {{0, 1, 0, 1, 0}, "11/6", "2/3", "0"},
        {{1, 0, 0, 1, 0}, "-67/15", "-116/15", "0"},
    });
    return table;
}

const std::vector<FixtureRow>& weight7_table_i5() {
    static const std::vector<FixtureRow> table = rows(5, {
        {{5, 0, 0, 0, 0, 0}, "-19/10", "11/20", "0"},
        {{4, 1, 0, 0, 0, 0}, "-19/10", "11/20", "0"},
        {{0, 5, 0, 0, 0, 0}, "4371/10", "6271/20", "77/4"},
        {{1, 4, 0, 0, 0, 0}, "-4167/50", "3573/100", "-119/20"},
        {{3, 2, 0, 0, 0, 0}, "0", "0", "7/40"},
        {{2, 3, 0, 0, 0, 0}, "0", "0", "7/8"},
        {{3, 0, 1, 0, 0, 0}, "-9/2", "3/4", "-7/40"},
        {{0, 3, 1, 0, 0, 0}, "-1281/20", "-3521/40", "-49/4"},
        {{2, 1, 1, 0, 0, 0}, "0", "0", "-7/40"},
        {{1, 2, 1, 0, 0, 0}, "0", "0", "63/20"},
        {{1, 0, 2, 0, 0, 0}, "0", "0", "-7/20"},
        {{0, 1, 2, 0, 0, 0}, "-163/10", "717/20", "21/4"},
        {{0, 0, 1, 1, 0, 0}, "-257/40", "-1137/80", "-7/4"},
        {{2, 0, 0, 1, 0, 0}, "-163/20", "17/40", "-7/40"},
        {{0, 2, 0, 1, 0, 0}, "-3623/40", "5417/80", "35/4"},
        {{1, 1, 0, 1, 0, 0}, "1249/100", "-1331/200", "-7/4"},
        {{1, 0, 0, 0, 1, 0}, "-1363/100", "697/200", "7/20"},
        {{0, 1, 0, 0, 1, 0}, "1849/20", "-2091/40", "-21/4"},
        {{0, 0, 0, 0, 0, 1}, "-593/20", "907/40", "7/4"},
    });
    return table;
}

TSeries explicit_phi_fixture(const Partition& rho, std::size_t order) {
    const int w = rho.weight();
    if (w < 2 || w > 7) throw std::invalid_argument("explicit_phi_fixture: need 2 <= |rho| <= 7");
    const int eps = rho.sign();
    const Rational m1 = rho.multiplicity(1);
    const Rational m2 = rho.multiplicity(2);
    const Rational m3 = rho.multiplicity(3);
    const Poly two_minus_z = Poly(2) - z();
    auto E = [&](int k) { return e_pair(k, eps, order); };

    TSeries s(order);
    switch (w) {
        case 2:
            s = E(1);
            break;
        case 3:
            s = (E(2) - E(1) * Poly(m1 + 1)) * r_poly(2);
            break;
        case 4:
            s = E(3) * r_poly(3) - E(2) * (r_poly(2) * two_minus_z * Poly(m1 + 2)) +
                E(1) * (quad(q("-5/2")) * Rational(2 * m1 + 1) + quad(q("-11/2")) * choose(m1, 2) -
                        quad(q("1/2")) * m2);
            break;
        case 5:
            s = E(4) * r_poly(4) - E(3) * (r_poly(3) * two_minus_z * Poly(m1 + 3)) +
                E(2) * (r_poly(2) * (quad(q("-28/9")) * Rational(3 * m1 + 3) + quad(q("-16/3")) * choose(m1, 2) -
                                     quad(q("4/3")) * m2)) -
                E(1) * (two_minus_z * (quad(q("-7/6")) * Rational(3 * m1 + 1) + quad(q("-17/6")) * Rational(3 * choose(m1, 2)) +
                                       quad(q("-19/2")) * choose(m1, 3) -
                                       quad(q("1/2")) * Rational(m1 * m2 + 3 * m2 - m3)));
            break;
        case 6:
            s = E(5) * r_poly(5) - E(4) * (r_poly(4) * two_minus_z * Poly(m1 + 4)) +
                E(3) * (r_poly(3) * (quad(q("-27/8")) * Rational(4 * m1 + 6) + quad(q("-21/4")) * choose(m1, 2) -
                                     quad(q("9/4")) * m2)) -
                E(2) * (r_poly(2) * two_minus_z *
                        (quad(-2) * Rational(6 * m1 + 4) + quad(q("-11/3")) * Rational(4 * choose(m1, 2)) +
                         quad(q("-26/3")) * choose(m1, 3) - quad(q("4/3")) * Rational(m1 * m2 + 4 * m2 - m3))) +
                E(1) * quartic_sum(weight6_table(), w, rho) +
                t_pair(1, eps, order) * ((z() * z() - Poly(1)) * (z() * Rational(2) - Poly(1)) * c_sum(weight6_table(), w, rho));
            break;
        case 7:
            s = E(6) * r_poly(6) - E(5) * (r_poly(5) * two_minus_z * Poly(m1 + 5)) +
                E(4) * (r_poly(4) * (quad(q("-88/25")) * Rational(5 * (m1 + 2)) + quad(q("-26/5")) * choose(m1, 2) -
                                     quad(q("16/5")) * m2)) -
                E(3) * (r_poly(3) * two_minus_z *
                        (quad(q("-99/40")) * Rational(10 * (m1 + 1)) + quad(q("-81/20")) * Rational(5 * choose(m1, 2)) +
                         quad(q("-33/4")) * choose(m1, 3) - quad(q("9/4")) * Rational(m1 * m2 + 5 * m2 - m3))) +
                E(2) * (r_poly(2) * quartic_sum(weight7_table_i4(), w, rho)) +
                E(1) * (two_minus_z * quartic_sum(weight7_table_i5(), w, rho)) +
                t_pair(1, eps, order) * (two_minus_z * (z() * z() - Poly(1)) * (z() * Rational(2) - Poly(1)) *
                                         c_sum(weight7_table_i5(), w, rho));
            break;
        default: break;
    }
    return s * Poly(Rational(1) / Rational(factorial(w)));
}

namespace {

struct Fraction {
    TSeries num;
    Poly den;
};

TSeries exp_alpha(long a_coeff, long constant, std::size_t order) {
    return TSeries::exp_linear(Poly::alpha() * Rational(a_coeff) + Poly(constant), order);
}

TSeries combine(const std::vector<Fraction>& parts, std::size_t order) {
    Poly common(1);
    for (const auto& f : parts) {
        bool seen = false;
        for (const auto& g : parts) {
            if (&g == &f) break;
            if (g.den == f.den) seen = true;
        }
        if (!seen) common *= f.den;
    }
    TSeries num(order);
    for (const auto& f : parts) num += f.num * common.divide_exact(f.den);
    TSeries out(order);
    for (std::size_t j = 0; j < order; ++j) out.set_coeff(j, num.coeff(j).divide_exact(common));
    return out;
}

}  // namespace

std::vector<Partition> jack_phi_fixture_shapes() { return {Partition{2}, Partition{1, 1}, Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}; }

TSeries jack_phi_fixture(const Partition& rho, std::size_t order) {
    const Poly a = Poly::alpha();
    const Poly d1 = a + Poly(1);
    const Poly d2 = (a + Poly(1)) * (a * Rational(2) + Poly(1));
    const Poly d3 = (a + Poly(1)) * (a + Poly(2));
    const TSeries one = TSeries::monomial(0, order);
    auto e = [order](long ac, long c) { return exp_alpha(ac, c, order); };

    if (rho == Partition{2}) return combine({{e(1, 0) - e(0, -1), d1}}, order);
    if (rho == Partition{1, 1}) return combine({{e(1, 0) + e(0, -1) * a, d1}, {-one, Poly(1)}}, order);
    if (rho == Partition{3}) return combine({{e(2, 0) - e(0, -1), d2}, {-(e(1, 0) - e(0, -2)), d3}}, order);
    if (rho == Partition{2, 1}) {
        return combine({{e(2, 0) + e(0, -1) * (a * Rational(2)), d2}, {-(e(1, 0) * Poly(2) + e(0, -2) * a), d3}}, order);
    }
    if (rho == Partition{1, 1, 1}) {
        return combine({{e(2, 0) - e(0, -1) * (a * a * Rational(4)), d2},
                        {-(e(1, 0) * Poly(4) - e(0, -2) * (a * a)), d3},
                        {one, Poly(1)}},
                       order);
    }
    throw std::invalid_argument("jack_phi_fixture: no published display for " + rho.to_string());
}

const std::vector<JackHlCell>& jack_hl_table() {
    static const std::vector<JackHlCell> table = [] {
        const Poly Z = Poly::z();
        const Poly a = Poly::alpha();
        const Poly b = Poly::beta();
        const Poly one(1);
        const Poly u = one - Z;        // 1 - z
        const Poly v = Poly(2) - Z;    // 2 - z
        const Poly c3 = Z * Z - Z * Rational(5) + Poly(5);  // z^2 - 5z + 5
        const Poly c4 = v * (Z * Z - Z * Rational(7) + Poly(7));
        auto P = [](std::initializer_list<int> parts) { return Partition(parts); };
        return std::vector<JackHlCell>{
            {1, P({2}), one},

            {2, P({3}), v},
            {2, P({2, 2}), u},
            {2, P({2}), b},
            {2, P({1, 1}), a},

            {3, P({4}), c3},
            {3, P({3, 2}), u * v},
            {3, P({2, 2, 2}), u * u},
            {3, P({2, 2}), b * u * Rational(2)},
            {3, P({3}), b * v * Rational(3)},
            {3, P({2, 1, 1}), a * u},
            {3, P({2, 1}), a * v * Rational(2)},
            {3, P({2}), a + b * b},
            {3, P({1, 1}), a * b},

            {4, P({5}), c4},
            {4, P({4, 2}), u * c3},
            {4, P({3, 3}), u * v * v},
            {4, P({3, 2, 2}), u * u * v},
            {4, P({2, 2, 2, 2}), u * u * u},
            {4, P({4}), b * (Z * Z * Rational(6) - Z * Rational(29) + Poly(29))},
            {4, P({3, 2}), b * u * v * Rational(4)},
            {4, P({2, 2, 2}), b * u * u * Rational(3)},
            {4, P({3, 1, 1}), a * u * v},
            {4, P({3, 1}), a * c3 * Rational(3)},
            {4, P({3}), (a * Rational(5) + b * b * Rational(7)) * v},
            {4, P({2, 2, 1, 1}), a * u * u},
            {4, P({2, 2, 1}), a * u * v * Rational(4)},
            {4, P({2, 2}), a * c3 * Rational(4) + b * b * u * Rational(3)},
            {4, P({2, 1, 1}), a * b * u * Rational(2)},
            {4, P({2, 1}), a * b * v * Rational(6)},
            {4, P({2}), a * b * Rational(2) + b * b * b},
            {4, P({1, 1, 1, 1}), a * a * u * Rational(3)},
            {4, P({1, 1, 1}), a * a * v * Rational(4)},
            {4, P({1, 1}), a * a + a * b * b},
        };
    }();
    return table;
}

}  // namespace jmc
