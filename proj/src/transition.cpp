#include "jmc/transition.hpp"

#include <stdexcept>

#include "jmc/characters.hpp"

namespace jmc {

namespace {

int part_or_zero(const Partition& lambda, int i) {
    return i <= lambda.length() ? lambda[static_cast<std::size_t>(i - 1)] : 0;
}

Rational product_formula(const Partition& lambda, int i) {
    const int l = lambda.length();
    const int li = part_or_zero(lambda, i);
    Rational c(1, li + l - i + 2);
    for (int j = 1; j <= l + 1; ++j) {
        if (j == i) continue;
        const int d = li - part_or_zero(lambda, j) + j - i;
        Rational factor(d + 1, d);
        factor.canonicalize();
        c *= factor;
    }
    return c;
}

Rational ipow(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void check_weight(const Partition& lambda, const Partition& mu) {
    if (mu.weight() != lambda.weight() + 1) throw std::invalid_argument("central relation: need |mu| = |lambda| + 1");
}

}  // namespace

TransitionMeasure transition_measure(const Partition& lambda) {
    TransitionMeasure m{lambda, {}};
    const Integer h = lambda.hook_product();
    for (int i = 1; i <= lambda.length() + 1; ++i) {
        const auto grown = lambda.add_corner(i);
        const Rational check = product_formula(lambda, i);
        if (!grown) {
            if (check != 0) throw std::logic_error("transition_measure: product formula nonzero off corner");
            continue;
        }
        Rational p(h, grown->hook_product());
        p.canonicalize();
        if (p != check) throw std::logic_error("transition_measure: hook ratio disagrees with product formula");
        m.atoms.push_back({part_or_zero(lambda, i) - i + 1, p});
    }
    return m;
}

Rational moment(const Partition& lambda, int k) {
    Rational s = 0;
    for (const auto& a : transition_measure(lambda).atoms) s += a.p * ipow(Rational(a.u), k);
    return s;
}

Rational content_polynomial(const Partition& lambda, const Rational& x) {
    Rational r = 1;
    for (int c : lambda.contents()) r *= x + c;
    return r;
}

bool check_moment_series(const Partition& lambda, const Rational& z0) {
    const TransitionMeasure m = transition_measure(lambda);
    Rational lhs = 0;
    for (const auto& a : m.atoms) {
        const Rational d = z0 - a.u;
        if (d == 0) throw std::domain_error("check_moment_series: z0 = " + z0.get_str() + " is the atom position " + std::to_string(a.u));
        lhs += a.p / d;
    }
    if (z0 == 0) throw std::domain_error("check_moment_series: pole at z0 = 0");
    const Rational below = content_polynomial(lambda, -z0 - 1);
    const Rational above = content_polynomial(lambda, -z0 + 1);
    if (below == 0 || above == 0) {
        throw std::domain_error("check_moment_series: content polynomial vanishes next to z0 = " + z0.get_str());
    }
    const Rational c0 = content_polynomial(lambda, -z0);
    const Rational rhs = c0 * c0 / (z0 * below * above);
    return lhs == rhs;
}

Rational theta_or_zero(const Partition& lambda, const std::optional<Partition>& nu) {
    if (!nu || nu->weight() != lambda.weight()) return 0;
    return central_character(lambda, *nu);
}

Rational central_relation_lhs(const Partition& lambda, const Partition& mu, int r) {
    check_weight(lambda, mu);
    Rational s = 0;
    for (int i = 1; i <= lambda.length() + 1; ++i) {
        const auto grown = lambda.add_corner(i);
        if (!grown) continue;
        Rational c(lambda.hook_product(), grown->hook_product());
        c.canonicalize();
        s += c * ipow(Rational(part_or_zero(lambda, i) - i + 1), r) * central_character(*grown, mu);
    }
    return s;
}

Rational central_relation_rhs(const Partition& lambda, const Partition& mu, int r) {
    check_weight(lambda, mu);
    const int n = lambda.weight();
    const int top = mu.largest_part() + 1;
    auto m = [&mu](int part) { return mu.multiplicity(part); };
    Rational s = 0;
    switch (r) {
        case 0:
            return theta_or_zero(lambda, mu.without_part(1));
        case 1:
            for (int q = 1; q < top; ++q) {
                s += Rational(q * (m(q) + 1)) * theta_or_zero(lambda, mu.replace({q + 1}, {q}));
            }
            return s;
        case 2:
            s = Rational(2 * n - m(1) + 1) * theta_or_zero(lambda, mu.without_part(1));
            for (int p = 1; p < top; ++p) {
                for (int q = 1; q < top; ++q) {
                    const int weight = p * q * (m(p) + 1) * (m(q) + (p == q ? 1 : 0) + 1);
                    s += Rational(weight) * theta_or_zero(lambda, mu.replace({p + q + 1}, {p, q}));
                }
            }
            for (int p = 2; p <= top; ++p) {
                for (int q = 2; q <= top; ++q) {
                    const int weight = (p + q - 1) * (m(p + q - 1) + 1);
                    s += Rational(weight) * theta_or_zero(lambda, mu.replace({p, q}, {p + q - 1}));
                }
            }
            return s;
        default:
            throw std::invalid_argument("central relation: r must be 0, 1 or 2");
    }
}

bool check_central_relation(const Partition& lambda, const Partition& mu, int r) {
    if (r < 0 || r > 2) throw std::invalid_argument("central relation: r must be 0, 1 or 2");
    return central_relation_lhs(lambda, mu, r) == central_relation_rhs(lambda, mu, r);
}

}  // namespace jmc
