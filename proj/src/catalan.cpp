#include "jmc/catalan.hpp"

#include <stdexcept>

#include "jmc/partition.hpp"

namespace jmc {

std::string method_name(CatalanMethod m) {
    switch (m) {
        case CatalanMethod::defsum: return "defsum";
        case CatalanMethod::rec: return "rec";
        case CatalanMethod::alt1: return "alt1";
        case CatalanMethod::alt2: return "alt2";
        case CatalanMethod::hl_spec: return "hl_spec";
    }
    throw std::logic_error("method_name: unknown method");
}

const std::vector<CatalanMethod>& all_catalan_methods() {
    static const std::vector<CatalanMethod> methods{CatalanMethod::defsum, CatalanMethod::rec, CatalanMethod::alt1,
                                                    CatalanMethod::alt2, CatalanMethod::hl_spec};
    return methods;
}

Integer catalan_number(int r) {
    if (r < 0) throw std::invalid_argument("catalan_number: negative index");
    return binomial(2 * r, r) / (r + 1);
}

namespace {

const Poly& z() {
    static const Poly value = Poly::z();
    return value;
}

Poly one_minus_z_pow(int m) { return pow(Poly(1) - z(), static_cast<unsigned>(m)); }

Poly defsum(int r) {
    Poly total;
    for (int m = 0; m <= r; ++m) {
        const Integer c = binomial(r + m, r - m) * binomial(2 * m, m) / (m + 1);
        total += Poly::var(Var::z, static_cast<unsigned>(r - m)) * one_minus_z_pow(m) * Rational(c);
    }
    return total;
}

Poly recursive(int r) {
    std::vector<Poly> c{Poly(1), Poly(1)};
    for (int q = 2; q <= r; ++q) {
        Poly sum;
        for (int i = 1; i <= q - 2; ++i) sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(q - i - 1)];
        c.push_back((Poly(1) - z()) * sum + (Poly(2) - z()) * c[static_cast<std::size_t>(q - 1)]);
    }
    return c[static_cast<std::size_t>(r)];
}

Poly alt1(int r) {
    Poly total;
    for (int m = 0; m <= r; ++m) {
        const Integer c = binomial(r + 1, m) * binomial(2 * r - m, r);
        const int sign = (m % 2 == 1) ? 1 : -1;  // (-1)^{m-1}
        total += geometric_sum(static_cast<unsigned>(m)) * Rational(c * sign);
    }
    return total * Rational(1, r + 1);
}

Poly alt2(int r) {
    Poly total;
    for (int m = 0; m <= r - 1; ++m) {
        const Integer c = binomial(r - 1, m) * binomial(2 * r - m, r);
        total += pow(-z(), static_cast<unsigned>(m)) * Rational(c);
    }
    return total * Rational(1, r + 1);
}

Poly hl_spec(int r) {
    const Poly one_minus_z = Poly(1) - z();
    Poly total;
    for (const auto& mu : partitions_of(r)) {
        Poly numerator(1);
        for (int part : mu.parts()) numerator *= Poly(1) - Poly::var(Var::z, static_cast<unsigned>(part));
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r + 1), static_cast<unsigned long>(mu.length()));
        Rational weight(power, mu.z_order());
        weight.canonicalize();
        total += numerator.divide_exact(one_minus_z) * weight;
    }
    return total * Rational(1, r + 1);
}

}  // namespace

Poly gen_catalan(int r, CatalanMethod method) {
    if (r < 0) throw std::invalid_argument("gen_catalan: negative index");
    if (r == 0) return Poly(1);
    switch (method) {
        case CatalanMethod::defsum: return defsum(r);
        case CatalanMethod::rec: return recursive(r);
        case CatalanMethod::alt1: return alt1(r);
        case CatalanMethod::alt2: return alt2(r);
        case CatalanMethod::hl_spec: return hl_spec(r);
    }
    throw std::logic_error("gen_catalan: unknown method");
}

}  // namespace jmc
