#include "jmc/genfun.hpp"

#include <stdexcept>

#include "jmc/characters.hpp"
#include "jmc/expansion.hpp"

namespace jmc {

namespace {

TSeries exp_int(long c, std::size_t order) { return TSeries::exp_linear(Poly(c), order); }

TSeries one(std::size_t order) { return TSeries::monomial(0, order); }

Rational inverse_factorial(int n) { return Rational(1) / Rational(factorial(n)); }

}  // namespace

GenFunSeries phi_series(Family family, const Partition& rho, std::size_t order) {
    if (order < 1) throw std::invalid_argument("phi_series: order must be at least 1");
    ExpansionEngine& engine = ExpansionEngine::shared();
    std::vector<Poly> values;
    values.reserve(order);
    const int cap = std::max(rho.weight(), 1);
    for (std::size_t k = 0; k < order; ++k) {
        values.push_back(engine.reduced_coeffs(family, static_cast<int>(k), cap).at(rho));
    }
    return {family, rho, TSeries::from_egf(values)};
}

TSeries phi_closed_form_z1(const Partition& rho, std::size_t order, bool small_weight_convention) {
    const int w = rho.weight();
    if (w <= 1) {
        if (!small_weight_convention) throw std::invalid_argument("phi_closed_form_z1: |rho| must be at least 2");
        return w == 1 ? one(order) : TSeries(order);
    }
    TSeries s = exp_int(-1, order) * pow(one(order) - exp_int(-1, order), static_cast<unsigned>(w - 2));
    for (int part : rho.parts()) s = s * (exp_int(part, order) - one(order));
    return s * Poly(inverse_factorial(w));
}

TSeries psi_series(const Partition& sigma, std::size_t order, Family family) {
    const int w = sigma.weight();
    TSeries total(order);
    for (const auto& rho : partitions_of(w)) {
        const Integer chi = mn_character(sigma, rho);
        if (chi == 0) continue;
        Rational weight(chi, rho.z_order());
        weight.canonicalize();
        total += phi_series(family, rho, order).series * Poly(weight);
    }
    return total;
}

TSeries psi_closed_form_z1(const Partition& sigma, std::size_t order) {
    const int w = sigma.weight();
    const int r = sigma.largest_part();
    const int s = sigma.length() - 1;
    const bool hook = w > 0 && r + s == w;
    if (!hook) return TSeries(order);
    TSeries out = pow(exp_int(1, order) - one(order), static_cast<unsigned>(r - 1)) *
                  pow(exp_int(-1, order) - one(order), static_cast<unsigned>(s));
    return out * Poly(inverse_factorial(w));
}

}  // namespace jmc
