#include "jmc/class_expansion.hpp"

#include <stdexcept>

namespace jmc {

Poly ReducedExpansion::at(const Partition& rho) const {
    auto it = coeffs.find(rho);
    return it == coeffs.end() ? Poly() : it->second;
}

void ReducedExpansion::add(const Partition& rho, const Poly& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(rho, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

ReducedExpansion operator+(const ReducedExpansion& a, const ReducedExpansion& b) {
    ReducedExpansion r = a;
    for (const auto& [rho, c] : b.coeffs) r.add(rho, c);
    return r;
}

ReducedExpansion operator*(const Poly& c, const ReducedExpansion& r) {
    ReducedExpansion out;
    out.spec = r.spec;
    for (const auto& [rho, v] : r.coeffs) out.add(rho, c * v);
    return out;
}

ClassExpansion ClassExpansion::zero(int n, SymFunSpec spec) {
    ClassExpansion e;
    e.n = n;
    e.spec = spec;
    for (auto& mu : partitions_of(n)) e.coeffs.emplace(std::move(mu), Poly());
    return e;
}

const Poly& ClassExpansion::at(const Partition& mu) const {
    auto it = coeffs.find(mu);
    if (it == coeffs.end()) throw std::invalid_argument("ClassExpansion: " + mu.to_string() + " is not a partition of " + std::to_string(n));
    return it->second;
}

}  // namespace jmc
