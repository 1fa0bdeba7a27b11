#pragma once

#include <functional>
#include <map>

#include "jmc/partition.hpp"
#include "jmc/poly.hpp"
#include "jmc/symfun.hpp"

namespace jmc {

/// n-independent coefficients c_ρ; only nonzero entries are stored.
struct ReducedExpansion {
    SymFunSpec spec;
    std::map<Partition, Poly, GradedOrder> coeffs;

    /// c_ρ, or zero if absent.
    Poly at(const Partition& rho) const;
    void add(const Partition& rho, const Poly& value);
    friend bool operator==(const ReducedExpansion& a, const ReducedExpansion& b) { return a.coeffs == b.coeffs; }
};

ReducedExpansion operator+(const ReducedExpansion& a, const ReducedExpansion& b);
ReducedExpansion operator*(const Poly& c, const ReducedExpansion& r);

/// a_μ(n) for every μ ⊢ n, keyed in reverse-lex order (zero entries kept).
struct ClassExpansion {
    int n = 0;
    SymFunSpec spec;
    std::map<Partition, Poly, std::greater<>> coeffs;

    /// All-zero expansion over the partitions of n.
    static ClassExpansion zero(int n, SymFunSpec spec = {});
    const Poly& at(const Partition& mu) const;
    friend bool operator==(const ClassExpansion& a, const ClassExpansion& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
};

}  // namespace jmc
