#pragma once

#include <map>
#include <string>

#include "jmc/partition.hpp"
#include "jmc/poly.hpp"

namespace jmc {

enum class Family { e, p, h, hl, hook, he, pkl, e1e, jack_p };

std::string family_name(Family f);
/// Accepts the names printed by family_name(); throws std::invalid_argument.
Family parse_family(const std::string& name);

/// A symmetric function f whose Jucys–Murphy specialization is computed.
///
/// Index meaning per family: e/p/h/hl/e1e/jack_p use k; hook uses (k, l) as
/// (a, b) for s_{(a,1^b)}; he uses h_k e_l; pkl uses p_{k,l}.
struct SymFunSpec {
    Family family = Family::p;
    int k = 0;
    int l = 0;

    /// Degree of f as a symmetric function.
    int degree() const;
    std::string to_string() const;
    /// Throws std::invalid_argument if the indices are out of range.
    void validate() const;
};

/// f in the power-sum basis. The key ∅ is the constant 1; `card` is the
/// coefficient of p_0, which specializes to the alphabet size.
struct PowerSumExpansion {
    std::map<Partition, Poly> terms;
    Poly card;

    PowerSumExpansion& operator+=(const PowerSumExpansion& other);
    PowerSumExpansion& operator*=(const Poly& c);
    friend bool operator==(const PowerSumExpansion&, const PowerSumExpansion&) = default;
};

/// Product in the power-sum basis; p_0 factors are not supported.
PowerSumExpansion operator*(const PowerSumExpansion& a, const PowerSumExpansion& b);

PowerSumExpansion power_sum_monomial(const Partition& mu, const Poly& coeff = Poly(1));
PowerSumExpansion elementary_psum(int k);
PowerSumExpansion complete_psum(int k);
/// One-row Hall–Littlewood P_k(z) = Σ_μ z_μ^{-1} Π_i (1 - z^{μ_i})/(1 - z) p_μ.
PowerSumExpansion hall_littlewood_psum(int k);
/// s_{(a,1^b)} via the Frobenius formula.
PowerSumExpansion hook_schur_psum(int a, int b);

/// Expansion of any supported spec except jack_p.
PowerSumExpansion to_power_sums(const SymFunSpec& spec);

/// Evaluates f on the content alphabet A_λ (p_0 -> |λ|).
Poly content_eval(const PowerSumExpansion& f, const Partition& lambda);

}  // namespace jmc
