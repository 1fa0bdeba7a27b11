#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "jmc/class_expansion.hpp"
#include "jmc/symfun.hpp"

namespace jmc {

/// Reduced coefficients c_ρ^{(k)} for the recurrence families p, h, hl and
/// jack_p, and everything derived from them.
///
/// Level tables are built on demand and cached per family. A weight cap W
/// restricts a table to |ρ| ≤ W; since no relation ever reads an entry of
/// larger weight, capped entries are exact.
class ExpansionEngine {
public:
    static constexpr int kNoCap = -1;

    /// Process-wide instance; all methods are thread-safe.
    static ExpansionEngine& shared();

    /// Full support of c^{(k)} (or the part with |ρ| ≤ cap).
    ReducedExpansion reduced_coeffs(Family family, int k, int cap = kNoCap);

    /// s_{(a,1^b)}: (-1)^b [z^b] c^{(a+b),hl}.
    ReducedExpansion hook_expansion(int a, int b, int cap = kNoCap);
    /// e_k through the hook s_{(1^k)}; e_0 = 1.
    ReducedExpansion elementary_reduced(int k, int cap = kNoCap);
    /// h_k e_l = s_{(k,1^l)} + s_{(k+1,1^{l-1})}; k = 0 gives e_l.
    ReducedExpansion he_expansion(int k, int l, int cap = kNoCap);
    /// p_{k,l} = Σ_{a+b=k} (-1)^{b-l} C(b,l) h_a e_b
    ReducedExpansion pkl_expansion(int k, int l, int cap = kNoCap);
    /// s_ρ^{(k)} = c^{(k),p}_{ρ∪(1)}
    ReducedExpansion moment_expansion(int k, int cap = kNoCap);

    /// Dispatches on spec.family.
    ReducedExpansion reduced(const SymFunSpec& spec, int cap = kNoCap);
    /// assemble(reduced(spec), n), computing only |ρ| ≤ n.
    ClassExpansion expand(const SymFunSpec& spec, int n);

    void clear();

private:
    struct Table {
        int cap = 0;
        std::vector<std::unordered_map<Partition, Poly, PartitionHash>> levels;
    };

    const std::unordered_map<Partition, Poly, PartitionHash>& level(Family family, int k, int cap);
    void extend(Family family, Table& table, int k) const;

    std::mutex mutex_;
    std::map<Family, Table> tables_;
};

/// a_μ(n) = Σ_{ρ̄ = μ̄} c_ρ C(n - |ρ̄|, m_1(ρ)); terms with m_1(ρ) > n - |ρ̄| are skipped.
ClassExpansion assemble(const ReducedExpansion& r, int n);

/// Jucys: a_μ = 1 iff l(μ) = n - k.
ClassExpansion elementary_expansion(int k, int n);
/// e_1 e_k in closed form.
ClassExpansion e1ek_expansion(int k, int n);

/// Predicted c_ρ^{(k)} on the stratum |ρ| - l(ρ) = k for h or hl.
/// Throws std::invalid_argument if m_1(ρ) ≠ 0 or the family is not h/hl.
Poly leading_coefficient(const Partition& rho, Family family);

/// content_eval(f, λ) == Σ_μ a_μ(|λ|) θ^λ_μ with a from the engine.
bool content_identity_check(const SymFunSpec& spec, const Partition& lambda);

}  // namespace jmc
