#pragma once

#include <stdexcept>

#include "jmc/class_expansion.hpp"
#include "jmc/group_algebra.hpp"
#include "jmc/symfun.hpp"

namespace jmc {

inline constexpr int kOracleMaxN = 8;

struct GuardRailError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonCentralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// J_i = Σ_{j<i} (j i); J_1 = 0.
AlgebraElement jm_element(int i, int n);

/// Σ_μ c_μ p_μ(J_1, ..., J_n) for an expansion in the power-sum basis.
AlgebraElement evaluate_power_sums(const PowerSumExpansion& f, int n);

/// f(J_1, ..., J_n) by brute force. Throws GuardRailError when n > 8 unless forced.
AlgebraElement evaluate(const SymFunSpec& spec, int n, bool force = false);

/// Reads off the class coefficients; throws NonCentralError naming two
/// permutations of equal cycle type with different coefficients.
ClassExpansion class_expand(const AlgebraElement& x);

ClassExpansion oracle_expansion(const SymFunSpec& spec, int n, bool force = false);

}  // namespace jmc
