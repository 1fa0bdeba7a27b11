#pragma once

#include <vector>

#include "jmc/partition.hpp"
#include "jmc/poly.hpp"

namespace jmc {

struct Atom {
    int u;       // λ_i - i + 1
    Rational p;  // c_i(λ)
};

/// Transition measure ω_λ: one atom per addable corner, positions strictly
/// decreasing.
struct TransitionMeasure {
    Partition lambda;
    std::vector<Atom> atoms;
};

/// Weights H_λ / H_{λ^(i)}, cross-checked against the explicit product
/// formula; a mismatch throws std::logic_error.
TransitionMeasure transition_measure(const Partition& lambda);

/// σ_k(λ) = Σ_i c_i(λ) (λ_i - i + 1)^k
Rational moment(const Partition& lambda, int k);

/// C_λ(x) = Π over cells (x + content)
Rational content_polynomial(const Partition& lambda, const Rational& x);

/// Compares Σ_i c_i/(z0 - u_i) with z0^{-1} C_λ(-z0)^2 / (C_λ(-z0-1) C_λ(-z0+1))
/// exactly. Throws std::domain_error naming the pole if z0 hits one.
bool check_moment_series(const Partition& lambda, const Rational& z0);

/// θ^λ_ν, or 0 when ν is absent.
Rational theta_or_zero(const Partition& lambda, const std::optional<Partition>& nu);

/// Left side Σ_i c_i(λ) u_i^r θ^{λ^(i)}_μ of the linear relations between
/// central characters, for μ ⊢ |λ| + 1.
Rational central_relation_lhs(const Partition& lambda, const Partition& mu, int r);
/// Matching right side for r = 0, 1, 2.
Rational central_relation_rhs(const Partition& lambda, const Partition& mu, int r);
/// lhs == rhs; throws std::invalid_argument unless |μ| = |λ| + 1 and r ∈ {0,1,2}.
bool check_central_relation(const Partition& lambda, const Partition& mu, int r);

}  // namespace jmc
