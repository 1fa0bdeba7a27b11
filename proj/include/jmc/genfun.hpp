#pragma once

#include <cstddef>

#include "jmc/partition.hpp"
#include "jmc/series.hpp"
#include "jmc/symfun.hpp"

namespace jmc {

struct GenFunSeries {
    Family family;
    Partition rho;
    TSeries series;
};

/// φ_ρ(t) = Σ_{k<order} c_ρ^{(k)} t^k / k! for p, h, hl or jack_p.
GenFunSeries phi_series(Family family, const Partition& rho, std::size_t order);

/// z = 1 closed form |ρ|! φ_ρ = e^{-t} (1 - e^{-t})^{|ρ|-2} Π_i (e^{it} - 1)^{m_i},
/// divided by |ρ|!. For |ρ| ≤ 1 the formula is not a power series; pass
/// small_weight_convention to get φ_(1) = 1 and φ_∅ = 0 instead of an error.
TSeries phi_closed_form_z1(const Partition& rho, std::size_t order, bool small_weight_convention = false);

/// ψ_σ = Σ_{ρ ⊢ |σ|} z_ρ^{-1} χ^σ_ρ φ_ρ
TSeries psi_series(const Partition& sigma, std::size_t order, Family family = Family::hl);

/// z = 1 values: (e^t - 1)^{r-1} (e^{-t} - 1)^s / |ρ|! for ρ = (r, 1^s), zero otherwise.
TSeries psi_closed_form_z1(const Partition& sigma, std::size_t order);

}  // namespace jmc
