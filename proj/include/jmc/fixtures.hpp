#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jmc/partition.hpp"
#include "jmc/poly.hpp"
#include "jmc/series.hpp"

namespace jmc {

/// R_k(z) = Π_{j=1}^{k-1} (k - jz) / (k-1)!
Poly r_poly(int k);

/// M_I(w, m) = (-1)^{|I|} C(w-2, i_0) Π_{u≥1} C(m_u, i_u), with m the
/// multiplicities of ρ and |I| the sum of all entries of I.
Integer m_weight(const std::vector<int>& I, int w, const Partition& rho);

/// All I = (i_0, i_1, ..., i_r) with i_0 + Σ u i_u = r.
std::vector<std::vector<int>> index_family(int r);

/// One row of a published coefficient table for the explicit z-dependent φ_ρ.
struct FixtureRow {
    std::vector<int> I;
    Rational a;
    Rational b;
    Rational c;
};

/// Weight 6: (a_I, b_I, c_I) over I_4.
const std::vector<FixtureRow>& weight6_table();
/// Weight 7: (A_I, B_I) over I_4, stored in the a and b slots.
const std::vector<FixtureRow>& weight7_table_i4();
/// Weight 7: (a_I, b_I, c_I) over I_5.
const std::vector<FixtureRow>& weight7_table_i5();

/// Published closed form of the Hall–Littlewood φ_ρ(t) for 2 ≤ |ρ| ≤ 7,
/// expanded to the given order. Throws std::invalid_argument outside that range.
TSeries explicit_phi_fixture(const Partition& rho, std::size_t order);

/// Published Jack displays φ_2, φ_{1²}, φ_3, φ_{21}, φ_{1³} in α.
TSeries jack_phi_fixture(const Partition& rho, std::size_t order);
/// Partitions covered by jack_phi_fixture.
std::vector<Partition> jack_phi_fixture_shapes();

/// One cell of the published (z, α) table of Hall–Littlewood Jack coefficients.
struct JackHlCell {
    int k;
    Partition rho;
    Poly value;  // in z and alpha
};

/// The table for k ≤ 4, β expanded as α - 1.
const std::vector<JackHlCell>& jack_hl_table();

}  // namespace jmc
