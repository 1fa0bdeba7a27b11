#pragma once

#include <string>
#include <vector>

#include "jmc/poly.hpp"

namespace jmc {

enum class CatalanMethod { defsum, rec, alt1, alt2, hl_spec };

std::string method_name(CatalanMethod m);
const std::vector<CatalanMethod>& all_catalan_methods();

/// C(r) = binom(2r, r) / (r + 1)
Integer catalan_number(int r);

/// Generalized Catalan polynomial 𝒞(r) in z. 𝒞(0) = 1 for every method;
/// `rec` builds the whole tower from 𝒞(0) = 𝒞(1) = 1.
Poly gen_catalan(int r, CatalanMethod method = CatalanMethod::defsum);

}  // namespace jmc
