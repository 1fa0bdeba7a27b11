#pragma once

#include <json.hpp>

#include "jmc/characters.hpp"
#include "jmc/class_expansion.hpp"
#include "jmc/genfun.hpp"
#include "jmc/poly.hpp"
#include "jmc/series.hpp"

namespace jmc {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"terms":[{"z":e1,"alpha":e2,"num":"..","den":".."}]} in canonical term order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json series_to_json(const TSeries& s);
TSeries series_from_json(const Json& j);

Json spec_to_json(const SymFunSpec& spec);
SymFunSpec spec_from_json(const Json& j);

/// Keys are partition text forms in weight-then-reverse-lex order.
Json reduced_to_json(const ReducedExpansion& r);
ReducedExpansion reduced_from_json(const Json& j);

/// Every μ ⊢ n in reverse-lex order, zero coefficients included.
Json class_expansion_to_json(const ClassExpansion& e);
ClassExpansion class_expansion_from_json(const Json& j);

Json genfun_to_json(const GenFunSeries& g);

Json char_table_to_json(const CharTable& table);

}  // namespace jmc
