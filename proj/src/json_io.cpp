#include "jmc/json_io.hpp"

#include <stdexcept>

namespace jmc {

Json rational_to_json(const Rational& r) {
    Json j;
    j["num"] = r.get_num().get_str();
    j["den"] = r.get_den().get_str();
    return j;
}

Rational rational_from_json(const Json& j) {
    Rational r(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    if (r.get_den() == 0) throw std::invalid_argument("rational_from_json: zero denominator");
    r.canonicalize();
    return r;
}

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json term;
        term["z"] = t.exp[0];
        term["alpha"] = t.exp[1];
        term["num"] = t.coeff.get_num().get_str();
        term["den"] = t.coeff.get_den().get_str();
        terms.push_back(std::move(term));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

Poly poly_from_json(const Json& j) {
    Poly p;
    for (const auto& term : j.at("terms")) {
        const Exponent e{term.at("z").get<std::uint16_t>(), term.at("alpha").get<std::uint16_t>()};
        p += Poly::monomial(e, rational_from_json(term));
    }
    return p;
}

Json series_to_json(const TSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(poly_to_json(c));
    Json j;
    j["order"] = s.order();
    j["mixed_order"] = s.mixed_order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

TSeries series_from_json(const Json& j) {
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(poly_from_json(c));
    if (coeffs.size() != j.at("order").get<std::size_t>()) throw std::invalid_argument("series_from_json: order mismatch");
    return TSeries(std::move(coeffs), j.value("mixed_order", false));
}

Json spec_to_json(const SymFunSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    j["k"] = spec.k;
    j["l"] = spec.l;
    return j;
}

SymFunSpec spec_from_json(const Json& j) {
    return {parse_family(j.at("family").get<std::string>()), j.at("k").get<int>(), j.value("l", 0)};
}

Json reduced_to_json(const ReducedExpansion& r) {
    Json j = spec_to_json(r.spec);
    Json coeffs = Json::object();
    for (const auto& [rho, c] : r.coeffs) coeffs[rho.to_string()] = poly_to_json(c);
    j["coeffs"] = std::move(coeffs);
    return j;
}

ReducedExpansion reduced_from_json(const Json& j) {
    ReducedExpansion r;
    r.spec = spec_from_json(j);
    for (const auto& [key, value] : j.at("coeffs").items()) r.add(Partition::parse(key), poly_from_json(value));
    return r;
}

Json class_expansion_to_json(const ClassExpansion& e) {
    Json j = spec_to_json(e.spec);
    j["n"] = e.n;
    Json coeffs = Json::object();
    for (const auto& [mu, c] : e.coeffs) coeffs[mu.to_string()] = poly_to_json(c);
    j["coeffs"] = std::move(coeffs);
    return j;
}

ClassExpansion class_expansion_from_json(const Json& j) {
    ClassExpansion e = ClassExpansion::zero(j.at("n").get<int>(), spec_from_json(j));
    for (const auto& [key, value] : j.at("coeffs").items()) {
        const Partition mu = Partition::parse(key);
        if (mu.weight() != e.n) throw std::invalid_argument("class_expansion_from_json: key " + key + " has wrong weight");
        e.coeffs[mu] = poly_from_json(value);
    }
    return e;
}

Json genfun_to_json(const GenFunSeries& g) {
    Json j;
    j["family"] = family_name(g.family);
    j["rho"] = g.rho.to_string();
    j["series"] = series_to_json(g.series);
    return j;
}

Json char_table_to_json(const CharTable& table) {
    Json j;
    j["n"] = table.n();
    Json parts = Json::array();
    for (const auto& p : table.partitions()) parts.push_back(p.to_string());
    j["partitions"] = parts;
    Json values = Json::object();
    for (std::size_t row = 0; row < table.partitions().size(); ++row) {
        Json entries = Json::object();
        for (std::size_t col = 0; col < table.partitions().size(); ++col) {
            entries[table.partitions()[col].to_string()] = table.at(row, col).get_str();
        }
        values[table.partitions()[row].to_string()] = std::move(entries);
    }
    j["values"] = std::move(values);
    return j;
}

}  // namespace jmc
