#include <doctest.h>

#include "jmc/expansion.hpp"
#include "jmc/json_io.hpp"
#include "jmc/oracle.hpp"

using jmc::Json;
using jmc::Poly;
using jmc::Rational;

TEST_CASE("rational and poly JSON") {
    const Rational r("-123456789012345678901234567891/7");
    CHECK(jmc::rational_to_json(r).dump() == R"({"num":"-123456789012345678901234567891","den":"7"})");
    CHECK(jmc::rational_from_json(jmc::rational_to_json(r)) == r);
    CHECK(jmc::rational_from_json(Json::parse(R"({"num":"4","den":"6"})")) == Rational(2, 3));
    CHECK_THROWS((jmc::rational_from_json(Json::parse(R"({"num":"4","den":"0"})"))));

    const Poly p = Poly(2) - Poly::z() + Rational(1, 3) * Poly::alpha() * Poly::z();
    const Json j = jmc::poly_to_json(p);
    CHECK(j.dump() == R"({"terms":[{"z":0,"alpha":0,"num":"2","den":"1"},{"z":1,"alpha":0,"num":"-1","den":"1"},{"z":1,"alpha":1,"num":"1","den":"3"}]})");
    CHECK(jmc::poly_from_json(j) == p);
    CHECK(jmc::poly_to_json(Poly()).dump() == R"({"terms":[]})");
}

TEST_CASE("expansions round trip byte-identically") {
    auto& engine = jmc::ExpansionEngine::shared();
    for (const jmc::SymFunSpec& spec : {jmc::SymFunSpec{jmc::Family::hl, 4, 0}, jmc::SymFunSpec{jmc::Family::jack_p, 3, 0},
                                        jmc::SymFunSpec{jmc::Family::pkl, 4, 2}, jmc::SymFunSpec{jmc::Family::hook, 2, 2}}) {
        const jmc::ReducedExpansion r = engine.reduced(spec);
        const std::string text = jmc::reduced_to_json(r).dump();
        const jmc::ReducedExpansion back = jmc::reduced_from_json(Json::parse(text));
        CHECK(back == r);
        CHECK(back.spec.to_string() == spec.to_string());
        CHECK(jmc::reduced_to_json(back).dump() == text);

        const jmc::ClassExpansion e = engine.expand(spec, 6);
        const std::string etext = jmc::class_expansion_to_json(e).dump();
        const jmc::ClassExpansion eback = jmc::class_expansion_from_json(Json::parse(etext));
        CHECK(eback == e);
        CHECK(jmc::class_expansion_to_json(eback).dump() == etext);
    }
}

TEST_CASE("class expansion keys are reverse-lex and complete") {
    const Json j = jmc::class_expansion_to_json(jmc::elementary_expansion(2, 4));
    std::vector<std::string> keys;
    for (const auto& [key, value] : j["coeffs"].items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"});
    Json bad = j;
    bad["coeffs"]["5"] = jmc::poly_to_json(Poly(1));
    CHECK_THROWS(jmc::class_expansion_from_json(bad));
}

TEST_CASE("reduced keys are graded") {
    const Json j = jmc::reduced_to_json(jmc::ExpansionEngine::shared().reduced_coeffs(jmc::Family::hl, 3));
    std::vector<std::string> keys;
    for (const auto& [key, value] : j["coeffs"].items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"2", "2,1", "4", "2,1,1", "3,2", "2,2,2"});
}

TEST_CASE("series round trip keeps the order and flag") {
    jmc::TSeries s = jmc::TSeries::exp_linear(Poly::z(), 5);
    s += jmc::TSeries::exp_linear(Poly(1), 4);
    const Json j = jmc::series_to_json(s);
    CHECK(j["order"] == 4);
    CHECK(j["mixed_order"] == true);
    const jmc::TSeries back = jmc::series_from_json(j);
    CHECK(back == s);
    CHECK(back.mixed_order());
    Json bad = j;
    bad["order"] = 7;
    CHECK_THROWS(jmc::series_from_json(bad));
}

TEST_CASE("character table JSON") {
    const Json j = jmc::char_table_to_json(jmc::char_table(3));
    CHECK(j["n"] == 3);
    CHECK(j["partitions"] == Json::array({"3", "2,1", "1,1,1"}));
    CHECK(j["values"]["2,1"]["3"] == "-1");
    CHECK(j["values"]["2,1"]["1,1,1"] == "2");
}
