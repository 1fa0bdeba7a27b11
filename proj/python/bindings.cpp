#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jmc/catalan.hpp"
#include "jmc/characters.hpp"
#include "jmc/cli.hpp"
#include "jmc/expansion.hpp"
#include "jmc/genfun.hpp"
#include "jmc/json_io.hpp"
#include "jmc/oracle.hpp"
#include "jmc/transition.hpp"
#include "jmc/verify.hpp"

namespace py = pybind11;

namespace {

jmc::SymFunSpec make_spec(const std::string& family, int k, int l) {
    jmc::SymFunSpec spec{jmc::parse_family(family), k, l};
    spec.validate();
    return spec;
}

jmc::Partition to_partition(const std::vector<int>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return jmc::Partition(parts);
}

jmc::CatalanMethod to_method(const std::string& name) {
    for (auto m : jmc::all_catalan_methods()) {
        if (jmc::method_name(m) == name) return m;
    }
    throw std::invalid_argument("unknown method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_jmc, m) {
    m.doc() = "Class expansions of symmetric functions in Jucys-Murphy elements";

    py::register_exception<jmc::GuardRailError>(m, "GuardRailError", PyExc_RuntimeError);

    m.def("partitions_of", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& p : jmc::partitions_of(n)) out.push_back(p.parts());
        return out;
    });

    m.def("expand_json", [](const std::string& family, int k, int n, int l) {
        const auto spec = make_spec(family, k, l);
        py::gil_scoped_release release;
        return jmc::class_expansion_to_json(jmc::ExpansionEngine::shared().expand(spec, n)).dump();
    }, py::arg("family"), py::arg("k"), py::arg("n"), py::arg("l") = 0);

    m.def("reduced_json", [](const std::string& family, int k, int l, int cap) {
        const auto spec = make_spec(family, k, l);
        py::gil_scoped_release release;
        return jmc::reduced_to_json(jmc::ExpansionEngine::shared().reduced(spec, cap)).dump();
    }, py::arg("family"), py::arg("k"), py::arg("l") = 0, py::arg("cap") = jmc::ExpansionEngine::kNoCap);

    m.def("oracle_json", [](const std::string& family, int k, int n, int l, bool force) {
        const auto spec = make_spec(family, k, l);
        py::gil_scoped_release release;
        return jmc::class_expansion_to_json(jmc::oracle_expansion(spec, n, force)).dump();
    }, py::arg("family"), py::arg("k"), py::arg("n"), py::arg("l") = 0, py::arg("force") = false);

    m.def("mn_character", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return jmc::mn_character(to_partition(lambda), to_partition(mu)).get_str();
    });

    m.def("central_character", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
        return jmc::central_character(to_partition(lambda), to_partition(mu)).get_str();
    });

    m.def("moment", [](const std::vector<int>& lambda, int k) { return jmc::moment(to_partition(lambda), k).get_str(); });

    m.def("gen_catalan_json", [](int r, const std::string& method) {
        return jmc::poly_to_json(jmc::gen_catalan(r, to_method(method))).dump();
    }, py::arg("r"), py::arg("method") = "defsum");

    m.def("phi_series_json", [](const std::string& family, const std::vector<int>& rho, std::size_t order) {
        return jmc::genfun_to_json(jmc::phi_series(jmc::parse_family(family), to_partition(rho), order)).dump();
    });

    m.def("psi_series_json", [](const std::string& family, const std::vector<int>& rho, std::size_t order) {
        const jmc::Family f = jmc::parse_family(family);
        const jmc::Partition p = to_partition(rho);
        return jmc::genfun_to_json({f, p, jmc::psi_series(p, order, f)}).dump();
    });

    m.def("verify_json", [](const std::string& suite, int max_n, int max_k, std::uint64_t seed, bool force, unsigned threads) {
        jmc::VerifyOptions o;
        o.max_n = max_n;
        o.max_k = max_k;
        o.seed = seed;
        o.force = force;
        o.threads = threads;
        py::gil_scoped_release release;
        return jmc::report_to_json(jmc::verify_suite(suite, o)).dump();
    }, py::arg("suite") = "all", py::arg("max_n") = 5, py::arg("max_k") = 4, py::arg("seed") = jmc::kDefaultSeed,
       py::arg("force") = false, py::arg("threads") = 0);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
            py::gil_scoped_release release;
            code = jmc::cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });

    m.attr("DEFAULT_SEED") = jmc::kDefaultSeed;
}
