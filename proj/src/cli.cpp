#include "jmc/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "jmc/catalan.hpp"
#include "jmc/characters.hpp"
#include "jmc/expansion.hpp"
#include "jmc/fixtures.hpp"
#include "jmc/genfun.hpp"
#include "jmc/json_io.hpp"
#include "jmc/oracle.hpp"
#include "jmc/transition.hpp"
#include "jmc/verify.hpp"

namespace jmc::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string format = "tsv";
    std::string family = "p";
    int k = 0;
    int l = 0;
    int n = 0;
    int cap = ExpansionEngine::kNoCap;
    std::string rho;
    std::size_t order = 10;
    bool psi = false;
    bool check = false;
    bool force = false;
    int max_r = 10;
    std::string method = "defsum";
    std::string suite = "all";
    VerifyOptions verify;
    int max_k = 6;
};

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
}

void add_spec(CLI::App* cmd, Options& o) {
    cmd->add_option("--family", o.family, "e, p, h, hl, hook, he, pkl, e1e or jack_p")->required();
    cmd->add_option("--k", o.k, "First index (a for hook)")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--l", o.l, "Second index (b for hook)")->check(CLI::NonNegativeNumber)->capture_default_str();
}

SymFunSpec make_spec(const Options& o) {
    SymFunSpec spec;
    try {
        spec.family = parse_family(o.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    spec.k = o.k;
    spec.l = o.l;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

Partition parse_partition(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

template <typename Map>
void print_rows(std::ostream& out, const Map& coeffs) {
    for (const auto& [mu, c] : coeffs) {
        if (!c.is_zero()) out << mu.to_string() << '\t' << c.to_string() << '\n';
    }
}

void print_series(std::ostream& out, const Options& o, const GenFunSeries& g) {
    if (o.format == "json") {
        print_json(out, genfun_to_json(g));
        return;
    }
    for (std::size_t j = 0; j < g.series.order(); ++j) {
        const Poly& c = g.series.coeff(j);
        if (!c.is_zero()) out << j << '\t' << c.to_string() << '\n';
    }
}

int cmd_expand(const Options& o, std::ostream& out) {
    const SymFunSpec spec = make_spec(o);
    if (o.n < 1) throw UsageError("--n must be at least 1");
    const ClassExpansion e = ExpansionEngine::shared().expand(spec, o.n);
    if (o.format == "json") {
        print_json(out, class_expansion_to_json(e));
    } else {
        print_rows(out, e.coeffs);
    }
    return kExitOk;
}

int cmd_reduced(const Options& o, std::ostream& out) {
    const SymFunSpec spec = make_spec(o);
    const ReducedExpansion r = ExpansionEngine::shared().reduced(spec, o.cap);
    if (o.format == "json") {
        print_json(out, reduced_to_json(r));
    } else {
        print_rows(out, r.coeffs);
    }
    return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const SymFunSpec spec = make_spec(o);
    if (spec.family == Family::jack_p) throw UsageError("the group-algebra oracle does not cover jack_p");
    if (o.n < 1) throw UsageError("--n must be at least 1");
    const ClassExpansion e = oracle_expansion(spec, o.n, o.force);
    if (o.format == "json") {
        print_json(out, class_expansion_to_json(e));
    } else {
        print_rows(out, e.coeffs);
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto& names = suite_names();
    if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    VerifyOptions v = o.verify;
    v.force = o.force;
    const Report report = verify_suite(o.suite, v);
    if (o.format == "json") {
        print_json(out, report_to_json(report));
    } else {
        for (const auto& c : report.checks) {
            out << c.id << '\t' << (c.passed ? "pass" : "fail");
            if (!c.detail.empty()) out << '\t' << c.detail;
            out << '\n';
        }
        out << "passed " << report.passed() << ", failed " << report.failed() << '\n';
    }
    return report.failed() == 0 ? kExitOk : kExitFailure;
}

int cmd_catalan(const Options& o, std::ostream& out) {
    if (o.max_r < 0) throw UsageError("--max-r must be nonnegative");
    CatalanMethod method = CatalanMethod::defsum;
    bool known = false;
    for (CatalanMethod m : all_catalan_methods()) {
        if (method_name(m) == o.method) {
            method = m;
            known = true;
        }
    }
    if (!known) throw UsageError("unknown method '" + o.method + "'");
    std::vector<Poly> values;
    for (int r = 0; r <= o.max_r; ++r) values.push_back(gen_catalan(r, method));
    std::vector<CheckResult> results;
    if (o.check) {
        results.push_back(checks::catalan_methods(o.max_r));
        results.back().id = "methods";
        results.push_back(checks::catalan_values(o.max_r));
        results.back().id = "values";
    }
    const bool failed = std::any_of(results.begin(), results.end(), [](const CheckResult& c) { return !c.passed; });
    if (o.format == "json") {
        Json j;
        j["method"] = o.method;
        j["values"] = Json::array();
        for (int r = 0; r <= o.max_r; ++r) {
            j["values"].push_back({{"r", r}, {"value", poly_to_json(values[static_cast<std::size_t>(r)])}});
        }
        if (o.check) {
            j["checks"] = Json::array();
            for (const auto& c : results) j["checks"].push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
        }
        print_json(out, j);
    } else {
        for (int r = 0; r <= o.max_r; ++r) out << r << '\t' << values[static_cast<std::size_t>(r)].to_string() << '\n';
        for (const auto& c : results) {
            out << "check " << c.id << '\t' << (c.passed ? "pass" : "fail");
            if (!c.detail.empty()) out << '\t' << c.detail;
            out << '\n';
        }
    }
    return failed ? kExitFailure : kExitOk;
}

CheckResult genfun_fixture_check(Family family, const Partition& rho, std::size_t order, bool psi) {
    if (psi) {
        if (family != Family::hl) return {"fixture", true, "no fixture for psi with this family"};
        CheckResult z1 = checks::psi_z1(rho, order);
        z1.id = "fixture";
        return z1;
    }
    const int w = rho.weight();
    CheckResult r{"fixture", true, "no fixture for this shape"};
    if (family == Family::hl && w >= 2 && w <= 7) {
        r = checks::explicit_phi(rho, order);
    } else if (family == Family::p && w >= 2) {
        r = checks::phi_closed_form(rho, order);
    } else if (family == Family::jack_p) {
        const auto shapes = jack_phi_fixture_shapes();
        if (std::find(shapes.begin(), shapes.end(), rho) != shapes.end()) r = checks::jack_phi(rho, order);
    }
    r.id = "fixture";
    return r;
}

int cmd_genfun(const Options& o, std::ostream& out) {
    Family family{};
    try {
        family = parse_family(o.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (family != Family::p && family != Family::h && family != Family::hl && family != Family::jack_p) {
        throw UsageError("genfun supports the families p, h, hl and jack_p");
    }
    if (o.psi && family == Family::jack_p) throw UsageError("--psi is not available for jack_p");
    if (o.order < 1) throw UsageError("--order must be at least 1");
    const Partition rho = parse_partition(o.rho);
    const GenFunSeries g = o.psi ? GenFunSeries{family, rho, psi_series(rho, o.order, family)} : phi_series(family, rho, o.order);
    if (!o.check) {
        print_series(out, o, g);
        return kExitOk;
    }
    const CheckResult c = genfun_fixture_check(family, rho, o.order, o.psi);
    if (o.format == "json") {
        Json j = genfun_to_json(g);
        j["check"] = {{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}};
        print_json(out, j);
    } else {
        print_series(out, o, g);
        out << "check " << c.id << '\t' << (c.passed ? "pass" : "fail");
        if (!c.detail.empty()) out << '\t' << c.detail;
        out << '\n';
    }
    return c.passed ? kExitOk : kExitFailure;
}

int cmd_moments(const Options& o, std::ostream& out) {
    if (o.max_k < 0) throw UsageError("--max-k must be nonnegative");
    if (o.rho.empty()) {
        const ReducedExpansion s = ExpansionEngine::shared().moment_expansion(o.k, o.cap);
        if (o.format == "json") {
            print_json(out, reduced_to_json(s));
        } else {
            print_rows(out, s.coeffs);
        }
        return kExitOk;
    }
    const Partition lambda = parse_partition(o.rho);
    const TransitionMeasure m = transition_measure(lambda);
    if (o.format == "json") {
        Json j;
        j["lambda"] = lambda.to_string();
        j["atoms"] = Json::array();
        for (const auto& a : m.atoms) j["atoms"].push_back({{"u", a.u}, {"p", rational_to_json(a.p)}});
        j["moments"] = Json::array();
        for (int k = 0; k <= o.max_k; ++k) j["moments"].push_back(rational_to_json(moment(lambda, k)));
        print_json(out, j);
    } else {
        for (int k = 0; k <= o.max_k; ++k) out << k << '\t' << moment(lambda, k).get_str() << '\n';
    }
    return kExitOk;
}

int cmd_chartable(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    if (o.n > kCharactersMaxN && !o.force) {
        throw GuardRailError("chartable: n " + std::to_string(o.n) + " exceeds " + std::to_string(kCharactersMaxN) + " (use --force)");
    }
    const CharTable& t = char_table(o.n);
    if (o.format == "json") {
        print_json(out, char_table_to_json(t));
        return kExitOk;
    }
    for (const auto& mu : t.partitions()) out << '\t' << mu.to_string();
    out << '\n';
    for (std::size_t a = 0; a < t.partitions().size(); ++a) {
        out << t.partitions()[a].to_string();
        for (std::size_t b = 0; b < t.partitions().size(); ++b) out << '\t' << t.at(a, b).get_str();
        out << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Class expansions of symmetric functions in Jucys-Murphy elements", "jmc"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    Options o;

    auto* expand = app.add_subcommand("expand", "a_mu(n) from the reduced recurrences");
    add_spec(expand, o);
    expand->add_option("--n", o.n, "Symmetric group size")->required();
    add_format(expand, o);

    auto* reduced = app.add_subcommand("reduced", "n-independent coefficients c_rho");
    add_spec(reduced, o);
    reduced->add_option("--cap", o.cap, "Only rho with |rho| <= cap (-1: no cap)")->capture_default_str();
    add_format(reduced, o);

    auto* oracle = app.add_subcommand("oracle", "a_mu(n) by brute force in the group algebra");
    add_spec(oracle, o);
    oracle->add_option("--n", o.n, "Symmetric group size")->required();
    oracle->add_flag("--force", o.force, "Allow n > 8");
    add_format(oracle, o);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite, "oracle, characters, identities, fixtures, jack or all")->capture_default_str();
    verify->add_option("--max-n", o.verify.max_n, "Largest n")->capture_default_str();
    verify->add_option("--max-k", o.verify.max_k, "Largest degree index")->capture_default_str();
    verify->add_option("--seed", o.verify.seed, "Seed for sampled rational points")->capture_default_str();
    verify->add_option("--threads", o.verify.threads, "Worker threads (0: all cores)")->capture_default_str();
    verify->add_flag("--force", o.force, "Lift the guard rails (oracle n > 8, characters n > 10)");
    add_format(verify, o);

    auto* catalan = app.add_subcommand("catalan", "Generalized Catalan polynomials");
    catalan->add_option("--max-r", o.max_r, "Largest r")->capture_default_str();
    catalan->add_option("--method", o.method, "defsum, rec, alt1, alt2 or hl_spec")->capture_default_str();
    catalan->add_flag("--check", o.check, "Cross-check all methods and known values");
    add_format(catalan, o);

    auto* genfun = app.add_subcommand("genfun", "Generating series phi_rho(t) or psi_rho(t)");
    genfun->add_option("--family", o.family, "p, h, hl or jack_p")->required();
    genfun->add_option("--rho", o.rho, "Partition, e.g. 2,2")->required();
    genfun->add_option("--order", o.order, "Number of t coefficients")->capture_default_str();
    genfun->add_flag("--psi", o.psi, "Print psi_rho instead of phi_rho");
    genfun->add_flag("--check-fixtures", o.check, "Compare against the closed forms and published tables");
    add_format(genfun, o);

    auto* moments = app.add_subcommand("moments", "Transition-measure moments, or their class expansion");
    moments->add_option("--lambda", o.rho, "Partition; prints sigma_0..sigma_max-k");
    moments->add_option("--max-k", o.max_k, "Largest moment index")->capture_default_str();
    moments->add_option("--k", o.k, "Without --lambda: print s_rho for sigma_k")->check(CLI::NonNegativeNumber);
    moments->add_option("--cap", o.cap, "Only rho with |rho| <= cap (-1: no cap)")->capture_default_str();
    add_format(moments, o);

    auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
    chartable->add_option("--n", o.n, "Symmetric group size")->required();
    chartable->add_flag("--force", o.force, "Allow n > 10");
    add_format(chartable, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(o, out);
        if (reduced->parsed()) return cmd_reduced(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (catalan->parsed()) return cmd_catalan(o, out);
        if (genfun->parsed()) return cmd_genfun(o, out);
        if (moments->parsed()) return cmd_moments(o, out);
        if (chartable->parsed()) return cmd_chartable(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GuardRailError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace jmc::cli
