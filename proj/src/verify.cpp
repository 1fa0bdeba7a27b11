#include "jmc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jmc/catalan.hpp"
#include "jmc/characters.hpp"
#include "jmc/expansion.hpp"
#include "jmc/fixtures.hpp"
#include "jmc/genfun.hpp"
#include "jmc/oracle.hpp"
#include "jmc/transition.hpp"

namespace jmc {

std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

Json report_to_json(const Report& report) {
    Json j;
    j["suite"] = report.suite;
    j["checks"] = Json::array();
    for (const auto& c : report.checks) {
        j["checks"].push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    }
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    return j;
}

std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, CheckTask>>& tasks, unsigned threads) {
    std::vector<CheckResult> results(tasks.size());
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            CheckResult r;
            try {
                r = tasks[i].second();
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
            }
            r.id = tasks[i].first;
            results[i] = std::move(r);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return results;
}

std::vector<SymFunSpec> specs_up_to(int max_k) {
    std::vector<SymFunSpec> out;
    for (Family f : {Family::e, Family::p, Family::h, Family::hl, Family::e1e}) {
        for (int k = 1; k <= max_k; ++k) out.push_back({f, k, 0});
    }
    for (int a = 1; a <= max_k; ++a) {
        for (int b = 0; a + b <= max_k; ++b) out.push_back({Family::hook, a, b});
    }
    for (int k = 1; k <= max_k; ++k) {
        for (int l = 1; k + l <= max_k; ++l) out.push_back({Family::he, k, l});
    }
    for (int k = 1; k <= max_k; ++k) {
        for (int l = 1; l <= k; ++l) out.push_back({Family::pkl, k, l});
    }
    return out;
}

namespace checks {

namespace {

CheckResult ok() { return {"", true, ""}; }

CheckResult fail(std::string detail) { return {"", false, std::move(detail)}; }

std::string mismatch(const std::string& what, const Poly& got, const Poly& expected) {
    return what + ": got " + got.to_string() + ", expected " + expected.to_string();
}

CheckResult compare_expansions(const ClassExpansion& got, const ClassExpansion& expected, const std::string& label) {
    for (const auto& [mu, c] : expected.coeffs) {
        const Poly g = got.coeffs.contains(mu) ? got.at(mu) : Poly();
        if (g != c) return fail(label + " n=" + std::to_string(expected.n) + " mu=" + mu.to_string() + ": got " + g.to_string() + ", expected " + c.to_string());
    }
    for (const auto& [mu, c] : got.coeffs) {
        if (!expected.coeffs.contains(mu) && !c.is_zero()) {
            return fail(label + " n=" + std::to_string(expected.n) + " mu=" + mu.to_string() + ": unexpected " + c.to_string());
        }
    }
    return ok();
}

CheckResult compare_series(const TSeries& got, const TSeries& expected, const std::string& label) {
    if (got.order() != expected.order()) {
        return fail(label + ": order " + std::to_string(got.order()) + " vs " + std::to_string(expected.order()));
    }
    for (std::size_t j = 0; j < got.order(); ++j) {
        if (got.coeff(j) != expected.coeff(j)) return fail(mismatch(label + " t^" + std::to_string(j), got.coeff(j), expected.coeff(j)));
    }
    return ok();
}

TSeries specialize_series(const TSeries& s, Var v, const Rational& value) {
    std::vector<Poly> coeffs;
    coeffs.reserve(s.order());
    for (const auto& c : s.coeffs()) coeffs.push_back(c.specialize(v, value));
    return TSeries(std::move(coeffs), s.mixed_order());
}

Rational p_content(const Partition& lambda, int k) { return Rational(content_power_sum(lambda, k)); }

std::vector<Partition> partitions_between(int lo, int hi) {
    std::vector<Partition> out;
    for (int w = lo; w <= hi; ++w) {
        for (auto& p : partitions_of(w)) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

CheckResult oracle_equivalence(const SymFunSpec& spec, int n, bool force) {
    const ClassExpansion expected = oracle_expansion(spec, n, force);
    return compare_expansions(ExpansionEngine::shared().expand(spec, n), expected, spec.to_string());
}

CheckResult jucys(int k, int n) {
    return compare_expansions(elementary_expansion(k, n), oracle_expansion({Family::e, k, 0}, n), "e(" + std::to_string(k) + ")");
}

CheckResult e1ek_closed_form(int k, int n) {
    const SymFunSpec spec{Family::e1e, k, 0};
    return compare_expansions(e1ek_expansion(k, n), ExpansionEngine::shared().expand(spec, n), spec.to_string());
}

CheckResult content_identity(const SymFunSpec& spec, int n) {
    for (const auto& lambda : partitions_of(n)) {
        if (!content_identity_check(spec, lambda)) return fail(spec.to_string() + " lambda=" + lambda.to_string());
    }
    return ok();
}

CheckResult char_table_invariants(int n) {
    const CharTable& t = char_table(n);
    const auto& parts = t.partitions();
    const std::size_t size = parts.size();
    Integer dim_squares = 0;
    for (std::size_t a = 0; a < size; ++a) {
        const Integer& dim = t.at(a, size - 1);
        if (dim != dimension(parts[a])) return fail("dimension mismatch at " + parts[a].to_string());
        dim_squares += dim * dim;
        for (std::size_t b = a; b < size; ++b) {
            Rational rows = 0;
            Integer cols = 0;
            for (std::size_t m = 0; m < size; ++m) {
                rows += Rational(t.at(a, m) * t.at(b, m)) / Rational(parts[m].z_order());
                cols += t.at(m, a) * t.at(m, b);
            }
            if (rows != (a == b ? 1 : 0)) return fail("row orthogonality " + parts[a].to_string() + " / " + parts[b].to_string());
            const Integer expected_cols = a == b ? parts[a].z_order() : Integer(0);
            if (cols != expected_cols) return fail("column orthogonality " + parts[a].to_string() + " / " + parts[b].to_string());
        }
    }
    if (dim_squares != factorial(n)) return fail("sum of squared dimensions is not n!");
    return ok();
}

CheckResult central_character_relations(int n) {
    const auto lambdas = partitions_of(n);
    const auto mus = partitions_of(n + 1);
    for (const auto& lambda : lambdas) {
        for (const auto& mu : mus) {
            for (int r = 0; r <= 2; ++r) {
                if (!check_central_relation(lambda, mu, r)) {
                    return fail("r=" + std::to_string(r) + " lambda=" + lambda.to_string() + " mu=" + mu.to_string());
                }
            }
        }
    }
    return ok();
}

CheckResult low_moments(int n) {
    for (const auto& lambda : partitions_of(n)) {
        const std::string at = " lambda=" + lambda.to_string();
        if (moment(lambda, 0) != 1) return fail("sigma_0 != 1" + at);
        if (moment(lambda, 1) != 0) return fail("sigma_1 != 0" + at);
        if (moment(lambda, 2) != n) return fail("sigma_2 != n" + at);
        if (moment(lambda, 3) != 2 * p_content(lambda, 1)) return fail("sigma_3 != 2 p_1" + at);
    }
    return ok();
}

CheckResult moment_closed_forms(int n) {
    const Rational nn(n);
    for (const auto& lambda : partitions_of(n)) {
        const std::string at = " lambda=" + lambda.to_string();
        const Rational p1 = p_content(lambda, 1);
        const Rational p2 = p_content(lambda, 2);
        const Rational p3 = p_content(lambda, 3);
        const Rational p4 = p_content(lambda, 4);
        if (moment(lambda, 4) != 3 * p2 + Rational(binomial(n + 1, 2))) return fail("sigma_4" + at);
        if (moment(lambda, 5) != 4 * p3 + 2 * (nn + 1) * p1) return fail("sigma_5" + at);
        const Rational s6 = 5 * p4 + 3 * (nn + 1) * p2 + 2 * p2 + 2 * p1 * p1 + Rational(binomial(n + 2, 3));
        if (moment(lambda, 6) != s6) return fail("sigma_6" + at);
    }
    return ok();
}

CheckResult moment_series(int n, std::uint64_t seed, int points) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(n)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    for (const auto& lambda : partitions_of(n)) {
        int done = 0;
        int attempts = 0;
        while (done < points) {
            if (++attempts > 100 * points) return fail("no admissible sample point for lambda=" + lambda.to_string());
            Rational z0(num(rng), den(rng));
            z0.canonicalize();
            try {
                if (!check_moment_series(lambda, z0)) return fail("lambda=" + lambda.to_string() + " z0=" + z0.get_str());
                ++done;
            } catch (const std::domain_error&) {
                // pole; draw again
            }
        }
    }
    return ok();
}

CheckResult moment_expansion_identity(int k, int n) {
    const ClassExpansion a = assemble(ExpansionEngine::shared().moment_expansion(k, n), n);
    for (const auto& lambda : partitions_of(n)) {
        Rational rhs = 0;
        for (const auto& [mu, c] : a.coeffs) {
            if (!c.is_zero()) rhs += c.constant_term() * central_character(lambda, mu);
        }
        const Rational lhs = moment(lambda, k);
        if (lhs != rhs) {
            return fail("k=" + std::to_string(k) + " lambda=" + lambda.to_string() + ": sigma=" + lhs.get_str() + ", expansion gives " + rhs.get_str());
        }
    }
    return ok();
}

CheckResult phi_closed_form(const Partition& rho, std::size_t order) {
    return compare_series(phi_series(Family::p, rho, order).series, phi_closed_form_z1(rho, order), "phi_" + rho.to_string());
}

CheckResult explicit_phi(const Partition& rho, std::size_t order) {
    return compare_series(phi_series(Family::hl, rho, order).series, explicit_phi_fixture(rho, order), "phi_" + rho.to_string());
}

CheckResult catalan_methods(int max_r) {
    std::vector<Poly> tower;
    for (int r = 0; r <= max_r; ++r) {
        const Poly reference = gen_catalan(r, CatalanMethod::defsum);
        for (CatalanMethod m : all_catalan_methods()) {
            const Poly value = gen_catalan(r, m);
            if (value != reference) return fail(mismatch("r=" + std::to_string(r) + " " + method_name(m), value, reference));
        }
        tower.push_back(reference);
    }
    const Poly z = Poly::z();
    for (int r = 2; r <= max_r; ++r) {
        Poly rhs = (Poly(2) - z) * tower[static_cast<std::size_t>(r - 1)];
        Poly sum;
        for (int i = 1; i <= r - 2; ++i) sum += tower[static_cast<std::size_t>(i)] * tower[static_cast<std::size_t>(r - i - 1)];
        rhs += (Poly(1) - z) * sum;
        if (rhs != tower[static_cast<std::size_t>(r)]) return fail(mismatch("recurrence r=" + std::to_string(r), rhs, tower[static_cast<std::size_t>(r)]));
    }
    return ok();
}

CheckResult catalan_values(int max_r) {
    const Poly z = Poly::z();
    const Poly two_minus_z = Poly(2) - z;
    for (int r = 0; r <= max_r; ++r) {
        const Poly c = gen_catalan(r);
        const std::string at = "r=" + std::to_string(r);
        if (c.eval({{Var::z, 0}}) != Rational(catalan_number(r))) return fail(at + ": value at z=0 is not the Catalan number");
        if (c.eval({{Var::z, 1}}) != 1) return fail(at + ": value at z=1 is not 1");
        if (!c.has_integer_coefficients()) return fail(at + ": non-integer coefficient");
        if (r >= 2 && r % 2 == 0) {
            try {
                (void)c.divide_exact(two_minus_z);
            } catch (const std::domain_error&) {
                return fail(at + ": not divisible by 2-z");
            }
        }
    }
    const std::vector<std::pair<int, Poly>> printed{
        {2, two_minus_z},
        {3, z * z - Poly(5) * z + Poly(5)},
        {4, two_minus_z * (z * z - Poly(7) * z + Poly(7))},
    };
    for (const auto& [r, expected] : printed) {
        if (r > max_r) continue;
        const Poly c = gen_catalan(r);
        if (c != expected) return fail(mismatch("r=" + std::to_string(r), c, expected));
    }
    return ok();
}

CheckResult leading_terms(Family family, int max_weight) {
    auto& engine = ExpansionEngine::shared();
    int compared = 0;
    for (const auto& rho : partitions_between(2, max_weight)) {
        if (rho.multiplicity(1) != 0) continue;
        const int k = rho.weight() - rho.length();
        const Poly got = engine.reduced_coeffs(family, k, max_weight).at(rho);
        const Poly expected = leading_coefficient(rho, family);
        if (got != expected) return fail(mismatch(family_name(family) + " k=" + std::to_string(k) + " rho=" + rho.to_string(), got, expected));
        ++compared;
    }
    return {"", true, std::to_string(compared) + " coefficients"};
}

CheckResult support_parity(Family family, int k) {
    const ReducedExpansion r = ExpansionEngine::shared().reduced_coeffs(family, k);
    for (const auto& [rho, c] : r.coeffs) {
        if (c.is_zero()) continue;
        const int d = rho.weight() - rho.length();
        const std::string at = family_name(family) + " k=" + std::to_string(k) + " rho=" + rho.to_string();
        if (d > k) return fail(at + ": |rho|-l(rho) exceeds k");
        if (family != Family::jack_p && (k - d) % 2 != 0) return fail(at + ": parity");
        if (d == k && rho.multiplicity(1) != 0) return fail(at + ": part 1 on the leading stratum");
    }
    return {"", true, std::to_string(r.coeffs.size()) + " coefficients"};
}

CheckResult jack_table_slices() {
    auto& engine = ExpansionEngine::shared();
    for (const auto& cell : jack_hl_table()) {
        const std::string at = "k=" + std::to_string(cell.k) + " rho=" + cell.rho.to_string();
        const Poly jack = engine.reduced_coeffs(Family::jack_p, cell.k).at(cell.rho);
        const Poly z1 = cell.value.specialize(Var::z, 1);
        if (z1 != jack) return fail(mismatch(at + " z=1", z1, jack));
        const Poly hl = engine.reduced_coeffs(Family::hl, cell.k).at(cell.rho);
        const Poly a1 = cell.value.specialize(Var::alpha, 1);
        if (a1 != hl) return fail(mismatch(at + " alpha=1", a1, hl));
    }
    for (int k = 1; k <= 4; ++k) {
        for (const auto& [rho, c] : engine.reduced_coeffs(Family::jack_p, k).coeffs) {
            const bool listed = std::any_of(jack_hl_table().begin(), jack_hl_table().end(),
                                            [&](const JackHlCell& cell) { return cell.k == k && cell.rho == rho; });
            if (!listed && !c.is_zero()) return fail("k=" + std::to_string(k) + " rho=" + rho.to_string() + " missing from table");
        }
    }
    return ok();
}

CheckResult jack_nonnegativity(int k) {
    for (const auto& [rho, c] : ExpansionEngine::shared().reduced_coeffs(Family::jack_p, k).coeffs) {
        const Poly b = c.in_beta();
        if (!b.has_integer_coefficients() || !b.has_nonnegative_coefficients()) {
            return fail("k=" + std::to_string(k) + " rho=" + rho.to_string() + ": " + c.to_string());
        }
    }
    return ok();
}

CheckResult jack_phi(const Partition& rho, std::size_t order) {
    return compare_series(phi_series(Family::jack_p, rho, order).series, jack_phi_fixture(rho, order), "phi_" + rho.to_string());
}

CheckResult psi_z1(const Partition& rho, std::size_t order) {
    const TSeries expected = psi_closed_form_z1(rho, order);
    CheckResult r = compare_series(psi_series(rho, order, Family::p), expected, "p psi_" + rho.to_string());
    // The hl tables start from P_0 = 1 rather than p_0 = n, so they agree with p at z = 1 only from weight 2 on.
    if (r.passed && rho.weight() >= 2) {
        r = compare_series(specialize_series(psi_series(rho, order, Family::hl), Var::z, 1), expected, "hl psi_" + rho.to_string());
    }
    return r;
}

CheckResult hl_psi_conjugation(const Partition& rho, std::size_t order) {
    return compare_series(psi_series(rho.conjugate(), order), psi_series(rho, order).negate_t(),
                          "psi_" + rho.conjugate().to_string());
}

CheckResult hl_specializations(int k) {
    auto& engine = ExpansionEngine::shared();
    const ReducedExpansion hl = engine.reduced_coeffs(Family::hl, k);
    const ReducedExpansion h = engine.reduced_coeffs(Family::h, k);
    const ReducedExpansion p = engine.reduced_coeffs(Family::p, k);
    std::map<Partition, bool> keys;
    for (const auto* r : {&hl, &h, &p}) {
        for (const auto& [rho, c] : r->coeffs) keys[rho] = true;
    }
    for (const auto& [rho, unused] : keys) {
        const std::string at = "k=" + std::to_string(k) + " rho=" + rho.to_string();
        const Poly v = hl.at(rho);
        if (v.specialize(Var::z, 0) != h.at(rho)) return fail(mismatch(at + " z=0", v.specialize(Var::z, 0), h.at(rho)));
        if (v.specialize(Var::z, 1) != p.at(rho)) return fail(mismatch(at + " z=1", v.specialize(Var::z, 1), p.at(rho)));
    }
    return ok();
}

}  // namespace checks

namespace {

using TaskList = std::vector<std::pair<std::string, CheckTask>>;

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

TaskList oracle_tasks(const VerifyOptions& o) {
    if (o.max_n > kOracleMaxN && !o.force) {
        throw GuardRailError("oracle suite: max-n " + std::to_string(o.max_n) + " exceeds " + std::to_string(kOracleMaxN) + " (use --force)");
    }
    TaskList tasks;
    for (int n = 2; n <= o.max_n; ++n) {
        for (int k = 1; k < n; ++k) {
            tasks.emplace_back("jucys/e" + std::to_string(k) + "/n" + std::to_string(n), [k, n] { return checks::jucys(k, n); });
        }
    }
    for (const auto& spec : specs_up_to(o.max_k)) {
        for (int n = 1; n <= o.max_n; ++n) {
            const bool force = o.force;
            tasks.emplace_back("oracle/" + spec.to_string() + "/n" + std::to_string(n),
                               [spec, n, force] { return checks::oracle_equivalence(spec, n, force); });
        }
    }
    for (int k = 1; k <= o.max_k; ++k) {
        for (int n = 1; n <= o.max_n; ++n) {
            tasks.emplace_back("e1ek/k" + std::to_string(k) + "/n" + std::to_string(n), [k, n] { return checks::e1ek_closed_form(k, n); });
        }
    }
    return tasks;
}

TaskList character_tasks(const VerifyOptions& o) {
    if (o.max_n > kCharactersMaxN && !o.force) {
        throw GuardRailError("characters suite: max-n " + std::to_string(o.max_n) + " exceeds " + std::to_string(kCharactersMaxN) + " (use --force)");
    }
    TaskList tasks;
    for (int n = 1; n <= o.max_n; ++n) {
        tasks.emplace_back("chartable/n" + std::to_string(n), [n] { return checks::char_table_invariants(n); });
    }
    for (const auto& spec : specs_up_to(o.max_k)) {
        for (int n = 1; n <= o.max_n; ++n) {
            tasks.emplace_back("content/" + spec.to_string() + "/n" + std::to_string(n), [spec, n] { return checks::content_identity(spec, n); });
        }
    }
    return tasks;
}

TaskList identity_tasks(const VerifyOptions& o) {
    TaskList tasks;
    for (int n = 1; n <= o.max_n; ++n) {
        const std::string tag = "/n" + std::to_string(n);
        tasks.emplace_back("central_relations" + tag, [n] { return checks::central_character_relations(n); });
        tasks.emplace_back("moments-low" + tag, [n] { return checks::low_moments(n); });
        tasks.emplace_back("moments-closed" + tag, [n] { return checks::moment_closed_forms(n); });
        const std::uint64_t s = o.seed;
        tasks.emplace_back("moment-series" + tag, [n, s] { return checks::moment_series(n, s); });
        for (int k = 0; k <= 2 * o.max_k; ++k) {
            tasks.emplace_back("moment-expansion/k" + std::to_string(k) + tag, [k, n] { return checks::moment_expansion_identity(k, n); });
        }
    }
    tasks.emplace_back("catalan-methods", [r = 5 * o.max_k] { return checks::catalan_methods(r); });
    tasks.emplace_back("catalan-values", [r = 5 * o.max_k] { return checks::catalan_values(r); });
    for (Family f : {Family::h, Family::hl}) {
        tasks.emplace_back("leading/" + family_name(f), [f, w = o.max_n + 2] { return checks::leading_terms(f, w); });
    }
    for (Family f : {Family::p, Family::h, Family::hl, Family::jack_p}) {
        for (int k = 1; k <= 2 * o.max_k; ++k) {
            tasks.emplace_back("support/" + family_name(f) + "/k" + std::to_string(k), [f, k] { return checks::support_parity(f, k); });
        }
    }
    return tasks;
}

TaskList fixture_tasks(const VerifyOptions& o) {
    TaskList tasks;
    for (int w = 2; w <= std::min(o.max_n, 7); ++w) {
        const std::size_t order = w <= 5 ? 13 : 11;
        for (const auto& rho : partitions_of(w)) {
            tasks.emplace_back("explicit-phi/" + rho.to_string(), [rho, order] { return checks::explicit_phi(rho, order); });
        }
    }
    for (int w = 2; w <= o.max_n; ++w) {
        for (const auto& rho : partitions_of(w)) {
            tasks.emplace_back("phi-closed/" + rho.to_string(), [rho] { return checks::phi_closed_form(rho, 13); });
        }
    }
    for (int w = 1; w <= o.max_n; ++w) {
        for (const auto& rho : partitions_of(w)) {
            tasks.emplace_back("psi-z1/" + rho.to_string(), [rho] { return checks::psi_z1(rho, 12); });
            tasks.emplace_back("psi-conjugate/" + rho.to_string(), [rho] { return checks::hl_psi_conjugation(rho, 12); });
        }
    }
    return tasks;
}

TaskList jack_tasks(const VerifyOptions& o) {
    TaskList tasks;
    tasks.emplace_back("jack-table", [] { return checks::jack_table_slices(); });
    for (int k = 1; k <= 2 * o.max_k; ++k) {
        tasks.emplace_back("jack-nonneg/k" + std::to_string(k), [k] { return checks::jack_nonnegativity(k); });
    }
    for (const auto& rho : jack_phi_fixture_shapes()) {
        tasks.emplace_back("jack-phi/" + rho.to_string(), [rho] { return checks::jack_phi(rho, 10); });
    }
    for (int k = 1; k <= o.max_k; ++k) {
        tasks.emplace_back("hl-slices/k" + std::to_string(k), [k] { return checks::hl_specializations(k); });
    }
    return tasks;
}

TaskList suite_tasks(const std::string& name, const VerifyOptions& o) {
    if (name == "oracle") return oracle_tasks(o);
    if (name == "characters") return character_tasks(o);
    if (name == "identities") return identity_tasks(o);
    if (name == "fixtures") return fixture_tasks(o);
    if (name == "jack") return jack_tasks(o);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"oracle", "characters", "identities", "fixtures", "jack"};
    return names;
}

Report verify_suite(const std::string& name, const VerifyOptions& options) {
    require(options.max_n >= 1, "max-n must be at least 1");
    require(options.max_k >= 1, "max-k must be at least 1");
    std::vector<std::string> names;
    if (name == "all") {
        names = suite_names();
    } else {
        names = {name};
    }
    TaskList tasks;
    for (const auto& n : names) {
        for (auto& t : suite_tasks(n, options)) {
            t.first = n + ":" + t.first;
            tasks.push_back(std::move(t));
        }
    }
    Report report;
    report.suite = name;
    report.checks = run_checks(tasks, options.threads);
    return report;
}

}  // namespace jmc
