// Exit gate: one PASS/FAIL line per acceptance criterion, bounds fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jmc/fixtures.hpp"
#include "jmc/verify.hpp"

using namespace jmc;

namespace {

using TaskList = std::vector<std::pair<std::string, CheckTask>>;

struct Criterion {
    int number;
    std::string title;
    std::function<TaskList()> tasks;
};

const std::vector<Family> kRecurrenceFamilies{Family::p, Family::h, Family::hl, Family::jack_p};

TaskList jucys() {
    TaskList t;
    for (int n = 2; n <= 7; ++n) {
        for (int k = 1; k < n; ++k) t.emplace_back("e" + std::to_string(k) + " n" + std::to_string(n), [k, n] { return checks::jucys(k, n); });
    }
    return t;
}

TaskList oracle_equivalence() {
    TaskList t;
    for (const auto& spec : specs_up_to(6)) {
        for (int n = 1; n <= 6; ++n) {
            t.emplace_back(spec.to_string() + " n" + std::to_string(n), [spec, n] { return checks::oracle_equivalence(spec, n); });
        }
    }
    for (Family f : {Family::p, Family::h, Family::hl}) {
        for (int k = 1; k <= 4; ++k) {
            const SymFunSpec spec{f, k, 0};
            t.emplace_back(spec.to_string() + " n7", [spec] { return checks::oracle_equivalence(spec, 7); });
        }
    }
    return t;
}

TaskList character_identity() {
    TaskList t;
    for (const auto& spec : specs_up_to(7)) {
        for (int n = 1; n <= 9; ++n) {
            t.emplace_back(spec.to_string() + " n" + std::to_string(n), [spec, n] { return checks::content_identity(spec, n); });
        }
    }
    return t;
}

TaskList central_relations() {
    TaskList t;
    for (int n = 0; n <= 7; ++n) t.emplace_back("n" + std::to_string(n), [n] { return checks::central_character_relations(n); });
    return t;
}

TaskList transition_measure() {
    TaskList t;
    for (int n = 0; n <= 10; ++n) t.emplace_back("low n" + std::to_string(n), [n] { return checks::low_moments(n); });
    for (int n = 0; n <= 9; ++n) t.emplace_back("closed n" + std::to_string(n), [n] { return checks::moment_closed_forms(n); });
    for (int n = 0; n <= 8; ++n) t.emplace_back("series n" + std::to_string(n), [n] { return checks::moment_series(n, kDefaultSeed, 5); });
    return t;
}

TaskList phi_closed_form() {
    TaskList t;
    for (int w = 2; w <= 8; ++w) {
        for (const auto& rho : partitions_of(w)) t.emplace_back(rho.to_string(), [rho] { return checks::phi_closed_form(rho, 13); });
    }
    return t;
}

TaskList moment_identity() {
    TaskList t;
    for (int k = 0; k <= 8; ++k) {
        for (int n = 1; n <= 7; ++n) {
            t.emplace_back("k" + std::to_string(k) + " n" + std::to_string(n), [k, n] { return checks::moment_expansion_identity(k, n); });
        }
    }
    return t;
}

TaskList catalan() {
    return {{"methods", [] { return checks::catalan_methods(20); }}, {"values", [] { return checks::catalan_values(20); }}};
}

TaskList leading_terms() {
    return {{"h", [] { return checks::leading_terms(Family::h, 9); }}, {"hl", [] { return checks::leading_terms(Family::hl, 9); }}};
}

TaskList support_parity() {
    TaskList t;
    for (Family f : kRecurrenceFamilies) {
        for (int k = 1; k <= 10; ++k) {
            t.emplace_back(family_name(f) + " k" + std::to_string(k), [f, k] { return checks::support_parity(f, k); });
        }
    }
    return t;
}

TaskList explicit_fixtures() {
    TaskList t;
    for (int w = 2; w <= 7; ++w) {
        const std::size_t order = w <= 5 ? 13 : 11;
        for (const auto& rho : partitions_of(w)) t.emplace_back(rho.to_string(), [rho, order] { return checks::explicit_phi(rho, order); });
    }
    return t;
}

TaskList jack() {
    TaskList t;
    t.emplace_back("table", [] { return checks::jack_table_slices(); });
    for (int k = 1; k <= 8; ++k) t.emplace_back("nonneg k" + std::to_string(k), [k] { return checks::jack_nonnegativity(k); });
    for (const auto& rho : jack_phi_fixture_shapes()) t.emplace_back("phi " + rho.to_string(), [rho] { return checks::jack_phi(rho, 10); });
    return t;
}

TaskList psi_hooks() {
    TaskList t;
    for (int w = 1; w <= 6; ++w) {
        for (const auto& rho : partitions_of(w)) t.emplace_back(rho.to_string(), [rho] { return checks::psi_z1(rho, 12); });
    }
    return t;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Jucys closed form, 1 <= k < n <= 7", jucys},
        {2, "oracle equivalence, k(+l) <= 6, n <= 6; p/h/hl k <= 4 at n = 7", oracle_equivalence},
        {3, "character identity, lambda |- n <= 9, k(+l) <= 7", character_identity},
        {4, "central character relations r = 0, 1, 2, n <= 7", central_relations},
        {5, "transition measure moments and series", transition_measure},
        {6, "phi closed form at z = 1, 2 <= |rho| <= 8, order 13", phi_closed_form},
        {7, "moments from the p expansion, k <= 8, n <= 7", moment_identity},
        {8, "generalized Catalan tower, r <= 20", catalan},
        {9, "leading terms for h and hl, |rho| <= 9", leading_terms},
        {10, "support and parity, k <= 10", support_parity},
        {11, "explicit hl fixtures, |rho| <= 5 order 13, |rho| 6-7 order 11", explicit_fixtures},
        {12, "Jack table slices, nonnegativity k <= 8, phi displays order 10", jack},
        {13, "psi at z = 1, |rho| <= 6", psi_hooks},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto tasks = c.tasks();
        const auto results = run_checks(tasks);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const CheckResult* first_failure = nullptr;
        std::size_t bad = 0;
        for (const auto& r : results) {
            if (!r.passed) {
                ++bad;
                if (!first_failure) first_failure = &r;
            }
        }
        std::printf("%s %2d  %s: %zu checks, %zu failed (%.1f s)", bad == 0 ? "PASS" : "FAIL", c.number, c.title.c_str(),
                    results.size(), bad, seconds);
        if (first_failure) std::printf(" first: %s: %s", first_failure->id.c_str(), first_failure->detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
        if (bad != 0) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
