#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jmc/json_io.hpp"
#include "jmc/partition.hpp"
#include "jmc/symfun.hpp"

namespace jmc {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kCharactersMaxN = 10;

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    void append(const Report& other);
};

/// {"suite","checks":[{"id","status","detail"}],"passed","failed"}
Json report_to_json(const Report& report);

struct VerifyOptions {
    int max_n = 5;
    int max_k = 4;
    std::uint64_t seed = kDefaultSeed;
    bool force = false;
    unsigned threads = 0;  // 0: hardware concurrency
};

using CheckTask = std::function<CheckResult()>;

/// Runs tasks on a worker pool; results keep the task order. Exceptions
/// become failed checks.
std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, CheckTask>>& tasks, unsigned threads = 0);

const std::vector<std::string>& suite_names();

/// Runs one suite, or all of them in suite_names() order for "all".
/// Throws std::invalid_argument for an unknown suite and GuardRailError
/// when the bounds exceed the guard rails without force.
Report verify_suite(const std::string& name, const VerifyOptions& options);

/// Specs of every verifiable family with k (+ l) ≤ max_k.
std::vector<SymFunSpec> specs_up_to(int max_k);

namespace checks {

CheckResult oracle_equivalence(const SymFunSpec& spec, int n, bool force = false);
CheckResult jucys(int k, int n);
CheckResult e1ek_closed_form(int k, int n);
/// content_identity_check for every λ ⊢ n.
CheckResult content_identity(const SymFunSpec& spec, int n);
CheckResult char_table_invariants(int n);
/// Central-character relations for all λ ⊢ n, μ ⊢ n+1, r = 0, 1, 2.
CheckResult central_character_relations(int n);
/// σ_0, σ_1, σ_2 and σ_3 for all λ ⊢ n.
CheckResult low_moments(int n);
/// σ_4, σ_5, σ_6 in content power sums for all λ ⊢ n.
CheckResult moment_closed_forms(int n);
/// Moment generating series against the content-polynomial form at `points` seeded rationals.
CheckResult moment_series(int n, std::uint64_t seed, int points = 5);
/// σ_k(λ) from the p-expansion moments for all λ ⊢ n.
CheckResult moment_expansion_identity(int k, int n);
CheckResult phi_closed_form(const Partition& rho, std::size_t order);
CheckResult explicit_phi(const Partition& rho, std::size_t order);
CheckResult catalan_methods(int max_r);
CheckResult catalan_values(int max_r);
CheckResult leading_terms(Family family, int max_weight);
/// c_ρ ≠ 0 only if |ρ| - l(ρ) ≤ k, with m_1(ρ) = 0 when equality holds. For
/// p, h and hl also k - |ρ| + l(ρ) even; jack_p has no parity.
CheckResult support_parity(Family family, int k);
CheckResult jack_table_slices();
CheckResult jack_nonnegativity(int k);
CheckResult jack_phi(const Partition& rho, std::size_t order);
/// ψ_ρ at z = 1 from the p tables, and from the hl tables when |ρ| ≥ 2.
CheckResult psi_z1(const Partition& rho, std::size_t order);
CheckResult hl_psi_conjugation(const Partition& rho, std::size_t order);
CheckResult hl_specializations(int k);

}  // namespace checks

}  // namespace jmc
