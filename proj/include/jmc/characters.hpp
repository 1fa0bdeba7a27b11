#pragma once

#include <map>
#include <vector>

#include "jmc/partition.hpp"
#include "jmc/poly.hpp"

namespace jmc {

/// χ^λ_μ by the Murnaghan–Nakayama rule on beta-sets. Results are memoized
/// per thread. Throws std::invalid_argument on weight mismatch.
Integer mn_character(const Partition& lambda, const Partition& mu);

/// n!/H_λ, cross-checked against the Vandermonde product formula.
Integer dimension(const Partition& lambda);

/// θ^λ_μ = (n!/z_μ) χ^λ_μ / dim λ
Rational central_character(const Partition& lambda, const Partition& mu);

/// Σ over cells of (content)^k; k = 0 gives |λ|.
Integer content_power_sum(const Partition& lambda, int k);

/// Full character table of S_n with rows and columns in reverse-lex order.
class CharTable {
public:
    explicit CharTable(int n);

    int n() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return parts_; }
    const Integer& at(const Partition& lambda, const Partition& mu) const;
    const Integer& at(std::size_t row, std::size_t col) const { return values_[row][col]; }
    std::size_t index(const Partition& p) const;

private:
    int n_;
    std::vector<Partition> parts_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::vector<Integer>> values_;
};

/// Shared immutable table for S_n, built once per n (thread-safe).
const CharTable& char_table(int n);

}  // namespace jmc
