#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace jmc {

/// Integer partition stored as weakly decreasing positive parts.
///
/// The empty partition is a valid value. Comparison is lexicographic on the
/// parts, so sorting in descending order yields reverse-lexicographic order.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Sorts the input descending and drops zero parts; negative parts throw.
    explicit Partition(std::vector<int> parts);

    /// Parses "3,2,1,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    bool empty() const noexcept { return parts_.empty(); }

    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int multiplicity(int part) const noexcept;
    /// Smallest part; 0 for the empty partition.
    int lowest_part() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    int largest_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// (-1)^(weight - length)
    int sign() const noexcept { return ((weight_ - length()) % 2 == 0) ? 1 : -1; }

    Partition conjugate() const;
    mpz_class z_order() const;
    mpz_class hook_product() const;
    /// Contents j - i of every cell, row by row.
    std::vector<int> contents() const;

    /// Adds a cell at the end of row i (1-based). Returns nullopt when the
    /// result is not a partition; throws std::out_of_range if i > length + 1.
    std::optional<Partition> add_corner(int i) const;
    /// Removes the last cell of row i (1-based). Throws std::out_of_range if
    /// i > length.
    std::optional<Partition> remove_corner(int i) const;

    /// Strips all parts equal to 1.
    Partition reduce() const;
    /// Appends parts 1 up to weight n; throws std::invalid_argument if n < weight.
    Partition pad(int n) const;

    /// Removes one occurrence of each listed part and then inserts the added
    /// parts. Returns nullopt if some removal is impossible.
    std::optional<Partition> replace(std::initializer_list<int> removed,
                                     std::initializer_list<int> added) const;
    Partition with_part(int part) const;
    std::optional<Partition> without_part(int part) const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Orders by weight, then reverse-lexicographically; used for map keys that
/// are serialized.
struct GradedOrder {
    bool operator()(const Partition& a, const Partition& b) const noexcept {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return b < a;
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

mpz_class factorial(int n);

}  // namespace jmc

template <>
struct std::hash<jmc::Partition> : jmc::PartitionHash {};
