#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jmc/partition.hpp"
#include "jmc/poly.hpp"

namespace jmc {

/// Bijection of {1..n} in one-line notation. compose(s, t)(x) = s(t(x)).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless images is a permutation of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The transposition (i j).
    static Permutation transposition(int n, int i, int j);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }

    Partition cycle_type() const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& s, const Permutation& t);

/// Smallest one-line permutation of the given cycle type.
Permutation class_representative(const Partition& mu);

/// Enumeration of S_n by lexicographic rank, with cached transposition action.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n);

    int n() const noexcept { return n_; }
    std::size_t order() const noexcept { return perms_.size(); }
    const Permutation& element(std::size_t rank) const { return perms_[rank]; }
    std::size_t rank(const Permutation& p) const;
    /// rank of element(r) ∘ (i j)
    std::size_t times_transposition(std::size_t r, int i, int j) const;
    const Partition& cycle_type(std::size_t r) const { return types_[r]; }

private:
    int n_;
    std::vector<Permutation> perms_;
    std::vector<Partition> types_;
    // right_[r * pairs + pair_index(i, j)]
    std::vector<std::uint32_t> right_;
};

/// Shared instance per n (thread-safe construction).
const SymmetricGroup& symmetric_group(int n);

/// Element of the group algebra Q[z, α][S_n], stored densely by rank.
class AlgebraElement {
public:
    explicit AlgebraElement(int n);

    static AlgebraElement identity(int n);
    static AlgebraElement basis(const Permutation& p, const Poly& coeff = Poly(1));

    int n() const noexcept { return n_; }
    const SymmetricGroup& group() const { return *group_; }
    const Poly& coeff(const Permutation& p) const;
    const Poly& coeff_by_rank(std::size_t r) const { return coeffs_[r]; }
    void add_term(const Permutation& p, const Poly& c);
    /// Number of nonzero coefficients.
    std::size_t support_size() const;
    bool is_zero() const { return support_size() == 0; }

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Poly& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Poly& c) { return a *= c; }
    /// Convolution product.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    /// x · J_j
    AlgebraElement times_jm(int j) const;
    /// x · p_k(J_1, ..., J_n), k >= 1
    AlgebraElement times_power_sum(int k) const;

private:
    int n_;
    const SymmetricGroup* group_;
    std::vector<Poly> coeffs_;
};

}  // namespace jmc
