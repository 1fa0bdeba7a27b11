#pragma once

#include <cstddef>
#include <vector>

#include "jmc/poly.hpp"

namespace jmc {

/// Truncated power series in t with Poly coefficients, known modulo t^order.
///
/// Combining series of different orders truncates to the smaller one and
/// sets mixed_order(), so precision loss is visible to the caller.
class TSeries {
public:
    TSeries() = default;
    explicit TSeries(std::size_t order);
    explicit TSeries(std::vector<Poly> coeffs, bool mixed = false);

    /// Σ_{j<order} c^j t^j / j!
    static TSeries exp_linear(const Poly& c, std::size_t order);
    /// t^power (zero series if power >= order)
    static TSeries monomial(std::size_t power, std::size_t order, const Poly& coeff = Poly(1));

    std::size_t order() const noexcept { return coeffs_.size(); }
    bool mixed_order() const noexcept { return mixed_; }
    const Poly& coeff(std::size_t j) const { return coeffs_.at(j); }
    void set_coeff(std::size_t j, Poly value) { coeffs_.at(j) = std::move(value); }
    const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;
    /// Index of the first nonzero coefficient, or order() if none.
    std::size_t valuation() const;

    TSeries& operator+=(const TSeries& other);
    TSeries& operator-=(const TSeries& other);
    TSeries& operator*=(const Poly& c);
    TSeries operator-() const;
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    friend TSeries operator*(TSeries a, const Poly& c) { return a *= c; }
    friend TSeries operator*(const Poly& c, TSeries a) { return a *= c; }

    /// Coefficients and order equal; the mixed-order flag is ignored.
    friend bool operator==(const TSeries& a, const TSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// f(t) -> f(-t)
    TSeries negate_t() const;
    /// Multiplies by t^m and keeps the order.
    TSeries shift(std::size_t m) const;
    /// Divides by t^m; the leading m coefficients must vanish. The order drops by m.
    TSeries divide_t(std::size_t m) const;
    TSeries truncate(std::size_t order) const;

    /// Coefficient of t^j multiplied by j!, i.e. the "c^{(j)}" in Σ c^{(j)} t^j/j!.
    Poly egf_coeff(std::size_t j) const;
    /// Builds Σ values[j] t^j / j!.
    static TSeries from_egf(const std::vector<Poly>& values);

private:
    std::vector<Poly> coeffs_;
    bool mixed_ = false;
};

TSeries pow(const TSeries& base, unsigned e);

}  // namespace jmc
