#include "jmc/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "jmc/partition.hpp"

namespace jmc {

TSeries::TSeries(std::size_t order) : coeffs_(order) {}

TSeries::TSeries(std::vector<Poly> coeffs, bool mixed) : coeffs_(std::move(coeffs)), mixed_(mixed) {}

TSeries TSeries::exp_linear(const Poly& c, std::size_t order) {
    TSeries s(order);
    Poly term(1);
    for (std::size_t j = 0; j < order; ++j) {
        if (j > 0) term = term * c * Rational(1, static_cast<long>(j));
        s.coeffs_[j] = term;
    }
    return s;
}

TSeries TSeries::monomial(std::size_t power, std::size_t order, const Poly& coeff) {
    TSeries s(order);
    if (power < order) s.coeffs_[power] = coeff;
    return s;
}

bool TSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::size_t TSeries::valuation() const {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (!coeffs_[j].is_zero()) return j;
    }
    return coeffs_.size();
}

TSeries& TSeries::operator+=(const TSeries& other) {
    if (other.order() != order()) {
        mixed_ = true;
        coeffs_.resize(std::min(order(), other.order()));
    }
    mixed_ = mixed_ || other.mixed_;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& other) { return *this += -other; }

TSeries& TSeries::operator*=(const Poly& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
}

TSeries TSeries::operator-() const {
    TSeries r = *this;
    for (auto& p : r.coeffs_) p = -p;
    return r;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TSeries r(order);
    r.mixed_ = a.mixed_ || b.mixed_ || a.order() != b.order();
    for (std::size_t i = 0; i < order; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < order; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

TSeries TSeries::negate_t() const {
    TSeries r = *this;
    for (std::size_t j = 1; j < r.coeffs_.size(); j += 2) r.coeffs_[j] = -r.coeffs_[j];
    return r;
}

TSeries TSeries::shift(std::size_t m) const {
    TSeries r(order());
    r.mixed_ = mixed_;
    for (std::size_t j = 0; j + m < order(); ++j) r.coeffs_[j + m] = coeffs_[j];
    return r;
}

TSeries TSeries::divide_t(std::size_t m) const {
    if (m > order()) throw std::invalid_argument("divide_t: shift exceeds order");
    for (std::size_t j = 0; j < m; ++j) {
        if (!coeffs_[j].is_zero()) throw std::domain_error("divide_t: series not divisible by t^m");
    }
    return TSeries(std::vector<Poly>(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end()), mixed_);
}

TSeries TSeries::truncate(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncate: order exceeds available precision");
    return TSeries(std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)), mixed_);
}

Poly TSeries::egf_coeff(std::size_t j) const { return coeff(j) * Rational(factorial(static_cast<int>(j))); }

TSeries TSeries::from_egf(const std::vector<Poly>& values) {
    TSeries s(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        const Rational inv = Rational(1) / Rational(factorial(static_cast<int>(j)));
        s.coeffs_[j] = values[j] * inv;
    }
    return s;
}

TSeries pow(const TSeries& base, unsigned e) {
    TSeries r = TSeries::monomial(0, base.order());
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace jmc
