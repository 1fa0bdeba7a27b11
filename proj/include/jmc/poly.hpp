#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace jmc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient for n >= 0; zero when k > n. Negative n or k throws.
Integer binomial(long n, long k);

/// The two indeterminates every coefficient may carry. beta = alpha - 1 is
/// never stored; see Poly::in_beta().
enum class Var : std::uint8_t { z = 0, alpha = 1 };

using Exponent = std::array<std::uint16_t, 2>;

/// Sparse polynomial in z and alpha over the rationals.
///
/// Terms are kept sorted by exponent (z-major, ascending) with no zero
/// coefficients, so structural equality is polynomial equality.
class Poly {
public:
    struct Term {
        Exponent exp;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    Poly(const Integer& c);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static Poly var(Var v, unsigned power = 1);
    static Poly z() { return var(Var::z); }
    static Poly alpha() { return var(Var::alpha); }
    /// alpha - 1
    static Poly beta();
    static Poly monomial(Exponent exp, Rational coeff);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_term() const;
    int degree(Var v) const noexcept;  // -1 for the zero polynomial

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Evaluates at the given binding. Throws std::invalid_argument if an
    /// indeterminate that occurs in the polynomial is not bound.
    Rational eval(const std::map<Var, Rational>& at) const;
    /// Partial evaluation: substitutes a rational for one indeterminate.
    Poly specialize(Var v, const Rational& value) const;
    Poly substitute(Var v, const Poly& value) const;
    /// Coefficient of v^power, a polynomial in the other indeterminate.
    Poly coeff(Var v, unsigned power) const;

    /// Exact quotient; throws std::domain_error if the divisor does not divide.
    Poly divide_exact(const Poly& divisor) const;

    /// Re-expansion in powers of beta = alpha - 1. The returned polynomial
    /// uses the alpha slot to hold the exponent of beta.
    Poly in_beta() const;

    /// True iff every coefficient is an integer.
    bool has_integer_coefficients() const;
    bool has_nonnegative_coefficients() const;

    /// Descending-degree rendering, e.g. "-z^3 + 9*z^2 - 21*z + 14".
    std::string to_string() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

Poly pow(Poly base, unsigned e);

/// (1 - z^m) / (1 - z) = 1 + z + ... + z^(m-1)
Poly geometric_sum(unsigned m);

}  // namespace jmc
