#include "jmc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace jmc {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

bool exp_less(const Exponent& a, const Exponent& b) { return a < b; }

Exponent exp_add(const Exponent& a, const Exponent& b) {
    return {static_cast<std::uint16_t>(a[0] + b[0]), static_cast<std::uint16_t>(a[1] + b[1])};
}

}  // namespace

Poly::Poly(long c) {
    if (c != 0) terms_.push_back({{0, 0}, Rational(c)});
}

Poly::Poly(const Integer& c) {
    if (c != 0) terms_.push_back({{0, 0}, Rational(c)});
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({{0, 0}, c});
}

Poly Poly::var(Var v, unsigned power) {
    Exponent e{0, 0};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
    return monomial(e, 1);
}

Poly Poly::beta() { return alpha() - Poly(1); }

Poly Poly::monomial(Exponent exp, Rational coeff) {
    Poly p;
    if (coeff != 0) p.terms_.push_back({exp, std::move(coeff)});
    return p;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{0, 0});
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_[0].exp == Exponent{0, 0}) return terms_[0].coeff;
    return 0;
}

int Poly::degree(Var v) const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exp[static_cast<std::size_t>(v)]));
    return d;
}

void Poly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return exp_less(a.exp, b.exp); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && exp_less(a->exp, b->exp))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || exp_less(b->exp, a->exp)) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) out.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) r.terms_.push_back({exp_add(x.exp, y.exp), x.coeff * y.coeff});
    }
    r.canonicalize();
    return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
}

Rational Poly::eval(const std::map<Var, Rational>& at) const {
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational term = t.coeff;
        for (std::size_t v = 0; v < 2; ++v) {
            if (t.exp[v] == 0) continue;
            auto it = at.find(static_cast<Var>(v));
            if (it == at.end()) {
                throw std::invalid_argument(std::string("eval: no binding for ") + (v == 0 ? "z" : "alpha"));
            }
            Rational power = 1;
            for (unsigned i = 0; i < t.exp[v]; ++i) power *= it->second;
            term *= power;
        }
        sum += term;
    }
    return sum;
}

Poly Poly::specialize(Var v, const Rational& value) const { return substitute(v, Poly(value)); }

Poly Poly::substitute(Var v, const Poly& value) const {
    const auto vi = static_cast<std::size_t>(v);
    Poly result;
    std::vector<Poly> powers{Poly(1)};
    for (const auto& t : terms_) {
        while (powers.size() <= t.exp[vi]) powers.push_back(powers.back() * value);
        Exponent rest = t.exp;
        rest[vi] = 0;
        result += monomial(rest, t.coeff) * powers[t.exp[vi]];
    }
    return result;
}

Poly Poly::coeff(Var v, unsigned power) const {
    const auto vi = static_cast<std::size_t>(v);
    Poly r;
    for (const auto& t : terms_) {
        if (t.exp[vi] != power) continue;
        Exponent rest = t.exp;
        rest[vi] = 0;
        r.terms_.push_back({rest, t.coeff});
    }
    r.canonicalize();
    return r;
}

Poly Poly::divide_exact(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero");
    const Term& lead = divisor.terms_.back();
    Poly remainder = *this;
    Poly quotient;
    while (!remainder.is_zero()) {
        const Term& top = remainder.terms_.back();
        if (top.exp[0] < lead.exp[0] || top.exp[1] < lead.exp[1]) {
            throw std::domain_error("divide_exact: " + divisor.to_string() + " does not divide " + to_string());
        }
        const Exponent e{static_cast<std::uint16_t>(top.exp[0] - lead.exp[0]),
                         static_cast<std::uint16_t>(top.exp[1] - lead.exp[1])};
        Poly step = monomial(e, top.coeff / lead.coeff);
        remainder -= step * divisor;
        quotient += step;
    }
    return quotient;
}

Poly Poly::in_beta() const { return substitute(Var::alpha, alpha() + Poly(1)); }

bool Poly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
}

bool Poly::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff >= 0; });
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        const int da = a->exp[0] + a->exp[1];
        const int db = b->exp[0] + b->exp[1];
        if (da != db) return da > db;
        return a->exp[0] > b->exp[0];
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
        Rational c = t->coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        auto append = [&mono](const char* name, unsigned e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        append("alpha", t->exp[1]);
        append("z", t->exp[0]);
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
    }
    return out;
}

Poly pow(Poly base, unsigned e) {
    Poly r(1);
    while (e) {
        if (e & 1U) r *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return r;
}

Poly geometric_sum(unsigned m) {
    Poly r;
    for (unsigned i = 0; i < m; ++i) r += Poly::var(Var::z, i);
    return r;
}

}  // namespace jmc
