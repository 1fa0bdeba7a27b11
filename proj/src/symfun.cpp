#include "jmc/symfun.hpp"

#include <stdexcept>

#include "jmc/characters.hpp"

namespace jmc {

std::string family_name(Family f) {
    switch (f) {
        case Family::e: return "e";
        case Family::p: return "p";
        case Family::h: return "h";
        case Family::hl: return "hl";
        case Family::hook: return "hook";
        case Family::he: return "he";
        case Family::pkl: return "pkl";
        case Family::e1e: return "e1e";
        case Family::jack_p: return "jack_p";
    }
    throw std::logic_error("family_name: unknown family");
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::e, Family::p, Family::h, Family::hl, Family::hook, Family::he, Family::pkl, Family::e1e,
                     Family::jack_p}) {
        if (family_name(f) == name) return f;
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

int SymFunSpec::degree() const {
    switch (family) {
        case Family::hook:
        case Family::he: return k + l;
        case Family::e1e: return k + 1;
        default: return k;
    }
}

std::string SymFunSpec::to_string() const {
    switch (family) {
        case Family::hook:
        case Family::he:
        case Family::pkl: return family_name(family) + "(" + std::to_string(k) + "," + std::to_string(l) + ")";
        default: return family_name(family) + "(" + std::to_string(k) + ")";
    }
}

void SymFunSpec::validate() const {
    if (k < 0 || l < 0) throw std::invalid_argument(to_string() + ": indices must be nonnegative");
    switch (family) {
        case Family::hook:
            if (k < 1) throw std::invalid_argument("hook(a,b) requires a >= 1");
            break;
        case Family::he:
            if (k < 1 || l < 1) throw std::invalid_argument("he(k,l) requires k, l >= 1");
            break;
        case Family::pkl:
            if (l < 1 || l > k) throw std::invalid_argument("pkl(k,l) requires 1 <= l <= k");
            break;
        case Family::e1e:
            if (k < 1) throw std::invalid_argument("e1e(k) requires k >= 1");
            break;
        default: break;
    }
}

PowerSumExpansion& PowerSumExpansion::operator+=(const PowerSumExpansion& other) {
    for (const auto& [mu, c] : other.terms) {
        Poly& slot = terms[mu];
        slot += c;
        if (slot.is_zero()) terms.erase(mu);
    }
    card += other.card;
    return *this;
}

PowerSumExpansion& PowerSumExpansion::operator*=(const Poly& c) {
    for (auto it = terms.begin(); it != terms.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    card *= c;
    return *this;
}

PowerSumExpansion operator*(const PowerSumExpansion& a, const PowerSumExpansion& b) {
    if (!a.card.is_zero() || !b.card.is_zero()) throw std::invalid_argument("power-sum product with a p_0 factor");
    PowerSumExpansion r;
    for (const auto& [mu, x] : a.terms) {
        for (const auto& [nu, y] : b.terms) {
            std::vector<int> parts = mu.parts();
            parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
            r += power_sum_monomial(Partition(std::move(parts)), x * y);
        }
    }
    return r;
}

PowerSumExpansion power_sum_monomial(const Partition& mu, const Poly& coeff) {
    PowerSumExpansion r;
    if (!coeff.is_zero()) r.terms.emplace(mu, coeff);
    return r;
}

namespace {

Rational inverse_z(const Partition& mu) {
    Rational r(1);
    r /= Rational(mu.z_order());
    return r;
}

}  // namespace

PowerSumExpansion elementary_psum(int k) {
    PowerSumExpansion r;
    for (const auto& mu : partitions_of(k)) r.terms.emplace(mu, Poly(Rational(inverse_z(mu) * mu.sign())));
    return r;
}

PowerSumExpansion complete_psum(int k) {
    PowerSumExpansion r;
    for (const auto& mu : partitions_of(k)) r.terms.emplace(mu, Poly(inverse_z(mu)));
    return r;
}

PowerSumExpansion hall_littlewood_psum(int k) {
    PowerSumExpansion r;
    const Poly one_minus_z = Poly(1) - Poly::z();
    for (const auto& mu : partitions_of(k)) {
        Poly numerator(1);
        for (int part : mu.parts()) numerator *= Poly(1) - Poly::var(Var::z, static_cast<unsigned>(part));
        Poly bracket = mu.empty() ? Poly(1) : numerator.divide_exact(one_minus_z);
        r.terms.emplace(mu, bracket * inverse_z(mu));
    }
    return r;
}

PowerSumExpansion hook_schur_psum(int a, int b) {
    if (a < 1 || b < 0) throw std::invalid_argument("hook_schur_psum: need a >= 1, b >= 0");
    std::vector<int> parts{a};
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    const Partition shape(std::move(parts));
    PowerSumExpansion r;
    for (const auto& mu : partitions_of(a + b)) {
        const Integer chi = mn_character(shape, mu);
        if (chi != 0) r.terms.emplace(mu, Poly(Rational(inverse_z(mu) * chi)));
    }
    return r;
}

PowerSumExpansion to_power_sums(const SymFunSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::e: return elementary_psum(spec.k);
        case Family::h: return complete_psum(spec.k);
        case Family::p: {
            if (spec.k == 0) {
                PowerSumExpansion r;
                r.card = Poly(1);
                return r;
            }
            return power_sum_monomial(Partition{spec.k});
        }
        case Family::hl: return hall_littlewood_psum(spec.k);
        case Family::hook: return hook_schur_psum(spec.k, spec.l);
        case Family::he: return complete_psum(spec.k) * elementary_psum(spec.l);
        case Family::e1e: return elementary_psum(1) * elementary_psum(spec.k);
        case Family::pkl: {
            PowerSumExpansion r;
            for (int b = spec.l; b <= spec.k; ++b) {
                PowerSumExpansion term = complete_psum(spec.k - b) * elementary_psum(b);
                const int sign = ((b - spec.l) % 2 == 0) ? 1 : -1;
                term *= Poly(Integer(binomial(b, spec.l) * sign));
                r += term;
            }
            return r;
        }
        case Family::jack_p: throw std::invalid_argument("jack_p has no power-sum expansion in this library");
    }
    throw std::logic_error("to_power_sums: unknown family");
}

Poly content_eval(const PowerSumExpansion& f, const Partition& lambda) {
    std::map<int, Integer> sums;
    auto p = [&](int k) -> const Integer& {
        auto it = sums.find(k);
        if (it == sums.end()) it = sums.emplace(k, content_power_sum(lambda, k)).first;
        return it->second;
    };
    Poly total = f.card * Poly(Integer(lambda.weight()));
    for (const auto& [mu, c] : f.terms) {
        Integer value = 1;
        for (int part : mu.parts()) value *= p(part);
        if (value != 0) total += c * Rational(value);
    }
    return total;
}

}  // namespace jmc
