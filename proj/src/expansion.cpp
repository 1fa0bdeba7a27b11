#include "jmc/expansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "jmc/catalan.hpp"
#include "jmc/characters.hpp"

namespace jmc {

namespace {

using Level = std::unordered_map<Partition, Poly, PartitionHash>;

// Coefficients of the two relations
//   (a) c^{(k)}_{ρ∪(1)} = A Σ_r r m_r(ρ) c^{(k-1)}_{ρ∖(r)∪(r+1)}
//   (b) Σ_r r m_r(σ) c^{(k)}_{σ∖(r)∪(r+1)} = a|σ| c_σ + b m_1 c_{σ∖1} + c Σ_{r,s}(...) + Σ_{r,s}(...) + d Σ_r r² m_r(...)
struct Params {
    Poly A, a, b, c, d;
};

Params params_for(Family family) {
    const Poly z = Poly::z();
    const Poly alpha = Poly::alpha();
    switch (family) {
        case Family::p: return {1, 1, 0, 1, 0};
        case Family::h: return {1, 2, 1, 1, 0};
        case Family::hl: return {1, Poly(2) - z, Poly(1) - z, 1, 0};
        case Family::jack_p: return {alpha, 1, 0, alpha, Poly::beta()};
        default: throw std::invalid_argument("no recurrence for family " + family_name(family));
    }
}

const Poly& lookup(const Level& level, const std::optional<Partition>& rho) {
    static const Poly zero;
    if (!rho) return zero;
    auto it = level.find(*rho);
    return it == level.end() ? zero : it->second;
}

// Distinct parts of ρ in increasing order.
std::vector<int> distinct_parts(const Partition& rho) {
    std::vector<int> out;
    for (auto it = rho.parts().rbegin(); it != rho.parts().rend(); ++it) {
        if (out.empty() || out.back() != *it) out.push_back(*it);
    }
    return out;
}

Poly relation_a(const Partition& rho, const Level& prev, const Params& P) {
    Poly sum;
    for (int r : distinct_parts(rho)) {
        const Poly& c = lookup(prev, rho.replace({r}, {r + 1}));
        if (!c.is_zero()) sum += c * Rational(r * rho.multiplicity(r));
    }
    return P.A * sum;
}

Poly relation_b_rhs(const Partition& sigma, const Level& prev, const Params& P) {
    Poly total;
    if (!P.a.is_zero()) total += P.a * (lookup(prev, sigma) * Rational(sigma.weight()));
    const int m1 = sigma.multiplicity(1);
    if (!P.b.is_zero() && m1 > 0) total += P.b * (lookup(prev, sigma.without_part(1)) * Rational(m1));

    const std::vector<int> parts = distinct_parts(sigma);
    Poly merge;
    for (int r : parts) {
        for (int s : parts) {
            const int mr = sigma.multiplicity(r);
            const int ms = sigma.multiplicity(s) - (r == s ? 1 : 0);
            if (ms <= 0) continue;
            const Poly& c = lookup(prev, sigma.replace({r, s}, {r + s + 1}));
            if (!c.is_zero()) merge += c * Rational(r * s * mr * ms);
        }
    }
    total += P.c * merge;

    for (int q : parts) {
        const int mq = sigma.multiplicity(q);
        for (int r = 1; r <= q; ++r) {
            const int s = q + 1 - r;
            const Poly& c = lookup(prev, sigma.replace({q}, {r, s}));
            if (!c.is_zero()) total += c * Rational(q * mq);
        }
    }

    if (!P.d.is_zero()) {
        Poly grow;
        for (int r : parts) {
            const Poly& c = lookup(prev, sigma.replace({r}, {r + 1}));
            if (!c.is_zero()) grow += c * Rational(r * r * sigma.multiplicity(r));
        }
        total += P.d * grow;
    }
    return total;
}

Level base_level(Family family, int k) {
    Level level;
    if (k == 0) {
        if (family == Family::p || family == Family::jack_p) {
            level.emplace(Partition{1}, Poly(1));
        } else {
            level.emplace(Partition{}, Poly(1));
        }
    } else if (k == 1 && family == Family::hl) {
        level.emplace(Partition{2}, Poly(1));
    }
    return level;
}

bool is_seeded(Family family, int k) { return k == 0 || (k == 1 && family == Family::hl); }

}  // namespace

ExpansionEngine& ExpansionEngine::shared() {
    static ExpansionEngine engine;
    return engine;
}

void ExpansionEngine::clear() {
    std::lock_guard lock(mutex_);
    tables_.clear();
}

void ExpansionEngine::extend(Family family, Table& table, int k) const {
    const Params P = params_for(family);
    while (static_cast<int>(table.levels.size()) <= k) {
        const int level_index = static_cast<int>(table.levels.size());
        if (is_seeded(family, level_index)) {
            table.levels.push_back(base_level(family, level_index));
            continue;
        }
        const Level& prev = table.levels.back();
        const int max_weight = std::min(table.cap, 2 * level_index + 1);

        std::vector<Partition> candidates;
        for (int w = 2; w <= max_weight; ++w) {
            for (auto& rho : partitions_of(w)) candidates.push_back(std::move(rho));
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Partition& x, const Partition& y) { return x.lowest_part() < y.lowest_part(); });

        Level cur;
        for (const Partition& rho : candidates) {
            const int p = rho.lowest_part();
            Poly value;
            if (p == 1) {
                value = relation_a(*rho.without_part(1), prev, P);
            } else {
                // σ = ρ∖(p)∪(p-1) has a single part p-1, and the term r = p-1
                // on the left of (b) is (p-1) c_ρ.
                const Partition sigma = *rho.replace({p}, {p - 1});
                value = relation_b_rhs(sigma, prev, P);
                for (int r : distinct_parts(sigma)) {
                    if (r == p - 1) continue;
                    const Poly& c = lookup(cur, sigma.replace({r}, {r + 1}));
                    if (!c.is_zero()) value -= c * Rational(r * sigma.multiplicity(r));
                }
                value *= Rational(1, p - 1);
            }
            if (!value.is_zero()) cur.emplace(rho, std::move(value));
        }
        table.levels.push_back(std::move(cur));
    }
}

const Level& ExpansionEngine::level(Family family, int k, int cap) {
    const int needed = cap == kNoCap ? 2 * k + 1 : cap;
    Table& table = tables_[family];
    if (needed > table.cap) {
        table.cap = needed;
        table.levels.clear();
    }
    extend(family, table, k);
    return table.levels[static_cast<std::size_t>(k)];
}

ReducedExpansion ExpansionEngine::reduced_coeffs(Family family, int k, int cap) {
    if (k < 0) throw std::invalid_argument("reduced_coeffs: k must be nonnegative");
    params_for(family);
    ReducedExpansion out;
    out.spec = {family, k, 0};
    std::lock_guard lock(mutex_);
    for (const auto& [rho, c] : level(family, k, cap)) {
        if (cap == kNoCap || rho.weight() <= cap) out.coeffs.emplace(rho, c);
    }
    return out;
}

ReducedExpansion ExpansionEngine::hook_expansion(int a, int b, int cap) {
    if (a < 1 || b < 0) throw std::invalid_argument("hook_expansion: need a >= 1, b >= 0");
    const ReducedExpansion hl = reduced_coeffs(Family::hl, a + b, cap);
    ReducedExpansion out;
    out.spec = {Family::hook, a, b};
    const Rational sign = (b % 2 == 0) ? 1 : -1;
    for (const auto& [rho, c] : hl.coeffs) out.add(rho, c.coeff(Var::z, static_cast<unsigned>(b)) * sign);
    return out;
}

ReducedExpansion ExpansionEngine::elementary_reduced(int k, int cap) {
    if (k < 0) throw std::invalid_argument("elementary_reduced: k must be nonnegative");
    ReducedExpansion out;
    if (k == 0) {
        out.add(Partition{}, Poly(1));
    } else {
        out = hook_expansion(1, k - 1, cap);
    }
    out.spec = {Family::e, k, 0};
    return out;
}

ReducedExpansion ExpansionEngine::he_expansion(int k, int l, int cap) {
    if (k < 0 || l < 1) throw std::invalid_argument("he_expansion: need k >= 0, l >= 1");
    ReducedExpansion out = k == 0 ? elementary_reduced(l, cap) : hook_expansion(k, l, cap) + hook_expansion(k + 1, l - 1, cap);
    out.spec = {Family::he, k, l};
    return out;
}

ReducedExpansion ExpansionEngine::pkl_expansion(int k, int l, int cap) {
    if (l < 1 || l > k) throw std::invalid_argument("pkl_expansion: need 1 <= l <= k");
    ReducedExpansion out;
    for (int b = l; b <= k; ++b) {
        const int sign = ((b - l) % 2 == 0) ? 1 : -1;
        out = out + Poly(Integer(binomial(b, l) * sign)) * he_expansion(k - b, b, cap);
    }
    out.spec = {Family::pkl, k, l};
    return out;
}

ReducedExpansion ExpansionEngine::moment_expansion(int k, int cap) {
    const ReducedExpansion p = reduced_coeffs(Family::p, k, cap == kNoCap ? kNoCap : cap + 1);
    ReducedExpansion out;
    out.spec = {Family::p, k, 0};
    for (const auto& [rho, c] : p.coeffs) {
        if (auto stripped = rho.without_part(1)) out.add(*stripped, c);
    }
    return out;
}

ReducedExpansion ExpansionEngine::reduced(const SymFunSpec& spec, int cap) {
    spec.validate();
    switch (spec.family) {
        case Family::p:
        case Family::h:
        case Family::hl:
        case Family::jack_p: return reduced_coeffs(spec.family, spec.k, cap);
        case Family::e: return elementary_reduced(spec.k, cap);
        case Family::hook: return hook_expansion(spec.k, spec.l, cap);
        case Family::he: return he_expansion(spec.k, spec.l, cap);
        case Family::pkl: return pkl_expansion(spec.k, spec.l, cap);
        case Family::e1e: {
            ReducedExpansion out = he_expansion(1, spec.k, cap);
            out.spec = spec;
            return out;
        }
    }
    throw std::logic_error("reduced: unknown family");
}

ClassExpansion ExpansionEngine::expand(const SymFunSpec& spec, int n) {
    if (n < 1) throw std::invalid_argument("expand: n must be positive");
    ClassExpansion out = assemble(reduced(spec, n), n);
    out.spec = spec;
    return out;
}

ClassExpansion assemble(const ReducedExpansion& r, int n) {
    if (n < 1) throw std::invalid_argument("assemble: n must be positive");
    ClassExpansion out = ClassExpansion::zero(n, r.spec);
    for (const auto& [rho, c] : r.coeffs) {
        const Partition bar = rho.reduce();
        const int free = n - bar.weight();
        const int m1 = rho.multiplicity(1);
        if (free < 0 || m1 > free) continue;
        out.coeffs[bar.pad(n)] += c * Rational(binomial(free, m1));
    }
    return out;
}

ClassExpansion elementary_expansion(int k, int n) {
    ClassExpansion out = ClassExpansion::zero(n, {Family::e, k, 0});
    for (auto& [mu, c] : out.coeffs) {
        if (mu.length() == n - k) c = Poly(1);
    }
    return out;
}

ClassExpansion e1ek_expansion(int k, int n) {
    if (k < 1) throw std::invalid_argument("e1ek_expansion: k must be positive");
    ClassExpansion out = ClassExpansion::zero(n, {Family::e1e, k, 0});
    const Integer pairs = binomial(n, 2);
    for (auto& [mu, c] : out.coeffs) {
        Integer a = 0;
        for (int r : distinct_parts(mu)) {
            if (r >= 2) a += binomial(r, 2) * mu.multiplicity(r);
        }
        if (mu.length() == n - k - 1) c = Poly(a);
        if (mu.length() == n - k + 1) c = Poly(Integer(pairs - a));
    }
    return out;
}

Poly leading_coefficient(const Partition& rho, Family family) {
    if (rho.multiplicity(1) != 0) throw std::invalid_argument("leading_coefficient: rho must have no part 1");
    Poly out(1);
    if (family == Family::h) {
        for (int part : rho.parts()) out *= Poly(catalan_number(part - 1));
        return out;
    }
    if (family == Family::hl) {
        if (rho.length() > 1) out = pow(Poly(1) - Poly::z(), static_cast<unsigned>(rho.length() - 1));
        for (int part : rho.parts()) out *= gen_catalan(part - 1);
        return out;
    }
    throw std::invalid_argument("leading_coefficient: family must be h or hl");
}

bool content_identity_check(const SymFunSpec& spec, const Partition& lambda) {
    const int n = lambda.weight();
    if (n < 1) throw std::invalid_argument("content_identity_check: lambda must be nonempty");
    const Poly lhs = content_eval(to_power_sums(spec), lambda);
    const ClassExpansion a = ExpansionEngine::shared().expand(spec, n);
    Poly rhs;
    for (const auto& [mu, c] : a.coeffs) {
        if (!c.is_zero()) rhs += c * central_character(lambda, mu);
    }
    return lhs == rhs;
}

}  // namespace jmc
