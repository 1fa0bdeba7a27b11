#include "jmc/oracle.hpp"

#include <map>

namespace jmc {

namespace {

void guard(int n, bool force) {
    if (n < 1) throw std::invalid_argument("oracle: n must be positive");
    if (n > kOracleMaxN && !force) {
        throw GuardRailError("oracle: n = " + std::to_string(n) + " exceeds " + std::to_string(kOracleMaxN) + " (use --force)");
    }
}

// e_k (sign = -1) or h_k (sign = +1) via k f_k = Σ_i sign^{i-1} f_{k-i} p_i.
AlgebraElement newton(int k, int n, int sign) {
    std::vector<AlgebraElement> f{AlgebraElement::identity(n)};
    for (int m = 1; m <= k; ++m) {
        AlgebraElement acc(n);
        for (int i = 1; i <= m; ++i) {
            AlgebraElement term = f[static_cast<std::size_t>(m - i)].times_power_sum(i);
            if (sign < 0 && (i - 1) % 2 == 1) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        acc *= Poly(Rational(1, m));
        f.push_back(std::move(acc));
    }
    return f.back();
}

AlgebraElement he(int k, int l, int n) {
    if (k == 0) return newton(l, n, -1);
    return newton(k, n, 1) * newton(l, n, -1);
}

}  // namespace

AlgebraElement jm_element(int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("jm_element: index out of range");
    return AlgebraElement::identity(n).times_jm(i);
}

AlgebraElement evaluate_power_sums(const PowerSumExpansion& f, int n) {
    AlgebraElement total = AlgebraElement::identity(n) * (f.card * Poly(Integer(n)));
    // Words p_{μ_1} p_{μ_2} ... share prefixes across μ.
    std::map<std::vector<int>, AlgebraElement> prefix;
    prefix.emplace(std::vector<int>{}, AlgebraElement::identity(n));
    for (const auto& [mu, c] : f.terms) {
        std::vector<int> word;
        const AlgebraElement* x = &prefix.at(word);
        for (int part : mu.parts()) {
            word.push_back(part);
            auto it = prefix.find(word);
            if (it == prefix.end()) it = prefix.emplace(word, x->times_power_sum(part)).first;
            x = &it->second;
        }
        total += *x * c;
    }
    return total;
}

AlgebraElement evaluate(const SymFunSpec& spec, int n, bool force) {
    spec.validate();
    guard(n, force);
    switch (spec.family) {
        case Family::p:
            if (spec.k == 0) return AlgebraElement::identity(n) * Poly(n);
            return AlgebraElement::identity(n).times_power_sum(spec.k);
        case Family::e: return newton(spec.k, n, -1);
        case Family::h: return newton(spec.k, n, 1);
        case Family::hl: return evaluate_power_sums(hall_littlewood_psum(spec.k), n);
        case Family::hook: return evaluate_power_sums(hook_schur_psum(spec.k, spec.l), n);
        case Family::he: return he(spec.k, spec.l, n);
        case Family::e1e: return newton(1, n, -1) * newton(spec.k, n, -1);
        case Family::pkl: {
            AlgebraElement total(n);
            for (int b = spec.l; b <= spec.k; ++b) {
                const int sign = ((b - spec.l) % 2 == 0) ? 1 : -1;
                total += he(spec.k - b, b, n) * Poly(Integer(binomial(b, spec.l) * sign));
            }
            return total;
        }
        case Family::jack_p: throw std::invalid_argument("oracle: no group-algebra model for jack_p");
    }
    throw std::logic_error("evaluate: unknown family");
}

ClassExpansion class_expand(const AlgebraElement& x) {
    const SymmetricGroup& g = x.group();
    ClassExpansion out = ClassExpansion::zero(x.n());
    std::map<Partition, std::size_t> first;
    for (std::size_t r = 0; r < g.order(); ++r) {
        const Partition& type = g.cycle_type(r);
        auto [it, inserted] = first.emplace(type, r);
        if (inserted) {
            out.coeffs[type] = x.coeff_by_rank(r);
        } else if (x.coeff_by_rank(r) != x.coeff_by_rank(it->second)) {
            throw NonCentralError("class_expand: element is not central; " + g.element(it->second).to_string() + " and " +
                                  g.element(r).to_string() + " have cycle type (" + type.to_string() +
                                  ") but coefficients " + x.coeff_by_rank(it->second).to_string() + " and " +
                                  x.coeff_by_rank(r).to_string());
        }
    }
    return out;
}

ClassExpansion oracle_expansion(const SymFunSpec& spec, int n, bool force) {
    ClassExpansion e = class_expand(evaluate(spec, n, force));
    e.spec = spec;
    return e;
}

}  // namespace jmc
