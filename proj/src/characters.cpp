#include "jmc/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace jmc {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Partition, Partition>& p) const noexcept {
        return PartitionHash{}(p.first) * 31U ^ PartitionHash{}(p.second);
    }
};

using Memo = std::unordered_map<std::pair<Partition, Partition>, Integer, PairHash>;

// Beta-set of λ with length(λ) entries: λ_i + l - i, strictly decreasing.
std::vector<int> beta_set(const Partition& lambda) {
    const int l = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + l - 1 - i;
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (l - 1 - i));
    return Partition(std::move(parts));
}

Integer mn_rec(const Partition& lambda, const Partition& mu, Memo& memo) {
    if (mu.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Strip a rim hook of the largest part of μ.
    const int r = mu.largest_part();
    const Partition rest = *mu.without_part(r);
    const std::vector<int> beta = beta_set(lambda);
    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) ++between;
        }
        std::vector<int> moved = beta;
        moved[i] = target;
        const Integer sub = mn_rec(from_beta(std::move(moved)), rest, memo);
        if (between % 2 == 0) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw std::invalid_argument("mn_character: weight mismatch");
    thread_local Memo memo;
    return mn_rec(lambda, mu, memo);
}

Integer dimension(const Partition& lambda) {
    const int n = lambda.weight();
    const Integer by_hooks = factorial(n) / lambda.hook_product();

    const std::vector<int> ell = beta_set(lambda);
    Integer num = factorial(n);
    Integer den = 1;
    for (std::size_t i = 0; i < ell.size(); ++i) {
        den *= factorial(ell[i]);
        for (std::size_t j = i + 1; j < ell.size(); ++j) num *= ell[i] - ell[j];
    }
    if (num % den != 0 || num / den != by_hooks) {
        throw std::logic_error("dimension: hook and product formulas disagree for " + lambda.to_string());
    }
    return by_hooks;
}

Rational central_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw std::invalid_argument("central_character: weight mismatch");
    Rational theta(factorial(mu.weight()) * mn_character(lambda, mu), mu.z_order() * dimension(lambda));
    theta.canonicalize();
    return theta;
}

Integer content_power_sum(const Partition& lambda, int k) {
    if (k < 0) throw std::invalid_argument("content_power_sum: negative exponent");
    Integer sum = 0;
    for (int c : lambda.contents()) {
        Integer term;
        mpz_pow_ui(term.get_mpz_t(), Integer(c).get_mpz_t(), static_cast<unsigned long>(k));
        sum += term;
    }
    return sum;
}

CharTable::CharTable(int n) : n_(n), parts_(partitions_of(n)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
    values_.resize(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        values_[i].reserve(parts_.size());
        for (const auto& mu : parts_) values_[i].push_back(mn_character(parts_[i], mu));
    }
}

std::size_t CharTable::index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("CharTable: " + p.to_string() + " is not a partition of " + std::to_string(n_));
    return it->second;
}

const Integer& CharTable::at(const Partition& lambda, const Partition& mu) const {
    return values_[index(lambda)][index(mu)];
}

const CharTable& char_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[n];
    if (!slot) slot = std::make_unique<CharTable>(n);
    return *slot;
}

}  // namespace jmc
