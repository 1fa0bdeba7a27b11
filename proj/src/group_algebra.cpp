#include "jmc/group_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace jmc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("not a permutation in one-line form");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::out_of_range("transposition: bad indices");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(j - 1)]);
    return Permutation(std::move(im));
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(static_cast<std::size_t>(s.size()));
    for (int x = 1; x <= s.size(); ++x) im[static_cast<std::size_t>(x - 1)] = s(t(x));
    return Permutation(std::move(im));
}

Permutation class_representative(const Partition& mu) {
    // Cycles on consecutive blocks, shortest first: (1)(2)...(a a+1 ... b) gives
    // the lexicographically smallest one-line form.
    std::vector<int> im;
    std::vector<int> lengths(mu.parts().rbegin(), mu.parts().rend());
    int start = 1;
    for (int len : lengths) {
        for (int i = 0; i < len; ++i) im.push_back(start + (i + 1) % len);
        start += len;
    }
    return Permutation(std::move(im));
}

namespace {

std::size_t pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>((j - 1) * (j - 2) / 2 + (i - 1));
}

std::size_t lex_rank(const std::vector<int>& im) {
    const std::size_t n = im.size();
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (im[j] < im[i]) ++smaller;
        }
        r = r * (n - i) + smaller;
    }
    return r;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymmetricGroup: n must be positive");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    do {
        perms_.emplace_back(im);
        types_.push_back(perms_.back().cycle_type());
    } while (std::next_permutation(im.begin(), im.end()));

    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    right_.resize(perms_.size() * pairs);
    for (std::size_t r = 0; r < perms_.size(); ++r) {
        for (int j = 2; j <= n; ++j) {
            for (int i = 1; i < j; ++i) {
                std::vector<int> moved = perms_[r].images();
                std::swap(moved[static_cast<std::size_t>(i - 1)], moved[static_cast<std::size_t>(j - 1)]);
                right_[r * pairs + pair_index(i, j)] = static_cast<std::uint32_t>(lex_rank(moved));
            }
        }
    }
}

std::size_t SymmetricGroup::rank(const Permutation& p) const {
    if (p.size() != n_) throw std::invalid_argument("SymmetricGroup::rank: size mismatch");
    return lex_rank(p.images());
}

std::size_t SymmetricGroup::times_transposition(std::size_t r, int i, int j) const {
    const std::size_t pairs = static_cast<std::size_t>(n_ * (n_ - 1) / 2);
    return right_[r * pairs + pair_index(i, j)];
}

const SymmetricGroup& symmetric_group(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<SymmetricGroup>> groups;
    std::lock_guard lock(mutex);
    auto& slot = groups[n];
    if (!slot) slot = std::make_unique<SymmetricGroup>(n);
    return *slot;
}

AlgebraElement::AlgebraElement(int n) : n_(n), group_(&symmetric_group(n)), coeffs_(group_->order()) {}

AlgebraElement AlgebraElement::identity(int n) { return basis(Permutation::identity(n)); }

AlgebraElement AlgebraElement::basis(const Permutation& p, const Poly& coeff) {
    AlgebraElement x(p.size());
    x.add_term(p, coeff);
    return x;
}

const Poly& AlgebraElement::coeff(const Permutation& p) const { return coeffs_[group_->rank(p)]; }

void AlgebraElement::add_term(const Permutation& p, const Poly& c) { coeffs_[group_->rank(p)] += c; }

std::size_t AlgebraElement::support_size() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Poly& c) { return !c.is_zero(); }));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    if (other.n_ != n_) throw std::invalid_argument("AlgebraElement: size mismatch");
    for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += other.coeffs_[r];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    if (other.n_ != n_) throw std::invalid_argument("AlgebraElement: size mismatch");
    for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] -= other.coeffs_[r];
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Poly& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("AlgebraElement: size mismatch");
    const SymmetricGroup& g = *a.group_;
    AlgebraElement out(a.n_);
    std::vector<int> im(static_cast<std::size_t>(a.n_));
    for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
        if (a.coeffs_[x].is_zero()) continue;
        const auto& s = g.element(x).images();
        for (std::size_t y = 0; y < b.coeffs_.size(); ++y) {
            if (b.coeffs_[y].is_zero()) continue;
            const auto& t = g.element(y).images();
            for (std::size_t i = 0; i < im.size(); ++i) im[i] = s[static_cast<std::size_t>(t[i] - 1)];
            out.coeffs_[lex_rank(im)] += a.coeffs_[x] * b.coeffs_[y];
        }
    }
    return out;
}

AlgebraElement AlgebraElement::times_jm(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("times_jm: index out of range");
    AlgebraElement out(n_);
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        if (coeffs_[r].is_zero()) continue;
        for (int i = 1; i < j; ++i) out.coeffs_[group_->times_transposition(r, i, j)] += coeffs_[r];
    }
    return out;
}

AlgebraElement AlgebraElement::times_power_sum(int k) const {
    if (k < 1) throw std::invalid_argument("times_power_sum: k must be positive");
    AlgebraElement out(n_);
    for (int j = 2; j <= n_; ++j) {
        AlgebraElement x = *this;
        for (int step = 0; step < k; ++step) x = x.times_jm(j);
        out += x;
    }
    return out;
}

}  // namespace jmc
