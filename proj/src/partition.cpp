#include "jmc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace jmc {

namespace {

void normalize(std::vector<int>& parts, int& weight) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    weight = 0;
    for (int p : parts) weight += p;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(parts_, weight_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(parts_, weight_); }

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value <= 0) {
            throw std::invalid_argument("bad partition text: '" + std::string(text) + "'");
        }
        parts.push_back(value);
        pos = end + 1;
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
        throw std::invalid_argument("partition parts must be weakly decreasing: '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::conjugate() const {
    std::vector<int> conj(static_cast<std::size_t>(largest_part()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

mpz_class Partition::z_order() const {
    mpz_class z = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        const int m = static_cast<int>(j - i);
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts_[i]), static_cast<unsigned long>(m));
        z *= power * factorial(m);
        i = j;
    }
    return z;
}

mpz_class Partition::hook_product() const {
    const Partition conj = conjugate();
    mpz_class h = 1;
    for (int i = 0; i < length(); ++i) {
        for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j) {
            h *= parts_[static_cast<std::size_t>(i)] + conj[static_cast<std::size_t>(j)] - i - j - 1;
        }
    }
    return h;
}

std::vector<int> Partition::contents() const {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(weight_));
    for (int i = 0; i < length(); ++i) {
        for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j) c.push_back(j - i);
    }
    return c;
}

std::optional<Partition> Partition::add_corner(int i) const {
    if (i < 1 || i > length() + 1) throw std::out_of_range("add_corner: row index out of range");
    std::vector<int> parts = parts_;
    if (i == length() + 1) {
        parts.push_back(1);
    } else {
        ++parts[static_cast<std::size_t>(i - 1)];
    }
    if (i >= 2 && parts[static_cast<std::size_t>(i - 1)] > parts[static_cast<std::size_t>(i - 2)]) return std::nullopt;
    return Partition(std::move(parts));
}

std::optional<Partition> Partition::remove_corner(int i) const {
    if (i < 1 || i > length()) throw std::out_of_range("remove_corner: row index out of range");
    std::vector<int> parts = parts_;
    --parts[static_cast<std::size_t>(i - 1)];
    if (i < length() && parts[static_cast<std::size_t>(i - 1)] < parts[static_cast<std::size_t>(i)]) return std::nullopt;
    return Partition(std::move(parts));
}

Partition Partition::reduce() const {
    std::vector<int> parts;
    for (int p : parts_) {
        if (p != 1) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Partition Partition::pad(int n) const {
    if (n < weight_) throw std::invalid_argument("pad: target weight below partition weight");
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), static_cast<std::size_t>(n - weight_), 1);
    return Partition(std::move(parts));
}

std::optional<Partition> Partition::replace(std::initializer_list<int> removed,
                                            std::initializer_list<int> added) const {
    std::vector<int> parts = parts_;
    for (int r : removed) {
        auto it = std::find(parts.begin(), parts.end(), r);
        if (it == parts.end()) return std::nullopt;
        parts.erase(it);
    }
    parts.insert(parts.end(), added.begin(), added.end());
    return Partition(std::move(parts));
}

Partition Partition::with_part(int part) const {
    std::vector<int> parts = parts_;
    parts.push_back(part);
    return Partition(std::move(parts));
}

std::optional<Partition> Partition::without_part(int part) const { return replace({part}, {}); }

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    // Each step finds the rightmost part > 1, decrements it, and refills the
    // tail greedily with parts no larger than the decremented value.
    std::vector<int> a;
    if (n > 0) a.push_back(n);
    out.emplace_back(a);
    while (true) {
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        const int v = --a.back();
        int rest = ones + 1;
        while (rest > 0) {
            const int take = std::min(v, rest);
            a.push_back(take);
            rest -= take;
        }
        out.emplace_back(a);
    }
    return out;
}

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace jmc
