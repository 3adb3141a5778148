#pragma once

// Integer partitions, their statistics, and symmetric-group characters.
//
// Characters are computed with the Murnaghan-Nakayama rule on beta-sets and
// sealed into one CharacterTable per weight. Tables live in a process-wide
// registry that is filled lazily and is safe to read from several threads.

#include "hecke/number.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke {

class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts and drops zero entries; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Multiplicity m_k of the part k.
    int multiplicity(int k) const noexcept {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
    }

    Partition conjugate() const {
        std::vector<int> out;
        if (!parts_.empty()) {
            for (int col = 1; col <= parts_.front(); ++col) {
                int h = 0;
                for (int p : parts_) h += (p >= col) ? 1 : 0;
                out.push_back(h);
            }
        }
        return Partition(std::move(out));
    }

    /// Each part multiplied by k.
    Partition scaled(int k) const {
        if (k <= 0) throw std::invalid_argument("partition scale factor must be positive");
        std::vector<int> out(parts_);
        for (int& p : out) p *= k;
        return Partition(std::move(out));
    }

    /// Multiset union, re-sorted.
    Partition joined(const Partition& other) const {
        std::vector<int> out(parts_);
        out.insert(out.end(), other.parts_.begin(), other.parts_.end());
        std::sort(out.begin(), out.end(), std::greater<>());
        return Partition(std::move(out));
    }

    /// Canonical text form "3+1+1"; the empty partition prints as "0".
    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += '+';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition parse(std::string_view text) {
        if (text.empty() || text == "0") return {};
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find('+', pos);
            auto tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
            if (tok.empty()) throw std::invalid_argument("malformed partition string");
            int v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw std::invalid_argument("malformed partition string");
                v = v * 10 + (c - '0');
            }
            parts.push_back(v);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

    bool operator==(const Partition&) const = default;

    /// Canonical repo-wide order: by weight, then reverse-lexicographic.
    std::strong_ordering operator<=>(const Partition& other) const {
        if (auto c = weight() <=> other.weight(); c != 0) return c;
        auto n = std::min(parts_.size(), other.parts_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (auto c = other.parts_[i] <=> parts_[i]; c != 0) return c;
        return parts_.size() <=> other.parts_.size();
    }

private:
    std::vector<int> parts_;
};

/// Hook (arm|leg) = (arm+1, 1^leg).
struct HookShape {
    int arm = 0;
    int leg = 0;

    int weight() const noexcept { return arm + leg + 1; }

    Partition to_partition() const {
        if (arm < 0 || leg < 0) throw std::invalid_argument("hook arm and leg must be nonnegative");
        std::vector<int> parts{arm + 1};
        parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
        return Partition(std::move(parts));
    }

    static std::optional<HookShape> from_partition(const Partition& p) {
        if (p.empty()) return std::nullopt;
        for (std::size_t i = 1; i < p.length(); ++i)
            if (p[i] != 1) return std::nullopt;
        return HookShape{p[0] - 1, static_cast<int>(p.length()) - 1};
    }

    bool operator==(const HookShape&) const = default;
};

/// All hooks of weight d, ordered by decreasing arm.
inline std::vector<HookShape> hooks_of(int d) {
    std::vector<HookShape> out;
    for (int arm = d - 1; arm >= 0; --arm) out.push_back(HookShape{arm, d - 1 - arm});
    return out;
}

namespace detail {

inline void enumerate_partitions(int remaining, int max_part, std::vector<int>& prefix,
                                 std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        enumerate_partitions(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

class PartitionRegistry {
public:
    static PartitionRegistry& global() {
        static PartitionRegistry instance;
        return instance;
    }

    const std::vector<Partition>& get(int n) {
        std::lock_guard lock(mutex_);
        auto it = lists_.find(n);
        if (it == lists_.end()) {
            auto list = std::make_unique<std::vector<Partition>>();
            std::vector<int> prefix;
            enumerate_partitions(n, n, prefix, *list);
            it = lists_.emplace(n, std::move(list)).first;
        }
        return *it->second;
    }

private:
    std::mutex mutex_;
    std::map<int, std::unique_ptr<const std::vector<Partition>>> lists_;
};

}  // namespace detail

/// All partitions of n in reverse-lexicographic order; [∅] for n = 0.
inline const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    return detail::PartitionRegistry::global().get(n);
}

/// z_mu = |Aut(mu)| * prod(mu_i).
inline BigInt z_mu(const Partition& mu) {
    BigInt r = 1;
    std::size_t i = 0;
    while (i < mu.length()) {
        std::size_t j = i;
        while (j < mu.length() && mu[j] == mu[i]) ++j;
        for (std::size_t k = 1; k <= j - i; ++k) r *= static_cast<long>(k) * mu[i];
        i = j;
    }
    return r;
}

/// kappa = sum_i lambda_i (lambda_i - 2i + 1), i counted from 1.
inline long kappa(const Partition& lambda) {
    long k = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        long l = lambda[i];
        k += l * (l - 2 * static_cast<long>(i + 1) + 1);
    }
    return k;
}

struct PartitionDivisibility {
    bool all_parts_divisible = false;  // "p | mu"
    std::optional<Partition> preimage;  // nu with mu = p nu, when divisible
    Partition scaled;                   // p mu
    int gcd = 0;                        // gcd of the parts, 0 for the empty partition
};

inline PartitionDivisibility partition_utils(const Partition& mu, int p) {
    if (p < 1) throw std::invalid_argument("partition_utils: p must be positive");
    PartitionDivisibility out;
    out.scaled = mu.scaled(p);
    out.all_parts_divisible = std::all_of(mu.begin(), mu.end(), [p](int k) { return k % p == 0; });
    for (int k : mu) out.gcd = std::gcd(out.gcd, k);
    if (out.all_parts_divisible) {
        std::vector<int> nu;
        for (int k : mu) nu.push_back(k / p);
        out.preimage = Partition(std::move(nu));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace detail {

/// Beta-set of lambda with exactly `len` beads, descending.
inline std::vector<int> beta_set(const Partition& lambda, std::size_t len) {
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) {
        int part = i < lambda.length() ? lambda[i] : 0;
        beta[i] = part + static_cast<int>(len - 1 - i);
    }
    return beta;
}

inline Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    const auto len = beta.size();
    for (std::size_t i = 0; i < len; ++i) {
        int part = beta[i] - static_cast<int>(len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

/// Memoized chi_lambda(mu) keyed by (lambda, mu); mu parts are stripped front to back.
class MurnaghanNakayama {
public:
    long operator()(const Partition& lambda, const Partition& mu) {
        if (lambda.weight() != mu.weight()) return 0;
        if (mu.empty()) return 1;
        auto key = std::make_pair(lambda, mu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int k = mu[0];
        Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        auto beta = beta_set(lambda, lambda.length());
        long total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            int target = beta[i] - k;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int b : beta)
                if (b > target && b < beta[i]) ++between;
            auto moved = beta;
            moved[i] = target;
            long sub = (*this)(from_beta_set(std::move(moved)), rest);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<Partition, Partition>, long> memo_;
};

}  // namespace detail

/// chi_lambda(mu) for every lambda, mu of a fixed weight n.
class CharacterTable {
public:
    explicit CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
        detail::MurnaghanNakayama mn;
        values_.resize(parts_.size() * parts_.size());
        for (std::size_t i = 0; i < parts_.size(); ++i)
            for (std::size_t j = 0; j < parts_.size(); ++j) values_[i * parts_.size() + j] = mn(parts_[i], parts_[j]);
        build_index();
    }

    /// Adopts externally supplied values (row = lambda, column = mu, canonical order).
    CharacterTable(int n, std::vector<long> values) : n_(n), parts_(partitions_of(n)), values_(std::move(values)) {
        if (values_.size() != parts_.size() * parts_.size())
            throw std::invalid_argument("character table has the wrong number of entries");
        build_index();
    }

    int weight() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }

    std::size_t index_of(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("partition " + p.to_string() + " has wrong weight");
        return it->second;
    }

    long at(std::size_t lambda_index, std::size_t mu_index) const { return values_[lambda_index * parts_.size() + mu_index]; }
    long operator()(const Partition& lambda, const Partition& mu) const { return at(index_of(lambda), index_of(mu)); }
    const std::vector<long>& raw() const noexcept { return values_; }

private:
    void build_index() {
        for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
    }

    int n_;
    std::vector<Partition> parts_;
    std::vector<long> values_;
    std::map<Partition, std::size_t> index_;
};

/// Build-once store of sealed tables. An optional loader (the disk cache) is
/// consulted before computing.
class CharacterRegistry {
public:
    using Loader = std::function<std::shared_ptr<const CharacterTable>(int)>;

    static CharacterRegistry& global() {
        static CharacterRegistry instance;
        return instance;
    }

    std::shared_ptr<const CharacterTable> table(int n) {
        std::lock_guard lock(mutex_);
        auto it = tables_.find(n);
        if (it != tables_.end()) return it->second;
        std::shared_ptr<const CharacterTable> t;
        if (loader_) t = loader_(n);
        if (!t) t = std::make_shared<const CharacterTable>(n);
        tables_.emplace(n, t);
        return t;
    }

    void set_loader(Loader loader) {
        std::lock_guard lock(mutex_);
        loader_ = std::move(loader);
    }

    void clear() {
        std::lock_guard lock(mutex_);
        tables_.clear();
    }

private:
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const CharacterTable>> tables_;
    Loader loader_;
};

/// chi_lambda(mu); zero when the weights differ.
inline long chi(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    thread_local std::vector<std::shared_ptr<const CharacterTable>> local;
    const auto n = static_cast<std::size_t>(lambda.weight());
    if (local.size() <= n) local.resize(n + 1);
    if (!local[n]) local[n] = CharacterRegistry::global().table(lambda.weight());
    return (*local[n])(lambda, mu);
}

}  // namespace hecke
