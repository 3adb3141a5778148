#pragma once

// Sparse Laurent polynomials in q and a with exact rational coefficients.
//
// q-exponents are reduced rationals (QExp) so that fractional twists
// q^{kappa m / d} can be represented; a-exponents are integers. Terms are
// kept sorted (a-exponent major, q-exponent minor) with no zero coefficients,
// which makes equality, hashing of reports and serialization canonical.

#include "hecke/combinatorics.hpp"
#include "hecke/errors.hpp"
#include "hecke/number.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke {

class QExp {
public:
    constexpr QExp() = default;
    constexpr QExp(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    QExp(long n, long d) : num_(n), den_(d) {
        if (d == 0) throw std::invalid_argument("QExp: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long num() const noexcept { return num_; }
    long den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    friend QExp operator+(QExp x, QExp y) { return QExp(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_); }
    friend QExp operator-(QExp x) { return QExp(-x.num_, x.den_); }
    friend QExp operator*(QExp x, long k) { return QExp(x.num_ * k, x.den_); }

    bool operator==(const QExp&) const = default;
    std::strong_ordering operator<=>(const QExp& o) const { return num_ * o.den_ <=> o.num_ * den_; }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long num_ = 0;
    long den_ = 1;
};

struct Monomial {
    int a = 0;
    QExp q;

    bool operator==(const Monomial&) const = default;
    std::strong_ordering operator<=>(const Monomial& o) const {
        if (auto c = a <=> o.a; c != 0) return c;
        return q <=> o.q;
    }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

class LaurentQA;

namespace detail {
LaurentQA from_sorted_unique(std::vector<Term> terms);
}

class LaurentQA {
public:
    LaurentQA() = default;
    LaurentQA(long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({{}, Rational(c)});
    }
    LaurentQA(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({{}, c});
    }

    static LaurentQA monomial(const Rational& c, QExp q_exp, int a_exp = 0) {
        LaurentQA f;
        if (c != 0) f.terms_.push_back({{a_exp, q_exp}, c});
        return f;
    }
    static LaurentQA q_pow(QExp e) { return monomial(1, e, 0); }
    static LaurentQA a_pow(int e) { return monomial(1, 0, e); }

    /// Builds from arbitrary terms; merges duplicates and drops zeros.
    static LaurentQA from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
            } else {
                if (!out.empty() && out.back().coeff == 0) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        return detail::from_sorted_unique(std::move(out));
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(QExp q_exp, int a_exp = 0) const {
        Monomial key{a_exp, q_exp};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, const Monomial& m) { return t.mono < m; });
        if (it != terms_.end() && it->mono == key) return it->coeff;
        return 0;
    }

    bool has_integer_q_exponents() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.q.is_integer(); });
    }
    bool is_q_only() const noexcept {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.a == 0; });
    }
    bool has_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.coeff); });
    }

    /// Distinct a-exponents, ascending.
    std::vector<int> a_exponents() const {
        std::vector<int> out;
        for (const auto& t : terms_)
            if (out.empty() || out.back() != t.mono.a) out.push_back(t.mono.a);
        return out;
    }

    /// The q-polynomial multiplying a^{a_exp}.
    LaurentQA a_slice(int a_exp) const {
        LaurentQA out;
        for (const auto& t : terms_)
            if (t.mono.a == a_exp) out.terms_.push_back({{0, t.mono.q}, t.coeff});
        return out;
    }

    LaurentQA operator-() const {
        LaurentQA out(*this);
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    friend LaurentQA operator+(const LaurentQA& x, const LaurentQA& y) { return merge(x, y, false); }
    friend LaurentQA operator-(const LaurentQA& x, const LaurentQA& y) { return merge(x, y, true); }
    LaurentQA& operator+=(const LaurentQA& y) { return *this = merge(*this, y, false); }
    LaurentQA& operator-=(const LaurentQA& y) { return *this = merge(*this, y, true); }

    friend LaurentQA operator*(const LaurentQA& x, const LaurentQA& y) { return multiply(x, y); }
    LaurentQA& operator*=(const LaurentQA& y) { return *this = multiply(*this, y); }

    friend LaurentQA operator*(const LaurentQA& x, const Rational& c) {
        if (c == 0) return {};
        LaurentQA out(x);
        for (auto& t : out.terms_) t.coeff *= c;
        return out;
    }
    friend LaurentQA operator*(const Rational& c, const LaurentQA& x) { return x * c; }
    friend LaurentQA operator/(const LaurentQA& x, const Rational& c) {
        if (c == 0) throw std::domain_error("LaurentQA: division by zero scalar");
        return x * (Rational(1) / c);
    }

    /// Multiplies by q^{qe} a^{ae}.
    LaurentQA shifted(QExp qe, int ae) const {
        LaurentQA out(*this);
        for (auto& t : out.terms_) {
            t.mono.q = t.mono.q + qe;
            t.mono.a += ae;
        }
        return out;
    }

    LaurentQA pow(int k) const {
        if (k < 0) throw std::invalid_argument("LaurentQA::pow: negative exponent");
        LaurentQA result(1), base(*this);
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    bool operator==(const LaurentQA& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
        return true;
    }

    /// Sorted "coeff * q^{n/d} * a^{m}" terms joined by " + "; zero prints as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += hecke::to_string(terms_[i].coeff);
            s += " * q^{" + terms_[i].mono.q.to_string() + "} * a^{" + std::to_string(terms_[i].mono.a) + "}";
        }
        return s;
    }

    static LaurentQA parse(std::string_view text);

private:
    friend LaurentQA detail::from_sorted_unique(std::vector<Term> terms);

    static LaurentQA merge(const LaurentQA& x, const LaurentQA& y, bool subtract) {
        LaurentQA out;
        out.terms_.reserve(x.terms_.size() + y.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < x.terms_.size() || j < y.terms_.size()) {
            if (j == y.terms_.size() || (i < x.terms_.size() && x.terms_[i].mono < y.terms_[j].mono)) {
                out.terms_.push_back(x.terms_[i++]);
            } else if (i == x.terms_.size() || y.terms_[j].mono < x.terms_[i].mono) {
                out.terms_.push_back({y.terms_[j].mono, subtract ? Rational(-y.terms_[j].coeff) : y.terms_[j].coeff});
                ++j;
            } else {
                Rational c = subtract ? Rational(x.terms_[i].coeff - y.terms_[j].coeff)
                                      : Rational(x.terms_[i].coeff + y.terms_[j].coeff);
                if (c != 0) out.terms_.push_back({x.terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    static LaurentQA multiply(const LaurentQA& x, const LaurentQA& y);

    std::vector<Term> terms_;
};

namespace detail {

inline LaurentQA from_sorted_unique(std::vector<Term> terms) {
    LaurentQA f;
    f.terms_ = std::move(terms);
    return f;
}

/// Dense buffer for one a-slice with integer q-exponents.
struct DenseSlice {
    long lo = 0;
    std::vector<Rational> c;
};

}  // namespace detail

inline LaurentQA LaurentQA::multiply(const LaurentQA& x, const LaurentQA& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.size() == 1 || y.size() == 1) {
        const auto& single = x.size() == 1 ? x : y;
        const auto& other = x.size() == 1 ? y : x;
        const auto& t = single.terms_.front();
        LaurentQA out = other.shifted(t.mono.q, t.mono.a);
        if (t.coeff != 1)
            for (auto& term : out.terms_) term.coeff *= t.coeff;
        return out;
    }

    if (x.has_integer_q_exponents() && y.has_integer_q_exponents()) {
        // Accumulate per a-exponent into dense q-buffers.
        std::map<int, detail::DenseSlice> acc;
        auto range = [](const LaurentQA& f, int a) {
            long lo = 0, hi = 0;
            bool first = true;
            for (const auto& t : f.terms_) {
                if (t.mono.a != a) continue;
                long e = t.mono.q.num();
                if (first || e < lo) lo = e;
                if (first || e > hi) hi = e;
                first = false;
            }
            return std::pair{lo, hi};
        };
        auto xa = x.a_exponents();
        auto ya = y.a_exponents();
        std::map<int, std::pair<long, long>> xr, yr;
        for (int a : xa) xr[a] = range(x, a);
        for (int a : ya) yr[a] = range(y, a);
        for (int a1 : xa)
            for (int a2 : ya) {
                long lo = xr[a1].first + yr[a2].first;
                long hi = xr[a1].second + yr[a2].second;
                auto [it, inserted] = acc.try_emplace(a1 + a2);
                auto& slice = it->second;
                if (inserted) {
                    slice.lo = lo;
                    slice.c.resize(static_cast<std::size_t>(hi - lo + 1));
                } else {
                    long old_hi = slice.lo + static_cast<long>(slice.c.size()) - 1;
                    long new_lo = std::min(lo, slice.lo), new_hi = std::max(hi, old_hi);
                    if (new_lo < slice.lo) {
                        slice.c.insert(slice.c.begin(), static_cast<std::size_t>(slice.lo - new_lo), Rational());
                        slice.lo = new_lo;
                    }
                    if (new_hi > old_hi) slice.c.resize(static_cast<std::size_t>(new_hi - slice.lo + 1));
                }
            }
        Rational prod;
        for (const auto& tx : x.terms_)
            for (const auto& ty : y.terms_) {
                auto& slice = acc[tx.mono.a + ty.mono.a];
                prod = tx.coeff;
                prod *= ty.coeff;
                slice.c[static_cast<std::size_t>(tx.mono.q.num() + ty.mono.q.num() - slice.lo)] += prod;
            }
        LaurentQA out;
        for (auto& [a, slice] : acc)
            for (std::size_t i = 0; i < slice.c.size(); ++i)
                if (slice.c[i] != 0) out.terms_.push_back({{a, QExp(slice.lo + static_cast<long>(i))}, std::move(slice.c[i])});
        return out;
    }

    std::vector<Term> prods;
    prods.reserve(x.size() * y.size());
    for (const auto& tx : x.terms_)
        for (const auto& ty : y.terms_)
            prods.push_back({{tx.mono.a + ty.mono.a, tx.mono.q + ty.mono.q}, tx.coeff * ty.coeff});
    return from_terms(std::move(prods));
}

inline LaurentQA LaurentQA::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\n')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "0" || text.empty()) return {};
    auto parse_braced = [&](std::string_view s, std::string_view prefix) -> std::string_view {
        s = trim(s);
        if (s.substr(0, prefix.size()) != prefix || s.back() != '}')
            throw std::invalid_argument("malformed Laurent term factor: " + std::string(s));
        return s.substr(prefix.size(), s.size() - prefix.size() - 1);
    };
    auto parse_long = [](std::string_view s) {
        std::size_t used = 0;
        long v = std::stol(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("malformed integer: " + std::string(s));
        return v;
    };
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find(" + ", pos);
        auto tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        auto s1 = tok.find(" * ");
        auto s2 = s1 == std::string_view::npos ? s1 : tok.find(" * ", s1 + 3);
        if (s2 == std::string_view::npos) throw std::invalid_argument("malformed Laurent term: " + std::string(tok));
        Rational c = parse_rational(tok.substr(0, s1));
        auto qs = parse_braced(tok.substr(s1 + 3, s2 - s1 - 3), "q^{");
        auto as = parse_braced(tok.substr(s2 + 3), "a^{");
        QExp qe;
        if (auto slash = qs.find('/'); slash != std::string_view::npos)
            qe = QExp(parse_long(qs.substr(0, slash)), parse_long(qs.substr(slash + 1)));
        else
            qe = QExp(parse_long(qs));
        terms.push_back({{static_cast<int>(parse_long(as)), qe}, c});
        if (next == std::string_view::npos) break;
        pos = next + 3;
    }
    return LaurentQA::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Quantum brackets

/// {n} = q^n - q^{-n}.
inline LaurentQA qbracket(long n) {
    if (n == 0) return {};
    return LaurentQA::q_pow(n) - LaurentQA::q_pow(-n);
}

/// {n}_a = a^n - a^{-n}.
inline LaurentQA abracket(int n) {
    if (n == 0) return {};
    return LaurentQA::a_pow(n) - LaurentQA::a_pow(-n);
}

/// Q_n(q^k) = sum_{j=0}^{n-1} q^{k(n-1-2j)}; equals {nk}/{k}. Built as an explicit sum.
inline LaurentQA qnum_at_power(int n, long k) {
    if (n < 1) throw std::invalid_argument("qnum: n must be positive");
    std::vector<Term> terms;
    for (int j = n - 1; j >= 0; --j) terms.push_back({{0, QExp(k * (n - 1 - 2 * j))}, Rational(1)});
    return LaurentQA::from_terms(std::move(terms));
}

/// [n] = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}.
inline LaurentQA qnum(int n) { return qnum_at_power(n, 1); }

/// Same as qnum but in the variable a.
inline LaurentQA anum(int n) {
    if (n < 1) throw std::invalid_argument("anum: n must be positive");
    LaurentQA out;
    for (int j = 0; j < n; ++j) out += LaurentQA::a_pow(n - 1 - 2 * j);
    return out;
}

/// {c mu} = prod_i {c mu_i}.
inline LaurentQA bracket_of_partition(const Partition& mu, long c = 1) {
    if (c == 0) throw std::invalid_argument("bracket_of_partition: c must be nonzero");
    LaurentQA out(1);
    for (int part : mu) out *= qbracket(c * part);
    return out;
}

/// {c mu}_a = prod_i {c mu_i}_a.
inline LaurentQA abracket_of_partition(const Partition& mu, int c = 1) {
    if (c == 0) throw std::invalid_argument("abracket_of_partition: c must be nonzero");
    LaurentQA out(1);
    for (int part : mu) out *= abracket(c * part);
    return out;
}

/// Adams operator: f(q, a) -> f(q^d, a^d).
inline LaurentQA adams(const LaurentQA& f, int d) {
    if (d < 1) throw std::invalid_argument("adams: d must be positive");
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) terms.push_back({{t.mono.a * d, t.mono.q * d}, t.coeff});
    return detail::from_sorted_unique(std::move(terms));
}

/// f(q^-1, a^-1).
inline LaurentQA invert_variables(const LaurentQA& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) terms.push_back({{-t.mono.a, -t.mono.q}, t.coeff});
    return LaurentQA::from_terms(std::move(terms));
}

/// f(-q, a) for integer q-exponents.
inline LaurentQA negate_q(const LaurentQA& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (!t.mono.q.is_integer()) throw std::invalid_argument("negate_q: fractional exponent");
        terms.push_back({t.mono, (t.mono.q.num() % 2 == 0) ? t.coeff : Rational(-t.coeff)});
    }
    return detail::from_sorted_unique(std::move(terms));
}

/// Collapses a-exponents (a -> 1). Result is q-only.
inline LaurentQA substitute_a(const LaurentQA& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) terms.push_back({{0, t.mono.q}, t.coeff});
    return LaurentQA::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Exact division

struct DivisionResult {
    LaurentQA quotient;
    LaurentQA remainder;
    bool exact() const noexcept { return remainder.is_zero(); }
};

namespace detail {

/// Long division of one dense slice by a sparse univariate divisor given as
/// (offset from its lowest exponent, coeff) pairs of degree `deg`.
inline void divide_slice(DenseSlice& r, std::span<const std::pair<long, Rational>> divisor, long deg,
                         const Rational& lead, long divisor_lo, int a_exp, std::vector<Term>& quotient,
                         std::vector<Term>& remainder) {
    const long n = static_cast<long>(r.c.size()) - 1;
    Rational t;
    std::vector<Term> qterms;
    for (long i = n; i >= deg; --i) {
        auto& ri = r.c[static_cast<std::size_t>(i)];
        if (ri == 0) continue;
        t = ri / lead;
        for (const auto& [off, c] : divisor) r.c[static_cast<std::size_t>(i - deg + off)] -= t * c;
        qterms.push_back({{a_exp, QExp(r.lo + i - deg - divisor_lo)}, t});
    }
    std::reverse(qterms.begin(), qterms.end());
    for (auto& qt : qterms) quotient.push_back(std::move(qt));
    for (long i = 0; i < std::min(deg, n + 1); ++i)
        if (r.c[static_cast<std::size_t>(i)] != 0)
            remainder.push_back({{a_exp, QExp(r.lo + i)}, std::move(r.c[static_cast<std::size_t>(i)])});
}

}  // namespace detail

/// Per a-exponent long division of f by a q-only divisor (integer exponents).
/// Satisfies f = quotient * g + remainder with each remainder slice of lower
/// q-degree span than g.
inline DivisionResult divmod_q(const LaurentQA& f, const LaurentQA& g) {
    if (g.is_zero()) throw std::domain_error("divmod_q: division by zero");
    if (!g.is_q_only()) throw std::invalid_argument("divmod_q: divisor must not depend on a");
    if (!g.has_integer_q_exponents() || !f.has_integer_q_exponents())
        throw std::invalid_argument("divmod_q: fractional q-exponents");
    const long glo = g.terms().front().mono.q.num();
    const long ghi = g.terms().back().mono.q.num();
    const Rational lead = g.terms().back().coeff;
    std::vector<std::pair<long, Rational>> divisor;
    for (const auto& t : g.terms()) divisor.emplace_back(t.mono.q.num() - glo, t.coeff);

    std::vector<Term> quotient, remainder;
    const auto& ft = f.terms();
    std::size_t i = 0;
    while (i < ft.size()) {
        std::size_t j = i;
        while (j < ft.size() && ft[j].mono.a == ft[i].mono.a) ++j;
        detail::DenseSlice slice;
        slice.lo = ft[i].mono.q.num();
        slice.c.resize(static_cast<std::size_t>(ft[j - 1].mono.q.num() - slice.lo + 1));
        for (std::size_t k = i; k < j; ++k) slice.c[static_cast<std::size_t>(ft[k].mono.q.num() - slice.lo)] = ft[k].coeff;
        detail::divide_slice(slice, divisor, ghi - glo, lead, glo, ft[i].mono.a, quotient, remainder);
        i = j;
    }
    return {detail::from_sorted_unique(std::move(quotient)), detail::from_sorted_unique(std::move(remainder))};
}

/// Exact quotient f / g or NonExactDivision naming the first failing a-exponent.
inline LaurentQA divide_exact_q(const LaurentQA& f, const LaurentQA& g) {
    auto r = divmod_q(f, g);
    if (!r.exact()) {
        int a = r.remainder.terms().front().mono.a;
        throw NonExactDivision(a, r.remainder.a_slice(a).to_string());
    }
    return std::move(r.quotient);
}

/// Division by (a - a^-1) for each q-exponent slice: f = quotient * (a - a^-1) + remainder.
inline DivisionResult divmod_abracket(const LaurentQA& f) {
    // Regroup by q-exponent, then synthetic division by a^2 - 1 from the top a-degree.
    std::map<QExp, std::map<int, Rational>> by_q;
    for (const auto& t : f.terms()) by_q[t.mono.q][t.mono.a] = t.coeff;
    std::vector<Term> quotient, remainder;
    for (auto& [qe, slice] : by_q) {
        // Dividing sum c_k a^k by (a - a^-1) = a^-1 (a^2 - 1).
        while (!slice.empty()) {
            auto top = std::prev(slice.end());
            if (top->second == 0) {
                slice.erase(top);
                continue;
            }
            int k = top->first;
            int low = slice.begin()->first;
            if (k - 2 < low) break;
            Rational c = top->second;
            quotient.push_back({{k - 1, qe}, c});  // c a^{k-1} (a - a^-1) = c a^k - c a^{k-2}
            slice.erase(top);
            slice[k - 2] += c;
        }
        for (auto& [ae, c] : slice)
            if (c != 0) remainder.push_back({{ae, qe}, c});
    }
    return {LaurentQA::from_terms(std::move(quotient)), LaurentQA::from_terms(std::move(remainder))};
}

/// Exact quotient f / (a - a^-1) or NotDivisible with the remainder.
inline LaurentQA divide_out_abracket(const LaurentQA& f) {
    auto r = divmod_abracket(f);
    if (!r.exact()) throw NotDivisible(r.remainder.to_string());
    return std::move(r.quotient);
}

}  // namespace hecke
