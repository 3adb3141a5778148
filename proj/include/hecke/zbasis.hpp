#pragma once

// The subring Q[z^2, a^+-1] of Laurent polynomials, z^2 = q^2 - 2 + q^-2.
//
// Membership is structural: every a-slice must have even integer q-exponents
// and be palindromic under q <-> q^-1. Conversion uses the monic integer
// recursion E_0 = 2, E_1 = w, E_k = w E_{k-1} - E_{k-2} with w = z^2 + 2 and
// q^{2k} + q^{-2k} = E_k(w). Division by [p]^2 happens in the z^2 basis where
// [p]^2 is monic of degree p - 1, so integrality of quotients is read off
// coefficient by coefficient.

#include "hecke/errors.hpp"
#include "hecke/laurent.hpp"
#include "hecke/number.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

/// Element of Q[z^2, a^+-1]: a-exponent -> coefficients of (z^2)^0, (z^2)^1, ...
class ZAPoly {
public:
    using Coeffs = std::vector<Rational>;

    ZAPoly() = default;
    explicit ZAPoly(std::map<int, Coeffs> slices) : slices_(std::move(slices)) { normalize(); }

    static ZAPoly constant(const Rational& c) { return ZAPoly({{0, Coeffs{c}}}); }

    const std::map<int, Coeffs>& slices() const noexcept { return slices_; }
    bool is_zero() const noexcept { return slices_.empty(); }

    /// True iff every coefficient is an integer.
    bool is_integral() const {
        for (const auto& [a, cs] : slices_)
            for (const auto& c : cs)
                if (!is_integer(c)) return false;
        return true;
    }

    /// Highest z^2-power present; -1 for zero.
    int z2_degree() const noexcept {
        int deg = -1;
        for (const auto& [a, cs] : slices_) deg = std::max(deg, static_cast<int>(cs.size()) - 1);
        return deg;
    }

    /// Lowest z^2-power with a nonzero coefficient; -1 for zero.
    int min_z2_degree() const {
        int best = -1;
        for (const auto& [a, cs] : slices_)
            for (std::size_t k = 0; k < cs.size(); ++k)
                if (cs[k] != 0) {
                    if (best < 0 || static_cast<int>(k) < best) best = static_cast<int>(k);
                    break;
                }
        return best;
    }

    /// Back to a Laurent polynomial in q and a.
    LaurentQA to_laurent() const {
        const auto y = LaurentQA::q_pow(2) - LaurentQA(2) + LaurentQA::q_pow(-2);
        LaurentQA out;
        std::vector<LaurentQA> powers{LaurentQA(1)};
        for (const auto& [a, cs] : slices_) {
            while (powers.size() < cs.size()) powers.push_back(powers.back() * y);
            LaurentQA slice;
            for (std::size_t k = 0; k < cs.size(); ++k)
                if (cs[k] != 0) slice += powers[k] * cs[k];
            out += slice.shifted(0, a);
        }
        return out;
    }

    friend ZAPoly operator+(const ZAPoly& x, const ZAPoly& y) {
        auto out = x.slices_;
        for (const auto& [a, cs] : y.slices_) {
            auto& target = out[a];
            if (target.size() < cs.size()) target.resize(cs.size());
            for (std::size_t k = 0; k < cs.size(); ++k) target[k] += cs[k];
        }
        return ZAPoly(std::move(out));
    }

    bool operator==(const ZAPoly&) const = default;

    std::string to_string() const {
        if (slices_.empty()) return "0";
        std::string s;
        for (const auto& [a, cs] : slices_) {
            if (!s.empty()) s += "; ";
            s += "a^" + std::to_string(a) + ": [";
            for (std::size_t k = 0; k < cs.size(); ++k) s += (k ? ", " : "") + hecke::to_string(cs[k]);
            s += "]";
        }
        return s;
    }

private:
    void normalize() {
        for (auto it = slices_.begin(); it != slices_.end();) {
            auto& cs = it->second;
            while (!cs.empty() && cs.back() == 0) cs.pop_back();
            it = cs.empty() ? slices_.erase(it) : std::next(it);
        }
    }

    std::map<int, Coeffs> slices_;
};

namespace detail {

/// E_k(w) expressed in y = z^2 (w = y + 2), k = 0..k_max, integer coefficients.
inline std::vector<std::vector<BigInt>> dickson_in_z2(int k_max) {
    std::vector<std::vector<BigInt>> e;
    e.push_back({BigInt(2)});
    if (k_max >= 1) e.push_back({BigInt(2), BigInt(1)});
    for (int k = 2; k <= k_max; ++k) {
        const auto& prev = e[static_cast<std::size_t>(k - 1)];
        const auto& prev2 = e[static_cast<std::size_t>(k - 2)];
        std::vector<BigInt> next(prev.size() + 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i + 1] += prev[i];      // y * E_{k-1}
            next[i] += 2 * prev[i];      // 2 * E_{k-1}
        }
        for (std::size_t i = 0; i < prev2.size(); ++i) next[i] -= prev2[i];
        e.push_back(std::move(next));
    }
    return e;
}

}  // namespace detail

/// Converts to the z^2 basis or throws NotInSubring naming the violated symmetry.
inline ZAPoly to_z2(const LaurentQA& f) {
    std::map<int, std::map<long, Rational>> slices;
    long max_half = 0;
    for (const auto& t : f.terms()) {
        if (!t.mono.q.is_integer()) throw NotInSubring(NotInSubring::Reason::FractionalExponent, t.mono.a);
        long e = t.mono.q.num();
        if (e % 2 != 0) throw NotInSubring(NotInSubring::Reason::OddExponent, t.mono.a);
        slices[t.mono.a][e] = t.coeff;
        max_half = std::max(max_half, e < 0 ? -e / 2 : e / 2);
    }
    for (const auto& [a, slice] : slices)
        for (const auto& [e, c] : slice) {
            auto mirror = slice.find(-e);
            if (mirror == slice.end() || mirror->second != c)
                throw NotInSubring(NotInSubring::Reason::NotPalindromic, a);
        }

    const auto dickson = detail::dickson_in_z2(static_cast<int>(max_half));
    std::map<int, ZAPoly::Coeffs> out;
    for (const auto& [a, slice] : slices) {
        ZAPoly::Coeffs cs;
        for (const auto& [e, c] : slice) {
            if (e < 0) continue;
            if (e == 0) {
                if (cs.empty()) cs.resize(1);
                cs[0] += c;
                continue;
            }
            const auto& ek = dickson[static_cast<std::size_t>(e / 2)];
            if (cs.size() < ek.size()) cs.resize(ek.size());
            for (std::size_t i = 0; i < ek.size(); ++i) cs[i] += c * ek[i];
        }
        out.emplace(a, std::move(cs));
    }
    return ZAPoly(std::move(out));
}

/// Non-throwing membership test.
inline bool in_z2_ring(const LaurentQA& f) {
    try {
        (void)to_z2(f);
        return true;
    } catch (const NotInSubring&) {
        return false;
    }
}

/// [p]^2 in the z^2 basis; monic of degree p - 1.
inline ZAPoly::Coeffs qnum_sq_in_z2(int p) {
    auto z = to_z2(qnum(p) * qnum(p));
    return z.slices().at(0);
}

struct Z2Division {
    ZAPoly quotient;
    ZAPoly remainder;
    bool exact = false;
};

/// Per a-slice division by [p]^2 in Q[z^2]. Inexactness is reported, not thrown.
inline Z2Division divide_by_qnum_sq(const ZAPoly& f, int p) {
    if (p < 1) throw std::invalid_argument("divide_by_qnum_sq: p must be positive");
    const auto divisor = qnum_sq_in_z2(p);
    const std::size_t deg = divisor.size() - 1;  // monic
    std::map<int, ZAPoly::Coeffs> quot, rem;
    for (const auto& [a, cs] : f.slices()) {
        ZAPoly::Coeffs r = cs;
        ZAPoly::Coeffs qt;
        if (r.size() > deg) {
            qt.resize(r.size() - deg);
            for (std::size_t i = r.size(); i-- > deg;) {
                if (r[i] == 0) continue;
                Rational c = r[i];
                qt[i - deg] = c;
                for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * divisor[j];
            }
        }
        r.resize(std::min(r.size(), deg));
        quot.emplace(a, std::move(qt));
        rem.emplace(a, std::move(r));
    }
    Z2Division out{ZAPoly(std::move(quot)), ZAPoly(std::move(rem)), false};
    out.exact = out.remainder.is_zero();
    return out;
}

/// Outcome of "f in [p]^2 Z[z^2, a^+-1]".
struct CongruenceFragment {
    bool z2_member = false;     // f in Q[z^2, a^+-1]
    bool integral = false;      // f in Z[z^2, a^+-1]
    bool divisible = false;     // [p]^2 | f with integral quotient
    std::optional<ZAPoly> quotient;
    std::optional<ZAPoly> remainder_witness;
    std::string detail;         // why membership failed, if it did

    bool pass() const noexcept { return z2_member && integral && divisible; }
};

inline CongruenceFragment congruence_verdict(const LaurentQA& f, int p) {
    CongruenceFragment out;
    ZAPoly zf;
    try {
        zf = to_z2(f);
    } catch (const NotInSubring& e) {
        out.detail = e.what();
        return out;
    }
    out.z2_member = true;
    out.integral = zf.is_integral();
    auto div = divide_by_qnum_sq(zf, p);
    if (div.exact) {
        out.divisible = div.quotient.is_integral();
        out.quotient = std::move(div.quotient);
        if (!out.divisible) out.detail = "quotient is not integral";
    } else {
        out.remainder_witness = std::move(div.remainder);
        out.detail = "nonzero remainder modulo [p]^2";
    }
    if (!out.integral && out.detail.empty()) out.detail = "coefficients are not integral";
    return out;
}

}  // namespace hecke
