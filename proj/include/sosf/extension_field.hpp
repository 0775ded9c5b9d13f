#ifndef SOSF_EXTENSION_FIELD_HPP
#define SOSF_EXTENSION_FIELD_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "sosf/errors.hpp"
#include "sosf/prime_field.hpp"

namespace sosf {

namespace detail {

/// Dense univariate polynomials over F_p, constant term first, used only to
/// implement extension-field arithmetic and the irreducibility tests.
using FpPoly = std::vector<u64>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<u128>(a[i]) * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

/// Remainder of a modulo the monic polynomial m.
inline FpPoly fp_mod(FpPoly a, const FpPoly& m, u64 p) {
    fp_trim(a);
    const int dm = fp_deg(m);
    while (fp_deg(a) >= dm) {
        u64 lead = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            u64 sub = mulmod_u64(lead, m[i], p);
            u64& c = a[shift + i];
            c = (c >= sub) ? c - sub : c + p - sub;
        }
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // make b monic so fp_mod applies
        u64 inv = powmod_u64(b.back(), p - 2, p);
        FpPoly bm = b;
        for (auto& c : bm) c = mulmod_u64(c, inv, p);
        a = fp_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    fp_trim(a);
    return a;
}

/// t^(p^e) mod m, by e rounds of p-th powering.
inline FpPoly fp_pow_frobenius(const FpPoly& m, u64 p, unsigned e) {
    FpPoly x = fp_mod({0, 1}, m, p);
    for (unsigned round = 0; round < e; ++round) {
        // x <- x^p mod m by square and multiply
        FpPoly r = {1};
        FpPoly base = x;
        u64 exp = p;
        while (exp > 0) {
            if (exp & 1) r = fp_mod(fp_mul(r, base, p), m, p);
            base = fp_mod(fp_mul(base, base, p), m, p);
            exp >>= 1;
        }
        x = std::move(r);
    }
    return x;
}

inline bool fp_is_monic(const FpPoly& f) { return !f.empty() && f.back() == 1; }

/// Irreducibility of a monic polynomial of degree k >= 1 over F_p.
/// Exhaustive trial division for k <= 8, Rabin's distinct-degree test above.
inline bool fp_irreducible(const FpPoly& f, u64 p) {
    const int k = fp_deg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    if (f[0] == 0) return false; // divisible by t
    if (k <= 8) {
        // trial division by every monic divisor candidate of degree <= k/2
        for (int d = 1; 2 * d <= k; ++d) {
            FpPoly cand(static_cast<std::size_t>(d) + 1, 0);
            cand[d] = 1;
            u64 total = 1;
            for (int i = 0; i < d; ++i) total *= p;
            for (u64 code = 0; code < total; ++code) {
                u64 c = code;
                for (int i = 0; i < d; ++i) { cand[i] = c % p; c /= p; }
                if (fp_mod(f, cand, p).empty()) return false;
            }
        }
        return true;
    }
    // x^(p^k) == x mod f, and gcd(x^(p^(k/q)) - x, f) == 1 for prime q | k
    FpPoly xk = fp_pow_frobenius(f, p, static_cast<unsigned>(k));
    FpPoly x = fp_mod({0, 1}, f, p);
    if (xk != x) return false;
    for (int q = 2; q <= k; ++q) {
        if (k % q != 0) continue;
        bool q_prime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) { q_prime = false; break; }
        if (!q_prime) continue;
        FpPoly xe = fp_pow_frobenius(f, p, static_cast<unsigned>(k / q));
        // xe - x
        FpPoly diff = xe;
        if (diff.size() < x.size()) diff.resize(x.size(), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            diff[i] = (diff[i] >= x[i]) ? diff[i] - x[i] : diff[i] + p - x[i];
        fp_trim(diff);
        FpPoly g = fp_gcd(f, diff, p);
        if (fp_deg(g) != 0) return false;
    }
    return true;
}

struct ExtFieldRep {
    u64 p;
    unsigned k;
    FpPoly modulus; // monic irreducible of degree k, coefficients c0..ck

    bool operator==(const ExtFieldRep& o) const {
        return p == o.p && k == o.k && modulus == o.modulus;
    }
};

} // namespace detail

class ExtensionField;

/// Element of F_{p^k}: a residue polynomial of degree < k, stored as k
/// coefficients over F_p, constant term first.
class FqElement {
public:
    FqElement() = default;

    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t modulus_p() const { return rep_->p; }

    bool is_zero() const {
        for (auto c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    FqElement operator-() const {
        FqElement r = *this;
        for (auto& c : r.c_) c = (c == 0) ? 0 : rep_->p - c;
        return r;
    }

    FqElement operator+(const FqElement& o) const {
        check(o);
        FqElement r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r.c_[i] += o.c_[i];
            if (r.c_[i] >= rep_->p) r.c_[i] -= rep_->p;
        }
        return r;
    }

    FqElement operator-(const FqElement& o) const { return *this + (-o); }

    FqElement operator*(const FqElement& o) const {
        check(o);
        detail::FpPoly prod = detail::fp_mul(trimmed(), o.trimmed(), rep_->p);
        return from_poly(detail::fp_mod(std::move(prod), rep_->modulus, rep_->p), rep_);
    }

    FqElement operator/(const FqElement& o) const { return *this * o.inverse(); }

    FqElement& operator+=(const FqElement& o) { return *this = *this + o; }
    FqElement& operator-=(const FqElement& o) { return *this = *this - o; }
    FqElement& operator*=(const FqElement& o) { return *this = *this * o; }

    FqElement inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero in F_{p^k}");
        // extended Euclid in F_p[t] against the modulus
        const auto p = rep_->p;
        detail::FpPoly r0 = rep_->modulus, r1 = trimmed();
        detail::FpPoly s0 = {}, s1 = {1};
        while (!r1.empty()) {
            // divide r0 by r1: make r1 monic, long division keeping quotient
            detail::u64 lead_inv = detail::powmod_u64(r1.back(), p - 2, p);
            detail::FpPoly q;
            detail::FpPoly rem = r0;
            detail::fp_trim(rem);
            while (detail::fp_deg(rem) >= detail::fp_deg(r1)) {
                std::size_t shift = rem.size() - r1.size();
                detail::u64 factor = detail::mulmod_u64(rem.back(), lead_inv, p);
                if (q.size() < shift + 1) q.resize(shift + 1, 0);
                q[shift] = (q[shift] + factor) % p;
                for (std::size_t i = 0; i < r1.size(); ++i) {
                    detail::u64 sub = detail::mulmod_u64(factor, r1[i], p);
                    detail::u64& c = rem[shift + i];
                    c = (c >= sub) ? c - sub : c + p - sub;
                }
                detail::fp_trim(rem);
            }
            // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
            detail::FpPoly qs = detail::fp_mul(q, s1, p);
            detail::FpPoly s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
            for (std::size_t i = 0; i < qs.size(); ++i)
                s2[i] = (s2[i] >= qs[i]) ? s2[i] - qs[i] : s2[i] + p - qs[i];
            detail::fp_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is now gcd = nonzero constant; divide s0 by it
        detail::u64 scale = detail::powmod_u64(r0[0], p - 2, p);
        for (auto& c : s0) c = detail::mulmod_u64(c, scale, p);
        return from_poly(detail::fp_mod(std::move(s0), rep_->modulus, p), rep_);
    }

    bool operator==(const FqElement& o) const {
        return rep_ && o.rep_ && *rep_ == *o.rep_ && c_ == o.c_;
    }
    bool operator!=(const FqElement& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const FqElement& e) { return os << e.str(); }

private:
    friend class ExtensionField;

    static FqElement from_poly(detail::FpPoly poly, std::shared_ptr<const detail::ExtFieldRep> rep) {
        FqElement e;
        poly.resize(rep->k, 0);
        e.c_ = std::move(poly);
        e.rep_ = std::move(rep);
        return e;
    }

    detail::FpPoly trimmed() const {
        detail::FpPoly t = c_;
        detail::fp_trim(t);
        return t;
    }

    void check(const FqElement& o) const {
        if (!rep_ || !o.rep_ || !(*rep_ == *o.rep_))
            throw field_mismatch("extension field mismatch");
    }

    std::vector<std::uint64_t> c_;
    std::shared_ptr<const detail::ExtFieldRep> rep_;
};

/// The finite field F_{p^k} presented as F_p[t]/(modulus). The modulus must
/// be monic irreducible of degree k; use make_extension_field for the
/// canonical choice.
class ExtensionField {
public:
    using Element = FqElement;

    ExtensionField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
        PrimeField base(p); // validates p odd prime
        if (k < 1) throw bad_argument("extension degree must be >= 1");
        if (modulus.size() != static_cast<std::size_t>(k) + 1)
            throw bad_argument("modulus must have degree k");
        for (auto& c : modulus) c %= p;
        if (!detail::fp_is_monic(modulus)) throw bad_argument("modulus must be monic");
        if (!detail::fp_irreducible(modulus, p))
            throw bad_argument("modulus is reducible over F_" + std::to_string(p));
        rep_ = std::make_shared<detail::ExtFieldRep>(detail::ExtFieldRep{p, k, std::move(modulus)});
    }

    std::uint64_t p() const { return rep_->p; }
    unsigned k() const { return rep_->k; }
    const std::vector<std::uint64_t>& modulus() const { return rep_->modulus; }

    std::uint64_t characteristic() const { return rep_->p; }
    bool is_finite() const { return true; }

    Element zero() const { return element_from_coeffs({}); }
    Element one() const { return element_from_coeffs({1}); }

    /// The residue class of t.
    Element generator() const { return element_from_coeffs({0, 1}); }

    Element from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(rep_->p);
        if (r < 0) r += static_cast<std::int64_t>(rep_->p);
        return element_from_coeffs({static_cast<std::uint64_t>(r)});
    }

    /// Embeds an F_p residue as a constant.
    Element embed(const FpElement& e) const {
        if (e.modulus() != rep_->p) throw field_mismatch("embed: wrong characteristic");
        return element_from_coeffs({e.value()});
    }

    Element element_from_coeffs(std::vector<std::uint64_t> c) const {
        if (c.size() > rep_->k) throw bad_argument("residue degree must be < k");
        for (auto& x : c) x %= rep_->p;
        c.resize(rep_->k, 0);
        return FqElement::from_poly(std::move(c), rep_);
    }

    /// p^k; throws when it does not fit in 64 bits.
    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (unsigned i = 0; i < rep_->k; ++i) {
            if (s > UINT64_MAX / rep_->p) throw budget_exceeded("field too large to enumerate");
            s *= rep_->p;
        }
        return s;
    }

    /// Element number `index` in base-p positional order: the digits of the
    /// index, least significant first, are the residue coefficients c0, c1, ...
    Element element_at(std::uint64_t index) const {
        std::vector<std::uint64_t> c(rep_->k, 0);
        for (unsigned i = 0; i < rep_->k; ++i) {
            c[i] = index % rep_->p;
            index /= rep_->p;
        }
        if (index != 0) throw bad_argument("element index out of range");
        return FqElement::from_poly(std::move(c), rep_);
    }

    std::vector<Element> enumerate() const {
        std::uint64_t n = size();
        std::vector<Element> out;
        out.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
        return out;
    }

    bool operator==(const ExtensionField& o) const { return *rep_ == *o.rep_; }

private:
    std::shared_ptr<const detail::ExtFieldRep> rep_;
};

/// The canonical copy of F_{p^k}: its modulus is the first monic irreducible
/// of degree k in base-p positional order (coefficient c_i of t^i is the i-th
/// base-p digit of the candidate's code, constant term least significant).
inline ExtensionField make_extension_field(std::uint64_t p, unsigned k) {
    PrimeField base(p);
    if (k < 1) throw bad_argument("extension degree must be >= 1");
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(k) + 1, 0);
    cand[k] = 1;
    // k is small in practice; the code fits u64 whenever enumeration is sane
    for (BigInt code = 0;; ++code) {
        BigInt c = code;
        for (unsigned i = 0; i < k; ++i) {
            cand[i] = mpz_fdiv_ui(c.get_mpz_t(), p);
            c /= static_cast<unsigned long>(p);
        }
        if (c != 0) throw bad_argument("no irreducible found (degree too large)");
        if (detail::fp_irreducible(cand, p)) return ExtensionField(p, k, cand);
    }
}

} // namespace sosf

#endif
