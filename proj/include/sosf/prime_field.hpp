#ifndef SOSF_PRIME_FIELD_HPP
#define SOSF_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sosf/errors.hpp"
#include "sosf/integer.hpp"

namespace sosf {

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

/// Element of F_p. Carries its modulus, so mixed-field arithmetic is caught
/// at run time.
class FpElement {
public:
    FpElement() : v_(0), p_(0) {}
    FpElement(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FpElement operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    FpElement operator+(const FpElement& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_; // p < 2^63, no overflow
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }

    FpElement operator-(const FpElement& o) const {
        check(o);
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_);
    }

    FpElement operator*(const FpElement& o) const {
        check(o);
        return raw(detail::mulmod_u64(v_, o.v_, p_), p_);
    }

    FpElement operator/(const FpElement& o) const { return *this * o.inverse(); }

    FpElement& operator+=(const FpElement& o) { return *this = *this + o; }
    FpElement& operator-=(const FpElement& o) { return *this = *this - o; }
    FpElement& operator*=(const FpElement& o) { return *this = *this * o; }

    FpElement inverse() const {
        if (v_ == 0) throw division_by_zero("inverse of zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t; std::swap(t, new_t);
            r -= q * new_r; std::swap(r, new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return raw(static_cast<std::uint64_t>(t), p_);
    }

    bool operator==(const FpElement& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const FpElement& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const FpElement& e) { return os << e.v_; }

private:
    static FpElement raw(std::uint64_t v, std::uint64_t p) {
        FpElement e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }

    void check(const FpElement& o) const {
        if (p_ != o.p_)
            throw field_mismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

/// The prime field F_p for an odd prime p. Characteristic 2 is rejected:
/// every construction in this library assumes char != 2.
class PrimeField {
public:
    using Element = FpElement;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p == 2) throw bad_argument("characteristic 2 is not supported");
        if (p >= (1ULL << 62) || !detail::is_prime_u64(p))
            throw bad_argument(std::to_string(p) + " is not an odd prime below 2^62");
    }

    std::uint64_t p() const { return p_; }
    std::uint64_t characteristic() const { return p_; }
    bool is_finite() const { return true; }

    Element zero() const { return Element(0, p_); }
    Element one() const { return Element(1, p_); }

    Element from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return Element(static_cast<std::uint64_t>(r), p_);
    }

    Element element(std::uint64_t v) const { return Element(v, p_); }

    /// Reduction of a big integer mod p.
    Element from_bigint(const BigInt& n) const {
        BigInt r = n % BigInt(static_cast<unsigned long>(p_));
        if (r < 0) r += static_cast<unsigned long>(p_);
        return Element(r.get_ui(), p_);
    }

    std::uint64_t size() const { return p_; }

    /// Elements in the deterministic enumeration order 0, 1, ..., p-1.
    Element element_at(std::uint64_t index) const {
        if (index >= p_) throw bad_argument("element index out of range");
        return Element(index, p_);
    }

    std::vector<Element> enumerate() const {
        std::vector<Element> out;
        out.reserve(p_);
        for (std::uint64_t i = 0; i < p_; ++i) out.push_back(Element(i, p_));
        return out;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

} // namespace sosf

#endif
