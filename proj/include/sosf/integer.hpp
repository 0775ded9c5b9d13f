#ifndef SOSF_INTEGER_HPP
#define SOSF_INTEGER_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "sosf/errors.hpp"

namespace sosf {

/// Arbitrary-precision integer. All exact computations in the library go
/// through this type; no fixed-width arithmetic is exposed past the field
/// layer.
using BigInt = mpz_class;

inline BigInt big_abs(const BigInt& a) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// Number of bits in |a|; bit_length(0) == 0.
inline std::size_t bit_length(const BigInt& a) {
    if (a == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

/// a^e for e >= 0.
inline BigInt big_pow(const BigInt& a, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline BigInt big_pow(std::int64_t a, unsigned long e) { return big_pow(BigInt(a), e); }

/// 2^e as a big integer.
inline BigInt big_pow2(unsigned long e) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

/// Binomial coefficient C(n, k) with big n and machine k.
inline BigInt binomial(const BigInt& n, unsigned long k) {
    if (n < 0) throw bad_argument("binomial: negative n");
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt big_from_string(const std::string& s) {
    BigInt r;
    if (r.set_str(s, 10) != 0) throw bad_argument("not a decimal integer: '" + s + "'");
    return r;
}

inline std::string to_string(const BigInt& a) { return a.get_str(10); }

/// floor(log2(a)) for a >= 1, exact.
inline std::size_t floor_log2(const BigInt& a) {
    if (a <= 0) throw bad_argument("floor_log2: argument must be positive");
    return bit_length(a) - 1;
}

/// log2(a) as a double, usable far beyond the double range of a itself.
inline double log2_approx(const BigInt& a) {
    if (a <= 0) throw bad_argument("log2_approx: argument must be positive");
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, a.get_mpz_t());
    return std::log2(m) + static_cast<double>(exp2);
}

} // namespace sosf

#endif
