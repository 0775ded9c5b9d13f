#ifndef SOSF_BOUNDS_HPP
#define SOSF_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "sosf/integer.hpp"
#include "sosf/rational.hpp"
#include "sosf/sos_ideal.hpp"

namespace sosf {

/// The bound values explode quickly, so they are reported in tiers:
///   exact          - the value itself, as a big integer
///   log2-exact     - log2 of the value, which is exactly an integer
///   loglog2-approx - log2(log2(value)) as a float, computed analytically
/// A tier escalates only when the payload of the tier below would exceed the
/// configured bit cap; log2-exact is only used when log2 is an integer.
enum class BoundTier { exact, log2_exact, loglog2_approx };

inline std::string tier_name(BoundTier t) {
    switch (t) {
        case BoundTier::exact: return "exact";
        case BoundTier::log2_exact: return "log2-exact";
        default: return "loglog2-approx";
    }
}

struct BoundValue {
    BoundTier tier = BoundTier::exact;
    BigInt payload;      // tiers exact / log2-exact
    double approx = 0.0; // tier loglog2-approx

    static BoundValue make_exact(BigInt v) { return {BoundTier::exact, std::move(v), 0.0}; }
    static BoundValue make_log2(BigInt v) { return {BoundTier::log2_exact, std::move(v), 0.0}; }
    static BoundValue make_approx(double v) { return {BoundTier::loglog2_approx, BigInt(0), v}; }
};

constexpr std::size_t kDefaultBitCap = 1000000;

/// The doubly-exponential degree cap can be driven by the output count n or
/// by the full variable count rsn; the two give different thresholds. Both
/// readings are exposed and every result is labeled with the mode that
/// produced it.
enum class ExponentMode { as_stated, dube_consistent };

inline std::string mode_name(ExponentMode m) {
    return m == ExponentMode::as_stated ? "as-stated" : "dube-consistent";
}

namespace detail {

/// A positive quantity tracked exactly when it fits the bit cap, and through
/// log2 as a long double otherwise.
struct Magnitude {
    std::optional<BigInt> exact;
    long double log2v = 0.0L;

    static Magnitude from_exact(BigInt v) {
        Magnitude m;
        m.log2v = v > 0 ? static_cast<long double>(log2_approx(v)) : 0.0L;
        m.exact = std::move(v);
        return m;
    }

    long double value_ld() const {
        if (exact) return static_cast<long double>(mpz_get_d(exact->get_mpz_t()));
        return std::exp2(log2v);
    }
};

/// C(base + v, v) for a power-of-two base given by its exponent. Exact when
/// the result stays under the cap, log-only otherwise.
inline Magnitude binomial_power2(unsigned long log2_base, std::uint64_t v, std::size_t bit_cap) {
    long double approx_bits = static_cast<long double>(v) * log2_base;
    if (log2_base <= bit_cap && approx_bits <= static_cast<long double>(bit_cap) + 64) {
        BigInt base = big_pow2(log2_base);
        BigInt result = binomial(base + static_cast<unsigned long>(v), static_cast<unsigned long>(v));
        if (bit_length(result) <= bit_cap) return Magnitude::from_exact(std::move(result));
        Magnitude m;
        m.log2v = static_cast<long double>(log2_approx(result));
        return m;
    }
    // log2 C(B+v, v) = sum_{i=1..v} (log2(B+i) - log2 i); B dominates i
    Magnitude m;
    long double acc = 0.0L;
    for (std::uint64_t i = 1; i <= v; ++i) acc += log2_base - std::log2(static_cast<long double>(i));
    m.log2v = acc;
    return m;
}

} // namespace detail

/// Shared parameter block for the growth/step bounds of one formula type.
struct BoundParams {
    SosType type;
    ExponentMode mode = ExponentMode::as_stated;
    std::size_t bit_cap = kDefaultBitCap;

    std::uint64_t v() const { return type.nvars(); }

    /// The exponent variable feeding the doubly-exponential degree bound.
    std::uint64_t e() const { return mode == ExponentMode::as_stated ? type.n : v(); }

    /// log2 of the degree bound D = 2 * 4^(2^(e-1)); D is a power of two.
    /// Throws once 2^e itself stops being representable.
    unsigned long dube_degree_log2() const {
        std::uint64_t ee = e();
        if (ee >= 63) throw bad_argument("degree bound exponent 2^e overflows");
        return static_cast<unsigned long>((1ULL << ee) + 1);
    }

    /// q = C(v + 4^(2^(e-1)+1), 4^(2^(e-1)+1)); the base has log2 = 2^e + 2.
    detail::Magnitude lemma_binomial() const {
        std::uint64_t ee = e();
        if (ee >= 63) throw bad_argument("degree bound exponent 2^e overflows");
        return detail::binomial_power2(static_cast<unsigned long>((1ULL << ee) + 2), v(), bit_cap);
    }

    /// m = C(v + D, D) with D the degree bound: the monomial count that caps
    /// the number of basis extensions.
    detail::Magnitude step_binomial() const {
        return detail::binomial_power2(dube_degree_log2(), v(), bit_cap);
    }
};

/// 2 * (d^2/2 + d)^(2^(v-1)), the degree cap for bases computed from inputs
/// of degree <= d in v variables. Non-integral values (odd d) skip the exact
/// tier.
inline BoundValue dube_bound(std::uint64_t d, std::uint64_t v, std::size_t bit_cap = kDefaultBitCap) {
    if (d < 1 || v < 1) throw bad_argument("dube bound needs d, v >= 1");
    const long double base_log2 = std::log2(static_cast<long double>(d) * d / 2 + d);
    const bool base_integral = (d % 2 == 0);

    if (v <= 63) {
        std::uint64_t exp = 1ULL << (v - 1);
        long double bits = 1 + exp * base_log2;
        if (base_integral && bits <= static_cast<long double>(bit_cap)) {
            BigInt base = (BigInt(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d) +
                           BigInt(2) * static_cast<unsigned long>(d)) / 2;
            return BoundValue::make_exact(2 * big_pow(base, static_cast<unsigned long>(exp)));
        }
    }
    if (d == 2 && v <= bit_cap) {
        // bound = 2^(2^v + 1): log2 is exactly an integer
        BigInt log2v = big_pow2(static_cast<unsigned long>(v)) + 1;
        if (bit_length(log2v) <= bit_cap) return BoundValue::make_log2(std::move(log2v));
    }
    long double exp = std::exp2(static_cast<long double>(v) - 1);
    return BoundValue::make_approx(static_cast<double>(std::log2(1.0L + exp * base_log2)));
}

/// Remainder growth through one full division: 2^(3*2^p-2) * M^(5*2^p-3)
/// with p = C(v+d, d). The degree parameter is caller-supplied: the same
/// bound applies whether d is the input degree or the doubled degree of an
/// S-combination.
inline BoundValue division_p_bound(const PMeasure& M, std::uint64_t v, std::uint64_t d,
                                   std::size_t bit_cap = kDefaultBitCap) {
    if (v < 1 || d < 1) throw bad_argument("division bound needs v, d >= 1");
    BigInt p = binomial(BigInt(static_cast<unsigned long>(v)) + static_cast<unsigned long>(d),
                        static_cast<unsigned long>(d));
    const long double log2_m = static_cast<long double>(log2_approx(M.value));

    if (p <= static_cast<long>(bit_cap)) {
        unsigned long pu = p.get_ui();
        BigInt c_exp = BigInt(3) * big_pow2(pu) - 2;
        BigInt m_exp = BigInt(5) * big_pow2(pu) - 3;
        long double bits = static_cast<long double>(c_exp.get_d()) +
                           static_cast<long double>(m_exp.get_d()) * log2_m;
        if (bits <= static_cast<long double>(bit_cap) && mpz_fits_ulong_p(c_exp.get_mpz_t()) &&
            mpz_fits_ulong_p(m_exp.get_mpz_t())) {
            BigInt value = big_pow2(c_exp.get_ui());
            BigInt mpow;
            mpz_pow_ui(mpow.get_mpz_t(), M.value.get_mpz_t(), m_exp.get_ui());
            return BoundValue::make_exact(value * mpow);
        }
        if (mpz_popcount(M.value.get_mpz_t()) == 1) {
            // M = 2^j makes log2 an exact integer
            unsigned long j = static_cast<unsigned long>(mpz_sizeinbase(M.value.get_mpz_t(), 2) - 1);
            BigInt log2v = c_exp + m_exp * j;
            if (bit_length(log2v) <= bit_cap) return BoundValue::make_log2(std::move(log2v));
        }
    }
    // log2(bound) ~= 2^p * (3 + 5 log2 M)
    long double p_ld = static_cast<long double>(p.get_d());
    long double loglog = p_ld + std::log2(3.0L + 5.0L * log2_m);
    return BoundValue::make_approx(static_cast<double>(loglog));
}

/// Number of monomials of degree <= D in v variables, the cap on basis
/// extensions: C(v + D, D).
inline BoundValue buchberger_step_bound(const BoundParams& params) {
    auto m = params.step_binomial();
    if (m.exact) return BoundValue::make_exact(*m.exact);
    return BoundValue::make_approx(static_cast<double>(std::log2(m.log2v)));
}

/// Exact closed form of the growth exponent: log2 of the bound after m
/// steps is (3*2^q - 2) * ((5*2^q - 3)^(m+1) - 1) / (5*2^q - 4).
inline BigInt growth_log2_closed_form(const BigInt& q, std::uint64_t m) {
    if (q < 1 || q > 2000000) throw bad_argument("growth exponent out of exact range");
    unsigned long qu = q.get_ui();
    BigInt c = BigInt(3) * big_pow2(qu) - 2;
    BigInt x = BigInt(5) * big_pow2(qu) - 3;
    BigInt xpow;
    mpz_pow_ui(xpow.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m) + 1);
    BigInt geom = (xpow - 1) / (x - 1); // exact: geometric sum
    return c * geom;
}

namespace detail {

inline BoundValue growth_bound_impl(const Magnitude& q, const Magnitude& m, std::size_t bit_cap) {
    if (q.exact && m.exact && mpz_fits_ulong_p(m.exact->get_mpz_t())) {
        long double q_ld = q.value_ld();
        long double m_ld = m.value_ld();
        long double payload_bits = (m_ld + 1) * (q_ld + 2.33L) + q_ld + 8;
        if (*q.exact <= static_cast<long>(bit_cap) && payload_bits <= static_cast<long double>(bit_cap)) {
            BigInt log2v = growth_log2_closed_form(*q.exact, m.exact->get_ui());
            if (log2v <= static_cast<long>(bit_cap))
                return BoundValue::make_exact(big_pow2(log2v.get_ui()));
            return BoundValue::make_log2(std::move(log2v));
        }
    }
    // log2(payload) = log2(3*2^q - 2) + log2(sum_{i<=m} (5*2^q - 3)^i)
    //              ~= (q + log2 3) + m * (q + log2 5)
    long double q_ld = q.value_ld();
    long double m_ld = m.value_ld();
    long double log2_payload = (q_ld + std::log2(3.0L)) + m_ld * (q_ld + std::log2(5.0L));
    return BoundValue::make_approx(static_cast<double>(log2_payload));
}

} // namespace detail

/// Coefficient growth cap after `step` basis extensions, with the exponent
/// parameter q supplied by the formula type.
inline BoundValue growth_bound(const BoundParams& params, std::uint64_t step) {
    return detail::growth_bound_impl(params.lemma_binomial(),
                                     detail::Magnitude::from_exact(BigInt(static_cast<unsigned long>(step))),
                                     params.bit_cap);
}

/// Same bound with q forced, for validation against the recursion.
inline BoundValue growth_bound_forced(const BigInt& q, std::uint64_t step,
                                      std::size_t bit_cap = kDefaultBitCap) {
    return detail::growth_bound_impl(detail::Magnitude::from_exact(q),
                                     detail::Magnitude::from_exact(BigInt(static_cast<unsigned long>(step))),
                                     bit_cap);
}

/// The characteristic threshold: the growth bound evaluated at the maximal
/// number of steps. Any prime above this value cannot change properness
/// between characteristic 0 and characteristic p.
inline BoundValue charp_threshold(const BoundParams& params) {
    return detail::growth_bound_impl(params.lemma_binomial(), params.step_binomial(), params.bit_cap);
}

/// 2 * 17^(rsn + r^2 s^2): a formula over the algebraic closure of F_p
/// descends to F_{p^k} for some k at most this value.
inline BoundValue field_degree_bound(const SosType& t, std::size_t bit_cap = kDefaultBitCap) {
    BigInt rs = BigInt(static_cast<unsigned long>(t.r)) * static_cast<unsigned long>(t.s);
    BigInt exponent = rs * static_cast<unsigned long>(t.n) + rs * rs;
    const long double bits = 1 + static_cast<long double>(exponent.get_d()) * std::log2(17.0L);
    if (mpz_fits_ulong_p(exponent.get_mpz_t()) && bits <= static_cast<long double>(bit_cap))
        return BoundValue::make_exact(2 * big_pow(BigInt(17), exponent.get_ui()));
    return BoundValue::make_approx(static_cast<double>(std::log2(bits)));
}

} // namespace sosf

#endif
