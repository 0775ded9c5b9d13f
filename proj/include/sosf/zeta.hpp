#ifndef SOSF_ZETA_HPP
#define SOSF_ZETA_HPP

#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "sosf/extension_field.hpp"
#include "sosf/integer.hpp"
#include "sosf/polynomial.hpp"
#include "sosf/rational.hpp"

namespace sosf {

/// Univariate integer polynomial, constant term first. Only what the zeta
/// reconstruction needs.
struct IntPoly {
    std::vector<BigInt> c; // trimmed: back() != 0 unless the polynomial is 1 -> {1}

    IntPoly() : c{BigInt(1)} {}
    explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) {
        while (c.size() > 1 && c.back() == 0) c.pop_back();
        if (c.empty()) c.push_back(BigInt(0));
    }

    std::size_t degree() const { return c.size() - 1; }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool operator==(const IntPoly&) const = default;
};

/// Point counts N_k = #X(F_{p^k}) for k = 1..counts.size().
struct PointCounts {
    std::uint64_t p = 0;
    std::vector<BigInt> counts;

    const BigInt& at(std::size_t k) const {
        if (k < 1 || k > counts.size()) throw bad_argument("count index out of range");
        return counts[k - 1];
    }
};

/// Structural sanity of a count list: counts are non-negative, at most the
/// size of the ambient affine space (when the variable count is known), and
/// weakly monotone along subfield containment F_{p^k} into F_{p^km}.
inline void validate_counts(const PointCounts& pc, std::optional<std::size_t> nvars = {}) {
    for (std::size_t k = 1; k <= pc.counts.size(); ++k) {
        const BigInt& nk = pc.at(k);
        if (nk < 0) throw inconsistent_data("negative point count");
        if (nvars) {
            BigInt space = big_pow(BigInt(static_cast<unsigned long>(pc.p)),
                                   static_cast<unsigned long>(k * *nvars));
            if (nk > space) throw inconsistent_data("count exceeds the ambient space");
        }
        for (std::size_t m = 2; k * m <= pc.counts.size(); ++m)
            if (nk > pc.at(k * m))
                throw inconsistent_data("counts shrink along a subfield inclusion");
    }
}

/// Truncated zeta power series. Coefficients are exact integers; the
/// exponential recurrence is run in exact arithmetic and a non-integral
/// coefficient is a hard error.
struct ZetaSeries {
    std::vector<BigInt> z; // z[0] = 1

    std::size_t truncation() const { return z.size() - 1; }
};

/// Numerator/denominator pair of a rational zeta function, both with
/// constant term 1.
struct ZetaFunction {
    IntPoly r1; // numerator
    IntPoly r2; // denominator

    bool operator==(const ZetaFunction&) const = default;
};

namespace detail {

template <FiniteField F>
BigInt count_range(const std::vector<Polynomial<F>>& system,
                   const std::vector<typename F::Element>& elements, std::size_t nvars,
                   std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t q = elements.size();
    std::vector<typename F::Element> point(nvars, elements[0]);
    BigInt count = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint64_t c = idx;
        for (std::size_t i = 0; i < nvars; ++i) {
            point[i] = elements[c % q];
            c /= q;
        }
        bool zero = true;
        for (const auto& f : system)
            if (!f.evaluate(point).is_zero()) {
                zero = false;
                break;
            }
        if (zero) ++count;
    }
    return count;
}

} // namespace detail

/// Exact number of common zeros with all coordinates in the given finite
/// field, by full enumeration of the affine space.
template <FiniteField F>
BigInt count_common_zeros(const std::vector<Polynomial<F>>& system, const F& field,
                          std::uint64_t enumeration_budget = 10000000, unsigned threads = 1) {
    if (system.empty()) throw bad_argument("empty polynomial system");
    const std::size_t nvars = system[0].nvars();
    for (const auto& f : system)
        if (f.nvars() != nvars || !(f.field() == field))
            throw field_mismatch("system/ring mismatch");

    std::uint64_t q = field.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (total > enumeration_budget / q) throw budget_exceeded("point enumeration over budget");
        total *= q;
    }
    if (total > enumeration_budget) throw budget_exceeded("point enumeration over budget");

    auto elements = field.enumerate();
    if (threads <= 1 || total < 4096)
        return detail::count_range(system, elements, nvars, 0, total);

    const unsigned workers = threads;
    std::vector<BigInt> parts(workers, BigInt(0));
    std::vector<std::thread> pool;
    const std::uint64_t per = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::uint64_t lo = static_cast<std::uint64_t>(w) * per;
            std::uint64_t hi = std::min(total, lo + per);
            if (lo < hi) parts[w] = detail::count_range(system, elements, nvars, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    BigInt sum = 0;
    for (const auto& part : parts) sum += part;
    return sum;
}

/// Lifts an F_p system into the canonical F_{p^k} and counts its rational
/// points there.
inline BigInt count_points(const std::vector<Polynomial<PrimeField>>& system, unsigned k,
                           std::uint64_t enumeration_budget = 10000000, unsigned threads = 1) {
    if (system.empty()) throw bad_argument("empty polynomial system");
    if (k < 1) throw bad_argument("extension degree must be >= 1");
    const PrimeField& base = system[0].field();
    if (k == 1) return count_common_zeros(system, base, enumeration_budget, threads);

    ExtensionField ext = make_extension_field(base.p(), k);
    std::vector<Polynomial<ExtensionField>> lifted;
    lifted.reserve(system.size());
    for (const auto& f : system) {
        std::vector<Term<ExtensionField>> ts;
        for (const auto& t : f.terms()) ts.push_back({ext.embed(t.coeff), t.mono});
        lifted.emplace_back(ext, f.nvars(), std::move(ts));
    }
    return count_common_zeros(lifted, ext, enumeration_budget, threads);
}

/// Counts over F_{p^k} for k = 1..kmax, with the structural invariants
/// checked before returning.
inline PointCounts count_points_range(const std::vector<Polynomial<PrimeField>>& system,
                                      unsigned kmax, std::uint64_t enumeration_budget = 10000000,
                                      unsigned threads = 1) {
    if (system.empty()) throw bad_argument("empty polynomial system");
    PointCounts pc;
    pc.p = system[0].field().p();
    for (unsigned k = 1; k <= kmax; ++k)
        pc.counts.push_back(count_points(system, k, enumeration_budget, threads));
    validate_counts(pc, system[0].nvars());
    return pc;
}

/// Truncated exponential of sum_k N_k T^k / k via the differential
/// recurrence n z_n = sum_{k=1}^{n} N_k z_{n-k}, z_0 = 1. Every division
/// must be exact; a remainder signals counts that no variety produces.
inline ZetaSeries series_from_counts(const PointCounts& counts, std::size_t truncation) {
    if (counts.counts.size() < truncation)
        throw bad_argument("need at least " + std::to_string(truncation) + " point counts");
    ZetaSeries s;
    s.z.assign(truncation + 1, BigInt(0));
    s.z[0] = 1;
    for (std::size_t n = 1; n <= truncation; ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += counts.at(k) * s.z[n - k];
        BigInt q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        if (r != 0)
            throw inconsistent_data("zeta series coefficient z_" + std::to_string(n) +
                                    " is not an integer");
        s.z[n] = std::move(q);
    }
    return s;
}

namespace detail {

/// Exact Gaussian elimination; returns the solution with free variables set
/// to zero, or nothing when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && a[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[row]);
        std::swap(rhs[pr], rhs[row]);
        Rational inv = a[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) a[row][c] = a[row][c] * inv;
        rhs[row] = rhs[row] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[row][c];
            rhs[r] = rhs[r] - f * rhs[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!rhs[r].is_zero()) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) x[pivot_col_of_row[r]] = rhs[r];
    return x;
}

inline IntPoly gcd_int_poly(const IntPoly& a, const IntPoly& b) {
    // Euclid over Q, then primitive part normalized to constant term sign +1
    auto to_q = [](const IntPoly& p) {
        std::vector<Rational> v;
        for (const auto& c : p.c) v.push_back(Rational(c));
        return v;
    };
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    std::vector<Rational> x = to_q(a), y = to_q(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        // x mod y
        while (x.size() >= y.size() && !x.empty()) {
            Rational f = x.back() / y.back();
            std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] = x[shift + i] - f * y[i];
            trim(x);
            if (x.size() < y.size()) break;
        }
        std::swap(x, y);
    }
    if (x.empty()) return IntPoly();
    // clear denominators, divide by content
    BigInt lcm_den = 1;
    for (const auto& c : x) lcm_den = lcm_den / gcd(lcm_den, c.den()) * c.den();
    std::vector<BigInt> z;
    for (const auto& c : x) z.push_back(c.num() * (lcm_den / c.den()));
    BigInt content = 0;
    for (const auto& c : z) content = gcd(content, c);
    for (auto& c : z) c /= content;
    if (z[0] < 0)
        for (auto& c : z) c = -c;
    return IntPoly(std::move(z));
}

/// Exact division of integer polynomials; divisor constant term must be +-1.
inline IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    std::vector<Rational> x;
    for (const auto& c : num.c) x.push_back(Rational(c));
    std::vector<BigInt> q(num.c.size() - den.c.size() + 1, BigInt(0));
    for (std::size_t i = x.size(); i-- > 0;) {
        if (i < den.c.size() - 1) break;
        std::size_t shift = i - (den.c.size() - 1);
        Rational f = x[i] / Rational(den.c.back());
        if (!f.is_integer()) throw inconsistent_data("non-integral quotient in cancellation");
        q[shift] = f.num();
        for (std::size_t j = 0; j < den.c.size(); ++j)
            x[shift + j] = x[shift + j] - f * Rational(den.c[j]);
    }
    for (const auto& rest : x)
        if (!rest.is_zero()) throw inconsistent_data("cancellation was not exact");
    return IntPoly(std::move(q));
}

} // namespace detail

/// Solves R2 * Z = R1 (mod T^(D1+D2+1)) for integer polynomials with
/// constant term 1 and deg R1 <= D1, deg R2 <= D2. The denominator degree is
/// minimized first, then the numerator degree; leftover freedom is resolved
/// by zeroing free variables. With cancel_common_factors (the default) a
/// shared polynomial factor is divided out.
inline ZetaFunction reconstruct_zeta(const ZetaSeries& series, std::size_t d1_bound,
                                     std::size_t d2_bound, bool cancel_common_factors = true) {
    if (series.truncation() < d1_bound + d2_bound)
        throw bad_argument("series truncation must be at least D1 + D2");
    const auto& z = series.z;
    // every available series term constrains the solution; extra terms past
    // D1 + D2 reject spurious pairs when the supplied bounds are too small
    const std::size_t window_end = series.truncation();

    for (std::size_t d2 = 0; d2 <= d2_bound; ++d2) {
        // unknowns b_1..b_d2; equations sum_{i=0}^{d2} b_i z_{m-i} = 0 for
        // d1_bound < m <= window_end (b_0 = 1, z with negative index = 0)
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t m = d1_bound + 1; m <= window_end; ++m) {
            std::vector<Rational> row(d2, Rational(0));
            for (std::size_t i = 1; i <= d2 && i <= m; ++i) row[i - 1] = Rational(z[m - i]);
            rows.push_back(std::move(row));
            rhs.push_back(Rational(BigInt(-z[m])));
        }
        auto sol = detail::solve_exact(std::move(rows), std::move(rhs));
        if (!sol) continue;

        std::vector<BigInt> b{BigInt(1)};
        bool integral = true;
        for (const auto& x : *sol) {
            if (!x.is_integer()) integral = false;
            b.push_back(x.num());
        }
        if (!integral) throw inconsistent_data("reconstructed denominator is not integral");

        // numerator coefficients are forced: a_m = sum_{i=0}^{min(m,d2)} b_i z_{m-i}
        std::vector<BigInt> a{BigInt(1)};
        for (std::size_t m = 1; m <= d1_bound; ++m) {
            BigInt am = 0;
            for (std::size_t i = 0; i <= d2 && i <= m; ++i) am += b[i] * z[m - i];
            a.push_back(std::move(am));
        }

        ZetaFunction zf{IntPoly(std::move(a)), IntPoly(std::move(b))};
        if (cancel_common_factors) {
            IntPoly g = detail::gcd_int_poly(zf.r1, zf.r2);
            if (g.degree() >= 1) {
                zf.r1 = detail::divide_exact(zf.r1, g);
                zf.r2 = detail::divide_exact(zf.r2, g);
            }
        }
        if (zf.r1.c[0] != 1 || zf.r2.c[0] != 1)
            throw inconsistent_data("zeta pair lost its unit constant term");
        return zf;
    }
    throw inconsistent_data("no zeta function within the degree bounds fits the series");
}

/// Checks the defining congruence R2 * Z = R1 (mod T^(len+1)).
inline bool zeta_matches_series(const ZetaFunction& zf, const ZetaSeries& series,
                                std::size_t len) {
    if (series.truncation() < len) throw bad_argument("series too short for this check");
    for (std::size_t m = 0; m <= len; ++m) {
        BigInt lhs = 0;
        for (std::size_t i = 0; i < zf.r2.c.size() && i <= m; ++i) lhs += zf.r2.c[i] * series.z[m - i];
        BigInt rhs = m < zf.r1.c.size() ? zf.r1.c[m] : BigInt(0);
        if (lhs != rhs) return false;
    }
    return true;
}

/// The total-degree bound deg R1 + deg R2 < (4d+9)^(n+m) for a system of m
/// polynomials of degree <= d in n variables.
inline BigInt bombieri_bound(std::uint64_t max_degree, std::uint64_t nvars, std::uint64_t m_polys) {
    if (max_degree < 1 || nvars < 1 || m_polys < 1)
        throw bad_argument("bombieri bound needs d, n, m >= 1");
    return big_pow(BigInt(static_cast<unsigned long>(4 * max_degree + 9)),
                   static_cast<unsigned long>(nvars + m_polys));
}

/// Recovers N_k from a zeta pair via Newton power sums of the inverse roots:
/// for R = prod (1 - a_i T), s_k = -k c_k - sum_{i<k} c_i s_{k-i}, and
/// N_k = s_k(R2) - s_k(R1). All arithmetic is exact.
inline std::vector<BigInt> predict_counts(const ZetaFunction& zf, std::size_t horizon) {
    if (zf.r1.c[0] != 1 || zf.r2.c[0] != 1)
        throw bad_argument("zeta polynomials must have constant term 1");
    auto power_sums = [&](const IntPoly& r) {
        std::vector<BigInt> s(horizon + 1, BigInt(0));
        for (std::size_t k = 1; k <= horizon; ++k) {
            BigInt ck = k < r.c.size() ? r.c[k] : BigInt(0);
            BigInt acc = -BigInt(static_cast<unsigned long>(k)) * ck;
            for (std::size_t i = 1; i < k; ++i) {
                BigInt ci = i < r.c.size() ? r.c[i] : BigInt(0);
                acc -= ci * s[k - i];
            }
            s[k] = std::move(acc);
        }
        return s;
    };
    auto s1 = power_sums(zf.r1);
    auto s2 = power_sums(zf.r2);
    std::vector<BigInt> out;
    out.reserve(horizon);
    for (std::size_t k = 1; k <= horizon; ++k) out.push_back(s2[k] - s1[k]);
    return out;
}

} // namespace sosf

#endif
