#ifndef SOSF_SOS_IDEAL_HPP
#define SOSF_SOS_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sosf/buchberger.hpp"
#include "sosf/polynomial.hpp"

namespace sosf {

/// The shape [r, s, n] of a composition formula
/// (x_1^2+...+x_r^2)(y_1^2+...+y_s^2) = z_1^2+...+z_n^2.
struct SosType {
    std::uint32_t r = 1, s = 1, n = 1;

    SosType() = default;
    SosType(std::uint32_t r_, std::uint32_t s_, std::uint32_t n_) : r(r_), s(s_), n(n_) {
        if (r < 1 || s < 1 || n < 1) throw bad_argument("formula type needs r, s, n >= 1");
    }

    VarIndexer indexer() const { return VarIndexer(r, s, n); }
    std::size_t nvars() const { return static_cast<std::size_t>(r) * s * n; }

    std::size_t generator_count() const {
        return (static_cast<std::size_t>(r) * (r + 1) / 2) * (static_cast<std::size_t>(s) * (s + 1) / 2);
    }

    bool operator==(const SosType&) const = default;

    std::string str() const {
        return "[" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(n) + "]";
    }
};

/// The defining ideal of the variety of formulas of one type: the generators
/// vanish at a coefficient tensor exactly when that tensor is a formula.
template <CoefficientField F>
struct SosIdealSpec {
    SosType type;
    std::vector<Polynomial<F>> generators;
};

/// Builds the four generator families over the given field, in a fixed order
/// (families as listed, indices lexicographic inside each family):
///   1. sum_i x_{ijk}^2 - 1                      for all j, k
///   2. sum_i x_{ijk} x_{ij'k}                   for j < j', all k
///   3. sum_i x_{ijk} x_{ijk'}                   for all j, k < k'
///   4. sum_i (x_{ijk} x_{ij'k'} + x_{ijk'} x_{ij'k})  for j < j', k < k'
/// The scalar 2 on the cross families is dropped; it is a unit in every
/// supported field since the characteristic is never 2.
template <CoefficientField F>
SosIdealSpec<F> gen_sos_ideal(const SosType& t, const F& field) {
    if (field.characteristic() == 2) throw bad_argument("characteristic 2 is not supported");
    VarIndexer ix = t.indexer();
    const std::size_t nv = ix.count();
    std::vector<Polynomial<F>> gens;
    gens.reserve(t.generator_count());

    auto mono2 = [&](std::size_t a, std::size_t b) {
        std::vector<std::uint32_t> e(nv, 0);
        e[a] += 1;
        e[b] += 1;
        return Monomial(std::move(e));
    };

    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t k = 1; k <= t.s; ++k) {
            std::vector<Term<F>> ts;
            for (std::uint32_t i = 1; i <= t.n; ++i)
                ts.push_back({field.one(), mono2(ix.flat(i, j, k), ix.flat(i, j, k))});
            ts.push_back({-field.one(), Monomial::one(nv)});
            gens.emplace_back(field, nv, std::move(ts));
        }

    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t jp = j + 1; jp <= t.r; ++jp)
            for (std::uint32_t k = 1; k <= t.s; ++k) {
                std::vector<Term<F>> ts;
                for (std::uint32_t i = 1; i <= t.n; ++i)
                    ts.push_back({field.one(), mono2(ix.flat(i, j, k), ix.flat(i, jp, k))});
                gens.emplace_back(field, nv, std::move(ts));
            }

    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t k = 1; k <= t.s; ++k)
            for (std::uint32_t kp = k + 1; kp <= t.s; ++kp) {
                std::vector<Term<F>> ts;
                for (std::uint32_t i = 1; i <= t.n; ++i)
                    ts.push_back({field.one(), mono2(ix.flat(i, j, k), ix.flat(i, j, kp))});
                gens.emplace_back(field, nv, std::move(ts));
            }

    for (std::uint32_t j = 1; j <= t.r; ++j)
        for (std::uint32_t jp = j + 1; jp <= t.r; ++jp)
            for (std::uint32_t k = 1; k <= t.s; ++k)
                for (std::uint32_t kp = k + 1; kp <= t.s; ++kp) {
                    std::vector<Term<F>> ts;
                    for (std::uint32_t i = 1; i <= t.n; ++i) {
                        ts.push_back({field.one(), mono2(ix.flat(i, j, k), ix.flat(i, jp, kp))});
                        ts.push_back({field.one(), mono2(ix.flat(i, j, kp), ix.flat(i, jp, k))});
                    }
                    gens.emplace_back(field, nv, std::move(ts));
                }

    return SosIdealSpec<F>{t, std::move(gens)};
}

/// Candidate formula of one type: the coefficient tensor alpha_{ijk} of
/// z_i = sum_{j,k} alpha_{ijk} x_j y_k.
template <CoefficientField F>
class SosFormula {
public:
    SosFormula(SosType t, F field)
        : type_(t), field_(std::move(field)), coeffs_(t.nvars(), field_.zero()) {
        if (field_.characteristic() == 2) throw bad_argument("characteristic 2 is not supported");
    }

    const SosType& type() const { return type_; }
    const F& field() const { return field_; }
    const std::vector<typename F::Element>& coeffs() const { return coeffs_; }

    const typename F::Element& at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
        return coeffs_[type_.indexer().flat(i, j, k)];
    }

    void set(std::uint32_t i, std::uint32_t j, std::uint32_t k, typename F::Element v) {
        coeffs_[type_.indexer().flat(i, j, k)] = std::move(v);
    }

    void set_flat(std::size_t flat, typename F::Element v) { coeffs_.at(flat) = std::move(v); }

    bool operator==(const SosFormula& o) const {
        return type_ == o.type_ && field_ == o.field_ && coeffs_ == o.coeffs_;
    }

private:
    SosType type_;
    F field_;
    std::vector<typename F::Element> coeffs_;
};

/// The bilinear forms z_i as polynomials in x_1..x_r, y_1..y_s
/// (variables 0..r-1 are the x's, r..r+s-1 the y's).
template <CoefficientField F>
std::vector<Polynomial<F>> bilinear_forms(const SosFormula<F>& f) {
    const auto& t = f.type();
    const std::size_t nv = static_cast<std::size_t>(t.r) + t.s;
    std::vector<Polynomial<F>> zs;
    zs.reserve(t.n);
    for (std::uint32_t i = 1; i <= t.n; ++i) {
        std::vector<Term<F>> ts;
        for (std::uint32_t j = 1; j <= t.r; ++j)
            for (std::uint32_t k = 1; k <= t.s; ++k) {
                auto c = f.at(i, j, k);
                if (c.is_zero()) continue;
                std::vector<std::uint32_t> e(nv, 0);
                e[j - 1] = 1;
                e[t.r + k - 1] = 1;
                ts.push_back({std::move(c), Monomial(std::move(e))});
            }
        zs.emplace_back(f.field(), nv, std::move(ts));
    }
    return zs;
}

/// Checks the formula by full symbolic expansion:
/// (sum x_j^2)(sum y_k^2) - sum z_i^2 must be the zero polynomial.
template <CoefficientField F>
bool verify_formula(const SosFormula<F>& f) {
    if (f.field().characteristic() == 2) throw bad_argument("characteristic 2 is not supported");
    const auto& t = f.type();
    const std::size_t nv = static_cast<std::size_t>(t.r) + t.s;
    const F& field = f.field();

    Polynomial<F> xs(field, nv), ys(field, nv);
    for (std::uint32_t j = 0; j < t.r; ++j) {
        auto v = Polynomial<F>::variable(field, nv, j);
        xs = xs + v * v;
    }
    for (std::uint32_t k = 0; k < t.s; ++k) {
        auto v = Polynomial<F>::variable(field, nv, t.r + k);
        ys = ys + v * v;
    }
    Polynomial<F> zs(field, nv);
    for (const auto& z : bilinear_forms(f)) zs = zs + z * z;
    return (xs * ys - zs).is_zero();
}

/// The independent route: a tensor is a formula exactly when every generator
/// of the defining ideal vanishes at it.
template <CoefficientField F>
bool formula_vanishes_on_ideal(const SosFormula<F>& f) {
    auto spec = gen_sos_ideal(f.type(), f.field());
    for (const auto& g : spec.generators)
        if (!g.evaluate(f.coeffs()).is_zero()) return false;
    return true;
}

/// The classical 1-, 2-, 4- and 8-square identities (real, complex,
/// quaternion and octonion multiplication), with entries in {-1, 0, 1},
/// instantiated over the requested field.
template <CoefficientField F>
SosFormula<F> catalog(std::uint32_t n, const F& field) {
    if (n != 1 && n != 2 && n != 4 && n != 8)
        throw bad_argument("catalog formulas exist for n in {1, 2, 4, 8}");
    SosFormula<F> f(SosType(n, n, n), field);

    auto fill = [&](const int* table) {
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = 1; j <= n; ++j)
                for (std::uint32_t k = 1; k <= n; ++k)
                    f.set(i, j, k, field.from_int(table[((i - 1) * n + (j - 1)) * n + (k - 1)]));
    };

    static const int one_sq[1] = {1};
    static const int two_sq[8] = {
        // z1 = x1 y1 - x2 y2, z2 = x1 y2 + x2 y1
        1, 0, 0, -1,
        0, 1, 1, 0};
    static const int four_sq[64] = {
        // quaternion product coefficients
        1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1,
        0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0,
        0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0,
        0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0};
    // octonion product coefficients via the Cayley-Dickson doubling of the
    // quaternion table
    static const int eight_sq[512] = {
        1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0,
        0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0,
        0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0,
        0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1,

        0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0,

        0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0,
        1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0,

        0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0,
        0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0,
        0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0,

        0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0,
        0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1,
        1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
        0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0,

        0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
        0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0,
        0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0,
        0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0,

        0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1,
        0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0,
        0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0,
        1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0,

        0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0,
        0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
        0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0,
        0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0};

    switch (n) {
        case 1: fill(one_sq); break;
        case 2: fill(two_sq); break;
        case 4: fill(four_sq); break;
        default: fill(eight_sq); break;
    }
    return f;
}

/// Entrywise reduction of a rational formula modulo an odd prime. Requires
/// every denominator to be invertible mod p; a denominator divisible by p is
/// exactly the excluded-prime situation and raises bad_argument.
inline SosFormula<PrimeField> reduce_formula_mod_p(const SosFormula<RationalField>& f,
                                                   std::uint64_t p) {
    PrimeField target(p);
    SosFormula<PrimeField> out(f.type(), target);
    const auto& src = f.coeffs();
    for (std::size_t idx = 0; idx < src.size(); ++idx) {
        const Rational& a = src[idx];
        auto den = target.from_bigint(a.den());
        if (den.is_zero())
            throw bad_argument("denominator of " + a.str() + " is divisible by " + std::to_string(p));
        out.set_flat(idx, target.from_bigint(a.num()) / den);
    }
    return out;
}

/// Outcome of the properness decision, run under a pair-reduction cap.
template <CoefficientField F>
bool exists_over(const SosType& t, const F& field,
                 std::optional<std::uint64_t> max_pair_reductions = {}) {
    auto spec = gen_sos_ideal(t, field);
    BuchbergerOptions opts;
    opts.max_pair_reductions = max_pair_reductions;
    return is_proper(spec.generators, opts); // proper <=> formula over the algebraic closure
}

} // namespace sosf

#endif
