#ifndef SOSF_POLYNOMIAL_HPP
#define SOSF_POLYNOMIAL_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sosf/field.hpp"
#include "sosf/monomial.hpp"

namespace sosf {

template <CoefficientField F>
struct Term {
    typename F::Element coeff;
    Monomial mono;
};

/// Sparse multivariate polynomial over a coefficient field. Terms are kept
/// strictly decreasing in degrevlex, with no zero coefficients, so the
/// initial term of a nonzero polynomial is terms()[0].
template <CoefficientField F>
class Polynomial {
public:
    using Element = typename F::Element;

    Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

    /// Normalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
    Polynomial(F field, std::size_t nvars, std::vector<Term<F>> terms)
        : field_(std::move(field)), nvars_(nvars) {
        for (const auto& t : terms)
            if (t.mono.nvars() != nvars_) throw bad_argument("term has wrong variable count");
        std::sort(terms.begin(), terms.end(),
                  [](const Term<F>& a, const Term<F>& b) { return degrevlex_cmp(a.mono, b.mono) > 0; });
        terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().mono == t.mono) {
                terms_.back().coeff = terms_.back().coeff + t.coeff;
                if (terms_.back().coeff.is_zero()) terms_.pop_back();
            } else if (!t.coeff.is_zero()) {
                terms_.push_back(std::move(t));
            }
        }
    }

    static Polynomial constant(const F& field, std::size_t nvars, const Element& c) {
        Polynomial p(field, nvars);
        if (!c.is_zero()) p.terms_.push_back(Term<F>{c, Monomial::one(nvars)});
        return p;
    }

    static Polynomial variable(const F& field, std::size_t nvars, std::size_t index) {
        Polynomial p(field, nvars);
        p.terms_.push_back(Term<F>{field.one(), Monomial::variable(nvars, index)});
        return p;
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term<F>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }

    /// Total degree; 0 for the zero polynomial.
    std::uint64_t degree() const { return terms_.empty() ? 0 : terms_[0].mono.degree(); }

    /// Initial (leading) term; polynomial must be nonzero.
    const Term<F>& initial_term() const {
        if (terms_.empty()) throw bad_argument("initial term of zero polynomial");
        return terms_[0];
    }

    Polynomial operator-() const {
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term<F>{-t.coeff, t.mono});
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        Polynomial r(field_, nvars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = degrevlex_cmp(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Element sum = terms_[i].coeff + o.terms_[j].coeff;
                if (!sum.is_zero()) r.terms_.push_back(Term<F>{std::move(sum), terms_[i].mono});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        std::vector<Term<F>> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                prods.push_back(Term<F>{a.coeff * b.coeff, a.mono * b.mono});
        return Polynomial(field_, nvars_, std::move(prods));
    }

    /// Multiplication by a single term.
    Polynomial scaled(const Term<F>& t) const {
        Polynomial r(field_, nvars_);
        if (t.coeff.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& a : terms_)
            r.terms_.push_back(Term<F>{a.coeff * t.coeff, a.mono * t.mono});
        return r;
    }

    Polynomial scaled(const Element& c) const { return scaled(Term<F>{c, Monomial::one(nvars_)}); }

    /// Divides every coefficient by the leading coefficient.
    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return scaled(terms_[0].coeff.inverse());
    }

    Element evaluate(const std::vector<Element>& point) const {
        if (point.size() != nvars_) throw bad_argument("evaluation point has wrong length");
        Element acc = field_.zero();
        for (const auto& t : terms_) {
            Element v = t.coeff;
            for (std::size_t i = 0; i < nvars_; ++i) {
                std::uint32_t e = t.mono.exps()[i];
                if (e == 0) continue;
                Element p = point[i];
                Element pe = field_.one();
                while (e > 0) { // square and multiply
                    if (e & 1) pe = pe * p;
                    e >>= 1;
                    if (e) p = p * p;
                }
                v = v * pe;
            }
            acc = acc + v;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const {
        if (!(field_ == o.field_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
            return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += term_str(terms_[i]);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    static std::string term_str(const Term<F>& t) {
        std::string c = t.coeff.str();
        if (t.mono.is_one()) return c;
        if (t.coeff.is_one()) return t.mono.str();
        return c + "*" + t.mono.str();
    }

    void check(const Polynomial& o) const {
        if (nvars_ != o.nvars_ || !(field_ == o.field_))
            throw field_mismatch("polynomial ring mismatch");
    }

    F field_;
    std::size_t nvars_;
    std::vector<Term<F>> terms_;
};

/// Largest coefficient measure of a rational polynomial; 1 for the zero
/// polynomial so products of bounds stay meaningful.
inline PMeasure max_p_measure(const Polynomial<RationalField>& f) {
    BigInt m = 1;
    for (const auto& t : f.terms()) {
        BigInt p = t.coeff.p_measure().value;
        if (p > m) m = p;
    }
    return PMeasure(m);
}

} // namespace sosf

#endif
