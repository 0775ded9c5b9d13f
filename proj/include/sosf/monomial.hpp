#ifndef SOSF_MONOMIAL_HPP
#define SOSF_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sosf/errors.hpp"

namespace sosf {

/// Power product in a fixed number of variables. Variable 0 is the largest
/// variable of the ring's order.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<std::uint32_t> exps)
        : exps_(std::move(exps)),
          deg_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
        std::vector<std::uint32_t> e(nvars, 0);
        e.at(index) = power;
        return Monomial(std::move(e));
    }

    const std::vector<std::uint32_t>& exps() const { return exps_; }
    std::size_t nvars() const { return exps_.size(); }
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        check(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
        Monomial m;
        m.exps_ = std::move(e);
        m.deg_ = deg_ + o.deg_;
        return m;
    }

    bool divides(const Monomial& o) const {
        check(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// this / o; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        check(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (o.exps_[i] > exps_[i]) throw bad_argument("monomial division is not exact");
            e[i] = exps_[i] - o.exps_[i];
        }
        Monomial m;
        m.exps_ = std::move(e);
        m.deg_ = deg_ - o.deg_;
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check(b);
        std::vector<std::uint32_t> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check(b);
        std::vector<std::uint32_t> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i);
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

private:
    void check(const Monomial& o) const {
        if (exps_.size() != o.exps_.size()) throw bad_argument("monomial length mismatch");
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t deg_ = 0;
};

/// Degree-reverse-lexicographic comparison: negative, zero or positive as
/// a < b, a == b, a > b. Higher total degree wins; on equal degree the
/// monomial with the smaller exponent in the last differing variable wins.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw bad_argument("monomial length mismatch");
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    for (std::size_t i = ea.size(); i-- > 0;) {
        if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
    }
    return 0;
}

inline bool degrevlex_less(const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; }

/// Flattens the triple index (i, j, k), 1-based with i in 1..n, j in 1..r,
/// k in 1..s, onto 0..rsn-1. Lower flat index means larger variable in the
/// monomial order.
class VarIndexer {
public:
    VarIndexer(std::uint32_t r, std::uint32_t s, std::uint32_t n) : r_(r), s_(s), n_(n) {
        if (r < 1 || s < 1 || n < 1) throw bad_argument("dimensions must be >= 1");
    }

    std::uint32_t r() const { return r_; }
    std::uint32_t s() const { return s_; }
    std::uint32_t n() const { return n_; }
    std::size_t count() const { return static_cast<std::size_t>(r_) * s_ * n_; }

    std::size_t flat(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
        if (i < 1 || i > n_ || j < 1 || j > r_ || k < 1 || k > s_)
            throw bad_argument("variable index out of range");
        return (static_cast<std::size_t>(i - 1) * r_ + (j - 1)) * s_ + (k - 1);
    }

    /// Inverse of flat(); returns (i, j, k).
    std::tuple<std::uint32_t, std::uint32_t, std::uint32_t> unflat(std::size_t f) const {
        if (f >= count()) throw bad_argument("flat index out of range");
        std::uint32_t k = static_cast<std::uint32_t>(f % s_);
        f /= s_;
        std::uint32_t j = static_cast<std::uint32_t>(f % r_);
        std::uint32_t i = static_cast<std::uint32_t>(f / r_);
        return {i + 1, j + 1, k + 1};
    }

    bool operator==(const VarIndexer&) const = default;

private:
    std::uint32_t r_, s_, n_;
};

} // namespace sosf

#endif
