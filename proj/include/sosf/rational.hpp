#ifndef SOSF_RATIONAL_HPP
#define SOSF_RATIONAL_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "sosf/errors.hpp"
#include "sosf/integer.hpp"

namespace sosf {

/// Size measure of a canonical fraction a/b: max(|a|, |b|). Always >= 1;
/// the zero rational is 0/1 and measures 1.
struct PMeasure {
    BigInt value;

    explicit PMeasure(BigInt v) : value(std::move(v)) {
        if (value < 1) throw bad_argument("PMeasure: value must be >= 1");
    }

    friend bool operator==(const PMeasure&, const PMeasure&) = default;
    bool operator<(const PMeasure& o) const { return value < o.value; }
    bool operator<=(const PMeasure& o) const { return value <= o.value; }
};

/// Exact rational number, always kept in canonical form:
/// gcd(|num|, den) = 1 and den >= 1, with zero represented as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw division_by_zero("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(std::int64_t num, std::int64_t den)
        : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

    /// Parses "a" or "a/b" in base 10.
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(big_from_string(s));
        return Rational(big_from_string(s.substr(0, slash)), big_from_string(s.substr(slash + 1)));
    }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw division_by_zero();
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        return Rational(den(), num());
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    /// max(|num|, den) of the canonical form.
    PMeasure p_measure() const {
        BigInt a = big_abs(num());
        BigInt b = den();
        return PMeasure(a >= b ? a : b);
    }

    std::string str() const { return v_.get_str(10); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_; // mpq keeps results canonical under arithmetic
};

inline PMeasure p_measure(const Rational& x) { return x.p_measure(); }

/// The rational coefficient field Q. Stateless; exists so polynomials and
/// the Groebner machinery can be written against one field interface.
struct RationalField {
    using Element = Rational;

    Element zero() const { return Rational(); }
    Element one() const { return Rational(1); }
    Element from_int(std::int64_t n) const { return Rational(n); }

    /// 0 marks characteristic zero.
    std::uint64_t characteristic() const { return 0; }
    bool is_finite() const { return false; }

    bool operator==(const RationalField&) const = default;
};

} // namespace sosf

#endif
