#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hcl {

using BigInt = mpz_class;

/// Exact rational with canonical representation: gcd(num, den) = 1 and
/// den > 0, maintained across all operations. All arithmetic is exact;
/// nothing in this type (or anything built on it) rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}
    Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return q_.get_num(); }
    const BigInt& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Serialized form is always "num/den", e.g. "1/2", "6/1", "-3/4".
    std::string str() const { return num().get_str() + "/" + den().get_str(); }

    /// Accepts "num/den" or a bare integer string.
    static Rational parse(std::string_view s);

    double approx() const { return q_.get_d(); }

private:
    mpq_class q_;
};

/// binom(n, k) with binom(n, k) = 0 for k < 0 or k > n.
BigInt binomial(long n, long k);

Rational pow_rational(const Rational& base, unsigned exp);

BigInt floor_rational(const Rational& q);
BigInt ceil_rational(const Rational& q);

/// Exact test of `lhs <= base + 2*sqrt(radicand)` with radicand >= 0.
/// Both sides stay rational: the square root is eliminated by squaring
/// once the sign of lhs - base is known.
bool leq_plus_two_sqrt(const Rational& lhs, const Rational& base, const Rational& radicand);

}  // namespace hcl
