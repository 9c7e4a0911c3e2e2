#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "bringlab/errors.hpp"

namespace bringlab {

/// Arbitrary-precision rational, always kept in canonical form:
/// gcd(num, den) = 1 and den >= 1. The canonical zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw ZeroDivision("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw ZeroDivision("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a" or "a/b" (optionally signed).
    static Rational parse(const std::string& text);

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivision("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivision("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Exact square root if this is a perfect square of a rational; false otherwise.
    bool sqrt_exact(Rational& out) const;

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("invalid rational '" + text + "'", 0, "a or a/b");
    if (q.get_den() == 0) throw ZeroDivision("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

inline bool Rational::sqrt_exact(Rational& out) const {
    if (sign() < 0) return false;
    mpz_class n = v_.get_num(), d = v_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    return true;
}

/// gcd of two integers, nonnegative.
inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace bringlab
