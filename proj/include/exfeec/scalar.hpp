// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace exfeec {

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
    static Rational parse(const std::string& text);

    std::string str() const { return v_.get_str(); }
    const mpq_class& mpq() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sgn() const { return ::sgn(v_); }
    bool is_zero() const { return sgn() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    // a -= b*c without temporaries
    void submul(const Rational& b, const Rational& c);
    void addmul(const Rational& b, const Rational& c);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

    std::size_t hash() const;

private:
    mpq_class v_;
};

Rational factorial(int n);
Rational binomial(int n, int k);
Rational abs(const Rational& q);
Rational pow(const Rational& q, int e);

class RadicandMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// a + b*sqrt(m). m is reduced to its square-free part on construction, and
// values with b == 0 carry m == 1.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
    QuadExt(int a) : a_(a) {}              // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, long m);

    static QuadExt sqrt(long m) { return QuadExt(0, 1, m); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long radicand() const { return m_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    int sgn() const;
    // Throws if the value is irrational.
    Rational to_rational() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);
    QuadExt inverse() const;
    QuadExt conjugate() const { return QuadExt(a_, -b_, m_); }

    void submul(const QuadExt& b, const QuadExt& c) { *this -= b * c; }
    void addmul(const QuadExt& b, const QuadExt& c) { *this += b * c; }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_; }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sgn() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }

    // "a", or "a+b*sqrt(m)" with a omitted when zero.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

private:
    void normalize();
    long common_radicand(const QuadExt& o) const;

    Rational a_, b_;
    long m_ = 1;
};

QuadExt abs(const QuadExt& x);

// Field traits used by the templated containers.
inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(const QuadExt& q) { return q.is_zero(); }
inline int sgn(const Rational& q) { return q.sgn(); }
inline int sgn(const QuadExt& q) { return q.sgn(); }
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const QuadExt& q) { return q.str(); }

template <class F> F field_cast(const Rational& q) { return F(q); }

}  // namespace exfeec

template <> struct std::hash<exfeec::Rational> {
    std::size_t operator()(const exfeec::Rational& q) const noexcept { return q.hash(); }
};
