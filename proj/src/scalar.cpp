// SPDX-License-Identifier: Apache-2.0
#include "exfeec/scalar.hpp"

#include <cctype>

namespace exfeec {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string p = text.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q) || q[0] == '-' || q[0] == '+')
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (p[0] == '+') p.erase(0, 1);
    mpz_class num(p, 10), den(q, 10);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

void Rational::submul(const Rational& b, const Rational& c) {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

void Rational::addmul(const Rational& b, const Rational& c) {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), b.v_.get_mpq_t(), c.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

std::size_t Rational::hash() const {
    std::size_t h = std::hash<std::string>{}(v_.get_num().get_str(16));
    return h ^ (std::hash<std::string>{}(v_.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational factorial(int n) {
    if (n < 0) throw std::domain_error("negative factorial");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational abs(const Rational& q) { return q.sgn() < 0 ? -q : q; }

Rational pow(const Rational& q, int e) {
    if (e < 0) return pow(Rational(1) / q, -e);
    Rational r(1), b = q;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

QuadExt::QuadExt(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
    if (m <= 0) throw std::domain_error("radicand must be positive");
    normalize();
}

void QuadExt::normalize() {
    if (b_.is_zero()) {
        m_ = 1;
        return;
    }
    long square = 1;
    for (long f = 2; f * f <= m_; ++f)
        while (m_ % (f * f) == 0) {
            m_ /= f * f;
            square *= f;
        }
    b_ *= Rational(square);
    if (m_ == 1) {
        a_ += b_;
        b_ = Rational(0);
    }
}

long QuadExt::common_radicand(const QuadExt& o) const {
    if (b_.is_zero()) return o.m_;
    if (o.b_.is_zero() || o.m_ == m_) return m_;
    throw RadicandMismatch("radicand mismatch: sqrt(" + std::to_string(m_) + ") vs sqrt(" +
                           std::to_string(o.m_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    m_ = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_.is_zero()) m_ = 1;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    m_ = common_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_.is_zero()) m_ = 1;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long m = common_radicand(o);
    Rational a = a_ * o.a_;
    a.addmul(b_ * o.b_, Rational(m));
    Rational b = a_ * o.b_;
    b.addmul(b_, o.a_);
    a_ = std::move(a);
    b_ = std::move(b);
    m_ = m;
    if (b_.is_zero()) m_ = 1;
    return *this;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational norm = a_ * a_ - b_ * b_ * Rational(m_);
    return QuadExt(a_ / norm, -b_ / norm, m_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

int QuadExt::sgn() const {
    int sa = a_.sgn(), sb = b_.sgn();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 m
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(m_);
    return lhs > rhs ? sa : sb;
}

Rational QuadExt::to_rational() const {
    if (!b_.is_zero()) throw std::domain_error("value is irrational: " + str());
    return a_;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str();
    std::string b = b_.str();
    if (!s.empty() && b_.sgn() > 0) s += "+";
    return s + b + "*sqrt(" + std::to_string(m_) + ")";
}

QuadExt abs(const QuadExt& x) { return x.sgn() < 0 ? -x : x; }

}  // namespace exfeec
