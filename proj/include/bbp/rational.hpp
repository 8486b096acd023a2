#ifndef BBP_RATIONAL_HPP
#define BBP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <iosfwd>

#include "bbp/errors.hpp"

namespace bbp {

using Integer = mpz_class;

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0.
// Every constructor normalizes, so equality is structural.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                     // NOLINT: implicit by design
    Rational(const Integer& n) : q_(n) {}           // NOLINT
    Rational(long num, long den) : q_(num, den) { canon(); }
    Rational(const Integer& num, const Integer& den) : q_(num, den) { canon(); }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "p/q", decimal ("0.25", "-3.5") and scientific ("1e-9") forms.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    Integer num() const { return Integer(q_.get_num()); }
    Integer den() const { return Integer(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;
    Rational pow(long k) const;

    Integer floor() const;
    Integer ceil() const;

    double to_double() const { return q_.get_d(); }
    // "p/q", the q omitted when 1.
    std::string str() const;

private:
    void canon();
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational pow2(long e) {
    if (e >= 0) {
        Integer n = 1;
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n);
    }
    Integer d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-e));
    return Rational(Integer(1), d);
}

} // namespace bbp

#endif
