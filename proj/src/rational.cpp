#include "bbp/rational.hpp"

#include <cctype>
#include <ostream>

namespace bbp {

void Rational::canon() {
    if (q_.get_den() == 0) throw domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    bool neg = k < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
    if (neg && is_zero()) throw domain_error("zero to a negative power");
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return neg ? Rational(d, n) : Rational(n, d);
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

Integer Rational::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Plain or signed integer string -> Integer.
Integer parse_int(const std::string& s) {
    std::string t = s;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    if (!all_digits(t)) throw parse_error("bad integer literal: '" + s + "'");
    Integer v(t, 10);
    return neg ? Integer(-v) : v;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw parse_error("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer n = parse_int(s.substr(0, slash));
        Integer d = parse_int(s.substr(slash + 1));
        if (d == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rational(n, d);
    }

    // Decimal / scientific: mantissa [.frac] [e exp]
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    std::string digits = s;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        exp10 -= static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty() || digits == "+" || digits == "-") throw parse_error("bad rational literal: '" + text + "'");
    Integer mant = parse_int(digits);
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 >= 0 ? Rational(Integer(mant * p10)) : Rational(mant, p10);
}

} // namespace bbp
