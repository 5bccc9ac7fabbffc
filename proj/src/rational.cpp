#include "sstar/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sstar {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto integer = [&](std::string_view s) {
        s = trim(s);
        std::string digits(s);
        if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
        bool ok = !digits.empty();
        for (std::size_t i = 0; i < digits.size() && ok; ++i) {
            char c = digits[i];
            ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && digits.size() > 1);
        }
        if (!ok) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return Integer(digits);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(integer(text));
    return Rational(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    Integer r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        Integer nn(static_cast<signed long>(n));
        mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

Rational falling(const Rational& x, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= x - Rational(static_cast<long>(i));
    return r;
}

Rational raising(const Rational& x, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= x + Rational(static_cast<long>(i));
    return r;
}

}  // namespace sstar
