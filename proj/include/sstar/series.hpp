#pragma once

#include <vector>

#include "sstar/rational.hpp"

namespace sstar {

// Truncated power series in u^{-1}: coeff(j) is the coefficient of u^{-j},
// kept for j = 0..order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order);
    TruncatedSeries(unsigned order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, unsigned order);
    // 1/(u - a) = sum_{j>=0} a^j u^{-(j+1)}
    static TruncatedSeries inverse_linear(const Rational& a, unsigned order);

    unsigned order() const { return order_; }
    const Rational& coeff(unsigned j) const { return c_.at(j); }
    Rational& coeff(unsigned j) { return c_.at(j); }
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries truncate(unsigned order) const;
    TruncatedSeries reciprocal() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& s);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    unsigned order_;
    std::vector<Rational> c_;
};

// sum_r coeffs[r] / (u)↓r, expanded in u^{-1} through u^{-order}.
TruncatedSeries inverse_falling_to_powers(const std::vector<Rational>& coeffs, unsigned order);
// The triangular inverse: coefficients c_0..c_order with s = sum_r c_r/(u)↓r.
std::vector<Rational> powers_to_inverse_falling(const TruncatedSeries& s);

// prod (u - a_i) / prod (u - b_i); the two root lists must have equal length.
TruncatedSeries rational_fn_series(const std::vector<Rational>& numer_roots,
                                   const std::vector<Rational>& denom_roots, unsigned order);

}  // namespace sstar
