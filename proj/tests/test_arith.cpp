#include <doctest.h>

#include <random>

#include "sstar/rational.hpp"
#include "sstar/series.hpp"

using namespace sstar;

TEST_CASE("rational normalization and text form") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational::parse("-22/6") == Rational(-11, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("falling and raising factorials") {
    CHECK(falling(Rational(5), 2) == Rational(20));
    CHECK(falling(Rational(7, 3), 0) == Rational(1));
    CHECK(falling(Rational(3), 5) == Rational(0));
    CHECK(raising(Rational(2), 3) == Rational(24));
    CHECK(raising(Rational(-4, 5), 0) == Rational(1));
    CHECK(raising(Rational(-1), 3) == Rational(0));
    CHECK(falling(Rational(-2), 3) == Rational(-24));
}

TEST_CASE("binomials and factorials") {
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-2, 3) == -4);
}

namespace {
// Direct Laurent expansion of 1/(u↓r): product of geometric series in u^{-1}.
TruncatedSeries inverse_falling_oracle(unsigned r, unsigned order) {
    TruncatedSeries s = TruncatedSeries::constant(1, order);
    for (unsigned i = 0; i < r; ++i) s = s * TruncatedSeries::inverse_linear(Rational(static_cast<long>(i)), order);
    return s;
}
}  // namespace

TEST_CASE("inverse falling basis") {
    CHECK(inverse_falling_to_powers({1}, 4) == TruncatedSeries::constant(1, 4));
    CHECK(inverse_falling_to_powers({0, 1}, 2).coeffs() == std::vector<Rational>{0, 1, 0});
    // h*_r(3) = 3↓r for one variable; the series is (u+1)/(u-2)
    auto s = inverse_falling_to_powers({1, 3, 6, 6}, 3);
    CHECK(s == rational_fn_series({Rational(-1)}, {Rational(2)}, 3));
    CHECK(s.coeffs() == std::vector<Rational>{1, 3, 6, 12});

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rational> c;
        for (int i = 0; i < 6; ++i) c.push_back(Rational(d(rng), 1 + rep));
        TruncatedSeries expected(7);
        for (unsigned r = 0; r < c.size(); ++r) expected += inverse_falling_oracle(r, 7) * c[r];
        CHECK(inverse_falling_to_powers(c, 7) == expected);
        auto back = powers_to_inverse_falling(expected);
        for (unsigned r = 0; r < c.size(); ++r) CHECK(back[r] == c[r]);
        for (unsigned r = static_cast<unsigned>(c.size()); r < back.size(); ++r) CHECK(back[r].is_zero());
    }
}

TEST_CASE("rational function series") {
    CHECK(rational_fn_series({0, 0}, {0, 0}, 5) == TruncatedSeries::constant(1, 5));
    // E*(u) for one variable at 3: (u+3)/u = 1 + 3/u
    auto e = rational_fn_series({Rational(-3)}, {Rational(0)}, 5);
    CHECK(e.coeffs() == std::vector<Rational>{1, 3, 0, 0, 0, 0});
    CHECK_THROWS_AS(rational_fn_series({1}, {}, 3), std::invalid_argument);
    auto f = rational_fn_series({Rational(1, 2), Rational(-3)}, {Rational(2), Rational(5, 7)}, 6);
    CHECK(f * f.reciprocal() == TruncatedSeries::constant(1, 6));
}
