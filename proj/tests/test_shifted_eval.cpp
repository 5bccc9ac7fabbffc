#include <doctest.h>

#include <random>

#include "sstar/shifted_eval.hpp"
#include "sstar/tableaux.hpp"

using namespace sstar;

namespace {

Rational rnd(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
    long a = num(rng);
    return Rational(a, den(rng));
}

EvalPoint random_point(std::mt19937_64& rng, int n) {
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) x.push_back(rnd(rng));
    return EvalPoint(x);
}

// Independent oracle: sum over all reverse tableaux of prod (x_T - c).
Rational tableau_oracle(const Partition& mu, const EvalPoint& x) {
    Rational total;
    for (const auto& t : enumerate_reverse(mu, x.size())) {
        Rational term(1);
        auto rows = t.rows();
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) term *= x.x[rows[i][j] - 1] - Rational(content(i, j));
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("small values") {
    CHECK(sstar_det({1, 1}, EvalPoint::parse("2,1"), 2) == Rational(3));
    CHECK(sstar_det({2}, EvalPoint::parse("1,1"), 2) == Rational(0));
    CHECK(sstar_comb({2}, EvalPoint::parse("3,2")) == Rational(12));
    CHECK(sstar_det({2}, EvalPoint::parse("3,2"), 2) == Rational(12));
    CHECK(sstar_comb({1, 1}, EvalPoint::parse("2,1")) == Rational(3));
    CHECK(sstar_comb({2, 1}, EvalPoint::parse("1")) == Rational(0));
    CHECK(sstar_det({2, 1}, EvalPoint::parse("1"), 1) == Rational(0));
    CHECK(sstar_at({2, 1}, {2, 1}) == Rational(3));
    for (const auto& mu : partitions_up_to(6)) CHECK(sstar_at(mu, mu) == Rational(hook_product(mu)));
}

TEST_CASE("coinciding shifted coordinates are reported, not divided by") {
    // x_1 - 1 = x_2 - 2
    CHECK_THROWS_AS(sstar_det({1}, EvalPoint::parse("0,1"), 2), SingularPoint);
    CHECK(sstar_comb({1}, EvalPoint::parse("0,1")) == Rational(1));
}

TEST_CASE("tableau sum matches an independent enumeration") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r < 5; ++r) {
            EvalPoint x = random_point(rng, n);
            for (const auto& mu : partitions_up_to(4)) CHECK(sstar_comb(mu, x) == tableau_oracle(mu, x));
        }
}

TEST_CASE("shifted symmetry") {
    std::mt19937_64 rng(12);
    for (int n = 2; n <= 4; ++n)
        for (int r = 0; r < 5; ++r) {
            EvalPoint x = random_point(rng, n);
            for (int i = 0; i + 1 < n; ++i) {
                EvalPoint y = x;
                y.x[i] = x.x[i + 1] - 1;
                y.x[i + 1] = x.x[i] + 1;
                for (const auto& mu : partitions_up_to(4)) CHECK(sstar_comb(mu, x) == sstar_comb(mu, y));
            }
        }
}

TEST_CASE("factorial polynomials are a shift of s* but not stable") {
    CHECK(factorial_t({1}, EvalPoint::parse("5/3"), 1) == Rational(5, 3));
    std::mt19937_64 rng(13);
    EvalPoint x = random_point(rng, 3);
    std::vector<Rational> y = x.x;
    for (int i = 0; i < 3; ++i) y[i] += Rational(2 - i);
    for (const auto& mu : partitions_up_to(4, 3)) CHECK(factorial_t(mu, EvalPoint(y), 3) == sstar_det(mu, x, 3));
    // t_(1)(x1, x2, 0) - t_(1)(x1, x2) = -3 identically
    EvalPoint two = EvalPoint::parse("7/2,1/3");
    CHECK(factorial_t({1}, EvalPoint(two.padded(3)), 3) != factorial_t({1}, two, 2));
}

TEST_CASE("signature points") {
    Signature s = Signature::parse("2,0,-1");
    Rational v = sstar_at_signature({2, 1}, s);
    CHECK(v == sstar_comb({2, 1}, EvalPoint::from(s)));
    CHECK(v == sstar_det({2, 1}, EvalPoint::from(s), 3));
}

TEST_CASE("ordinary Schur polynomials") {
    CHECK(schur_eval({1}, EvalPoint::parse("1/2,3,-1"), 3) == Rational(5, 2));
    CHECK(schur_eval({2}, EvalPoint::parse("1,1"), 2) == Rational(3));
    CHECK(schur_eval({1, 1}, EvalPoint::parse("1,1"), 2) == Rational(1));
    std::mt19937_64 rng(14);
    for (int r = 0; r < 5; ++r) {
        EvalPoint x = random_point(rng, 3);
        for (const auto& mu : partitions_up_to(4, 3)) CHECK(schur_eval(mu, x, 3) == ssyt_monomial_sum(mu, x.x, 3));
    }
}

TEST_CASE("generators") {
    CHECK(generator_eval(Generator::HStar, 2, EvalPoint::parse("3,2")) == Rational(12));
    CHECK(generator_eval(Generator::EStar, 2, EvalPoint::parse("2,1")) == Rational(3));
    EvalPoint x = EvalPoint::parse("1/2,-3,7/5");
    Rational sum = x.x[0] + x.x[1] + x.x[2];
    for (auto g : {Generator::HStar, Generator::EStar, Generator::PStar, Generator::PHat, Generator::PCheck})
        CHECK(generator_eval(g, 1, x) == sum);
    // H*(u)/H*(u-1) taken literally puts -p_k on top of p°_k
    CHECK(generator_eval(Generator::PCirc, 1, x) == -sum);
    CHECK(generator_eval(Generator::PCirc, 1, EvalPoint::parse("1")) == Rational(-1));
    for (int k = 0; k <= 4; ++k) {
        CHECK(generator_eval(Generator::HStar, k, x) == sstar_comb(Partition{k}, x));
        CHECK(generator_eval(Generator::EStar, k, x) ==
              sstar_comb(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), x));
    }
    CHECK(parse_generator("pcirc") == Generator::PCirc);
    CHECK_THROWS(parse_generator("q"));
}

TEST_CASE("generating series") {
    auto h = h_e_series(SeriesKind::H, EvalPoint::parse("3"), 4);
    CHECK(h == rational_fn_series({Rational(-1)}, {Rational(2)}, 4));
    auto e = h_e_series(SeriesKind::E, EvalPoint::parse("3"), 4);
    CHECK(e.coeffs() == std::vector<Rational>{1, 3, 0, 0, 0});
    CHECK(h_e_series(SeriesKind::H, EvalPoint(), 5) == TruncatedSeries::constant(1, 5));
    CHECK(h_e_series(SeriesKind::E, EvalPoint(), 5) == TruncatedSeries::constant(1, 5));
}

TEST_CASE("shifted-argument determinant") {
    for (const auto& mu : partitions_up_to(4))
        for (const auto& lambda : partitions_up_to(4)) {
            int n = std::max({mu.length(), lambda.length(), 1});
            CHECK(sstar_jt_shifted(mu, EvalPoint::from(lambda), n) == sstar_at(mu, lambda));
        }
}
