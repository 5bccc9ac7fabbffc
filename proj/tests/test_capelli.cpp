#include <doctest.h>

#include <random>

#include "sstar/capelli.hpp"
#include "sstar/shifted_eval.hpp"
#include "sstar/weyl.hpp"

using namespace sstar;

namespace {

const MatrixShape one_by_one{1, 1};

Monomial xpow(int e) {
    Monomial m;
    for (int i = 0; i < e; ++i) m = m * Monomial::var(var_id(0, 0));
    return m;
}

MultiPoly poly1(int e) {
    MultiPoly p(one_by_one);
    p.add(xpow(e), 1);
    return p;
}

DiffOp term(MatrixShape shape, const Monomial& x, const Monomial& d, const Rational& c) {
    DiffOp op(shape);
    op.add(x, d, c);
    return op;
}

Monomial random_monomial(std::mt19937_64& rng, MatrixShape shape, int max_deg) {
    Monomial m;
    int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int t = 0; t < deg; ++t)
        m = m * Monomial::var(var_id(static_cast<int>(rng() % static_cast<unsigned>(shape.rows)),
                                     static_cast<int>(rng() % static_cast<unsigned>(shape.cols))));
    return m;
}

}  // namespace

TEST_CASE("operator action") {
    DiffOp euler = term(one_by_one, xpow(1), xpow(1), 1);
    for (int a = 0; a <= 4; ++a) CHECK(apply(euler, poly1(a)) == poly1(a) * Rational(a));
    CHECK(apply(DiffOp::derivative(one_by_one, 0, 0), MultiPoly::constant(one_by_one, 5)).is_zero());
    CHECK(apply(term(one_by_one, xpow(2), xpow(2), 1), poly1(3)) == poly1(3) * Rational(6));
}

TEST_CASE("normal ordering") {
    DiffOp x = DiffOp::multiplication(one_by_one, 0, 0), d = DiffOp::derivative(one_by_one, 0, 0);
    DiffOp euler = term(one_by_one, xpow(1), xpow(1), 1);
    CHECK(compose(d, x) == euler + DiffOp::identity(one_by_one));
    CHECK(compose(x, d) == euler);
    CHECK(compose(euler, euler) == term(one_by_one, xpow(2), xpow(2), 1) + euler);
}

TEST_CASE("composition agrees with successive application") {
    std::mt19937_64 rng(5);
    const MatrixShape shape{2, 2};
    for (int rep = 0; rep < 30; ++rep) {
        DiffOp a(shape), b(shape);
        for (int t = 0; t < 3; ++t) {
            a.add(random_monomial(rng, shape, 2), random_monomial(rng, shape, 2), Rational(static_cast<long>(rng() % 7) - 3));
            b.add(random_monomial(rng, shape, 2), random_monomial(rng, shape, 2), Rational(static_cast<long>(rng() % 5) + 1, 2));
        }
        MultiPoly p(shape);
        for (int t = 0; t < 4; ++t) p.add(random_monomial(rng, shape, 4), Rational(static_cast<long>(rng() % 9) - 4));
        CHECK(apply(compose(a, b), p) == apply(a, apply(b, p)));
    }
}

TEST_CASE("Capelli operators in the smallest cases") {
    CHECK(capelli_operator({1}, 1, 1) == term(one_by_one, xpow(1), xpow(1), 1));
    CHECK(capelli_operator({2}, 1, 1) == term(one_by_one, xpow(2), xpow(2), 1));
    CHECK(capelli_operator({}, 2, 2) == DiffOp::identity({2, 2}));
    CHECK_THROWS(capelli_operator({1, 1}, 1, 2));
}

TEST_CASE("classical Capelli operator is the sum of paired minors") {
    const MatrixShape shape{2, 2};
    DiffOp expected(shape);
    auto minor = [](int c0, int c1) {
        // x_{0,c0} x_{1,c1} - x_{0,c1} x_{1,c0} as a list of (monomial, sign)
        return std::vector<std::pair<Monomial, int>>{
            {Monomial::var(var_id(0, c0)) * Monomial::var(var_id(1, c1)), 1},
            {Monomial::var(var_id(0, c1)) * Monomial::var(var_id(1, c0)), -1}};
    };
    // rows of x and rows of ∂ both run over the single pair {0,1}; columns are paired
    std::vector<std::pair<Monomial, int>> xm = minor(0, 1);
    for (const auto& [mx, sx] : xm)
        for (const auto& [md, sd] : xm) expected.add(mx, md, Rational(sx * sd));
    CHECK(capelli_operator({1, 1}, 2, 2) == expected);
}

TEST_CASE("highest vectors") {
    CHECK(highest_vector({1}, 2, 3) == MultiPoly::variable({2, 3}, 0, 0));
    MultiPoly det = MultiPoly::variable({2, 2}, 0, 0) * MultiPoly::variable({2, 2}, 1, 1) -
                    MultiPoly::variable({2, 2}, 0, 1) * MultiPoly::variable({2, 2}, 1, 0);
    CHECK(highest_vector({1, 1}, 2, 2) == det);
    CHECK(highest_vector({2}, 2, 2) == power(MultiPoly::variable({2, 2}, 0, 0), 2));
}

TEST_CASE("eigenvalues") {
    for (int a = 0; a <= 5; ++a) {
        CHECK(eigen_check({1}, Partition{a}, 1, 1) == Rational(a));
        CHECK(eigen_check({2}, Partition{a}, 1, 1) == Rational(a * (a - 1)));
    }
    CHECK(eigen_check({1, 1}, {1, 1}, 2, 2) == Rational(2));
    CHECK(eigen_check({2, 1}, {2, 2}, 2, 3) == sstar_at({2, 1}, {2, 2}));
    MultiPoly not_eigen = MultiPoly::variable({2, 2}, 0, 0) + MultiPoly::variable({2, 2}, 0, 0) * MultiPoly::variable({2, 2}, 1, 1);
    CHECK_THROWS_AS(eigenvalue_on(capelli_operator({1}, 2, 2), not_eigen), NotEigenvector);
}

TEST_CASE("stability under restriction") {
    for (const auto& mu : partitions_up_to(2, 2))
        CHECK(capelli_operator(mu, 3, 3).restrict_to({2, 2}) == capelli_operator(mu, 2, 2));
}

TEST_CASE("annihilation of low degrees") {
    DiffOp op = capelli_operator({2, 1}, 2, 2);
    for (int d = 0; d < 3; ++d)
        for (const auto& m : monomials_of_degree({2, 2}, d)) {
            MultiPoly p({2, 2});
            p.add(m, 1);
            CHECK(apply(op, p).is_zero());
        }
    CHECK(monomials_of_degree({2, 2}, 2).size() == 10);
}

TEST_CASE("tensor power picture") {
    CHECK(schur_weyl_check(2, 2, {1}));
    CHECK(schur_weyl_check(2, 3, {2}));
    for (int l = 1; l <= 4; ++l)
        for (int k = 0; k <= l; ++k) {
            auto m = schur_weyl_lhs(1, l, Partition{k});
            REQUIRE(m.size() == 1);
            CHECK(m[0][0] == falling(Rational(l), static_cast<unsigned>(k)));
            CHECK(schur_weyl_rhs(1, l, Partition{k})[0][0] == m[0][0]);
        }
    CHECK_THROWS(schur_weyl_check(2, 13, {1}));
}
