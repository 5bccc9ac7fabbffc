#include <doctest.h>

#include "sstar/symmetrization.hpp"

using namespace sstar;

namespace {

RationalMatrix mat(std::vector<std::vector<long>> v) {
    RationalMatrix m;
    for (auto& row : v) {
        m.emplace_back();
        for (long x : row) m.back().push_back(Rational(x));
    }
    return m;
}

}  // namespace

TEST_CASE("word parsing") {
    auto w = GeneratorWord::parse("11,22,12", 2);
    CHECK(w.length() == 3);
    CHECK(w.letters[2] == std::pair{0, 1});
    CHECK(w.str() == "11,22,12");
    CHECK(GeneratorWord::parse("10.3", 12).letters[0] == std::pair{9, 2});
    CHECK_THROWS(GeneratorWord::parse("13", 2));
}

TEST_CASE("set partitions") {
    CHECK(set_partitions(0).size() == 1);
    CHECK(set_partitions(3).size() == 5);
    CHECK(set_partitions(5).size() == 52);
}

TEST_CASE("generator action") {
    const MatrixShape s1{1, 1};
    DiffOp e11(s1);
    e11.add(evar(0, 0), evar(0, 0), 1);
    CHECK(r_map(GeneratorWord::parse("11", 1), 1) == e11);
    CHECK(r_map(GeneratorWord{2, {}}, 2) == DiffOp::identity({2, 2}));
}

TEST_CASE("Casimir eigenvalue") {
    DiffOp c = r_map(casimir_word(2), 2, 2);
    CHECK(eigenvalue_on(c, highest_vector({2, 1}, 2, 2)) == Rational(6));
}

TEST_CASE("symmetrization in low degree") {
    MultiPoly e12(MatrixShape{2, 2});
    e12.add(evar(0, 1), 1);
    CHECK(sigma(e12, 2, 2) == r_map(GeneratorWord::parse("12", 2), 2));
    CHECK(sigma(s_mu_element({1}, 3), 3, 3) == capelli_operator({1}, 3, 3));
    CHECK(sigma(s_mu_element({2}, 2), 2, 2) == capelli_operator({2}, 2, 2));
    CHECK(sigma(s_mu_element({1, 1}, 2), 2, 2) == capelli_operator({1, 1}, 2, 2));
}

TEST_CASE("inverse symmetrization") {
    CHECK(sigma_inverse(GeneratorWord::parse("12", 2)) == word_as_monomial(GeneratorWord::parse("12", 2)));
    // A1∘A2 ↦ A1 A2 + <A1 A2>
    auto w = GeneratorWord::parse("12,21", 2);
    MultiPoly expected = word_as_monomial(w);
    expected.add(evar(0, 0), 1);
    CHECK(sigma_inverse(w) == expected);
    for (const auto& text : {"11,22,12", "12,21,11", "21,12"}) {
        auto v = GeneratorWord::parse(text, 2);
        CHECK(r_map(v, 2) == sigma(sigma_inverse(v), 2, 2));
        CHECK(sigma_inverse(sigma_words(word_as_monomial(v), 2), 2) == word_as_monomial(v));
    }
}

TEST_CASE("matrix powers") {
    auto a = mat({{1, 2}, {-3, 5}});
    for (int k = 1; k <= 3; ++k) CHECK(sigma_power_check(a, k));
    // k = 2: σ(A²) = A∘A - <A²>
    DiffOp la = r_linear(a, 2);
    RationalMatrix sq(2, std::vector<Rational>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int t = 0; t < 2; ++t) sq[i][j] += a[i][t] * a[t][j];
    CHECK(sigma(matrix_power_element(a, 2), 2, 2) == compose(la, la) - r_linear(sq, 2));
    auto id = mat({{1, 0}, {0, 1}});
    auto rep = sigma_power_report(id, 2);
    CHECK(rep.idempotent);
    CHECK(rep.idempotent_formula);
    CHECK(sigma_power_report(a, 1).power_formula);
}
