#include <doctest.h>

#include "sstar/characters.hpp"
#include "sstar/lambda_star.hpp"

using namespace sstar;

TEST_CASE("z factors") {
    CHECK(z_factor({1, 1}) == 2);
    CHECK(z_factor({2}) == 2);
    CHECK(z_factor({2, 1}) == 2);
    CHECK(z_factor({2, 2, 1}) == 8);
}

TEST_CASE("Murnaghan-Nakayama") {
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    for (const auto& rho : partitions_of(5)) CHECK(mn_character({5}, rho) == 1);
    for (const auto& lambda : partitions_up_to(7)) CHECK(mn_character(lambda, pad_with_ones({}, lambda.size())) == dim_sym(lambda));
}

TEST_CASE("cycle types") {
    CHECK(cycle_type({0, 1, 2}) == Partition{1, 1, 1});
    CHECK(cycle_type({1, 2, 0}) == Partition{3});
    CHECK(cycle_type({1, 0, 3, 2, 4}) == Partition{2, 2, 1});
}

TEST_CASE("character table orthogonality") {
    for (int k = 1; k <= 6; ++k) {
        CharTable t = CharTable::build(k);
        for (std::size_t a = 0; a < t.parts.size(); ++a) {
            Rational norm;
            for (std::size_t c = 0; c < t.parts.size(); ++c)
                norm += Rational(Integer(t.values[a][c] * t.values[a][c])) / Rational(z_factor(t.parts[c]));
            CHECK(norm == Rational(1));
        }
    }
}

TEST_CASE("characters on small cycles from s* values") {
    CHECK(char_small_cycles({2, 1}, {2}) == 0);
    CHECK(char_small_cycles({3}, {2}) == 1);
    for (const auto& lambda : partitions_up_to(6)) CHECK(char_small_cycles(lambda, {}) == dim_sym(lambda));
    for (int l = 1; l <= 6; ++l)
        for (const auto& lambda : partitions_of(l))
            for (int k = 1; k <= std::min(3, l); ++k)
                for (const auto& rho : partitions_of(k))
                    CHECK(char_small_cycles(lambda, rho) == mn_character(lambda, pad_with_ones(rho, l)));
}

TEST_CASE("Gibbs eigenvalues") {
    CHECK(gibbs_eigenvalue({2, 1}, {1}) == Rational(3));
    CHECK(gibbs_eigenvalue({3}, {2}) == Rational(6));
    CHECK(gibbs_eigenvalue({2, 1}, {2}) == Rational(0));
    CHECK(psharp({2})({2, 1}) == Rational(0));
    for (const auto& lambda : partitions_up_to(5))
        if (!lambda.empty()) CHECK(gibbs_eigenvalue(lambda, {1}) == Rational(lambda.size()));
}
