#include <doctest.h>

#include "sstar/tableaux.hpp"

using namespace sstar;

TEST_CASE("reverse tableau counts") {
    CHECK(enumerate_reverse({1}, 2).size() == 2);
    CHECK(enumerate_reverse({1, 1}, 2).size() == 1);
    CHECK(enumerate_reverse({2, 1}, 2).size() == 2);
    CHECK(enumerate_reverse({1, 1, 1}, 2).empty());
    CHECK(enumerate_reverse({}, 3).size() == 1);
}

TEST_CASE("reverse tableaux are row-weakly and column-strictly decreasing") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_up_to(5, n)) {
            auto all = enumerate_reverse(mu, n);
            CHECK(Integer(static_cast<long>(all.size())) == dim_gl(n, mu));
            for (const auto& t : all) {
                auto rows = t.rows();
                for (std::size_t i = 0; i < rows.size(); ++i)
                    for (std::size_t j = 0; j < rows[i].size(); ++j) {
                        CHECK(rows[i][j] >= 1);
                        CHECK(rows[i][j] <= n);
                        if (j > 0) CHECK(rows[i][j - 1] >= rows[i][j]);
                        if (i > 0) CHECK(rows[i - 1][j] > rows[i][j]);
                    }
            }
        }
}

TEST_CASE("SSYT counts") {
    CHECK(enumerate_ssyt({1}, 3).size() == 3);
    CHECK(enumerate_ssyt({2}, 2).size() == 3);
    CHECK(enumerate_ssyt({1, 1}, 2).size() == 1);
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_up_to(5, n))
            CHECK(Integer(static_cast<long>(enumerate_ssyt(mu, n).size())) == dim_gl(n, mu));
}

TEST_CASE("streams yield the same tableaux as the eager enumerations") {
    ReverseTableauStream rs({3, 1}, 3);
    std::size_t count = 0;
    while (rs.next()) ++count;
    CHECK(count == enumerate_reverse({3, 1}, 3).size());
    SSYTStream ss({2, 2}, 3);
    count = 0;
    while (ss.next()) ++count;
    CHECK(count == 6);
}

TEST_CASE("monomial sum") {
    CHECK(ssyt_monomial_sum({2}, {1, 1}, 2) == Rational(3));
    CHECK(ssyt_monomial_sum({1, 1}, {1, 1}, 2) == Rational(1));
    CHECK(ssyt_monomial_sum({1}, {Rational(1, 2), Rational(-3), Rational(7)}, 3) == Rational(9, 2));
}
