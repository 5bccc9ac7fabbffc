#include <doctest.h>

#include "sstar/partition.hpp"

using namespace sstar;

TEST_CASE("partition parsing and validation") {
    CHECK(Partition::parse("3,2,0").str() == "3,2");
    CHECK(Partition::parse("").empty());
    CHECK_THROWS(Partition::parse("1,2"));
    CHECK_THROWS(Partition::parse("2,-1"));
    CHECK(Partition{3, 2}.size() == 5);
    CHECK(Partition{3, 2}[5] == 0);
}

TEST_CASE("conjugation") {
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
    CHECK(Partition{3}.conjugate() == Partition{1, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    for (const auto& mu : partitions_up_to(7)) CHECK(mu.conjugate().conjugate() == mu);
}

TEST_CASE("hooks and dimensions") {
    CHECK(hook_product({2, 1}) == 3);
    CHECK(hook_product({2, 2}) == 12);
    for (const auto& mu : partitions_up_to(7)) CHECK(hook_product(mu) == hook_product(mu.conjugate()));
    CHECK(dim_sym({2, 1}) == 2);
    CHECK(dim_sym({5}) == 1);
    CHECK(dim_sym({2, 2}) == 2);
    CHECK(up_factorial(2, {2, 1}) == 6);
    for (int k = 0; k <= 5; ++k) {
        CHECK(Rational(up_factorial(4, Partition{k})) == raising(Rational(4), static_cast<unsigned>(k)));
        CHECK(Rational(up_factorial(4, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)))) ==
              falling(Rational(4), static_cast<unsigned>(k)));
    }
    CHECK(dim_gl(2, {2, 1}) == 2);
    CHECK(dim_gl(1, {4}) == 1);
    CHECK(dim_gl(2, {1}) == 2);
    CHECK_THROWS(dim_gl(1, {1, 1}));
    CHECK(dim_gl(Signature::parse("2,0,-1")) == dim_gl(3, {3, 1}));
}

TEST_CASE("dim_sym matches standard tableau enumeration") {
    for (const auto& mu : partitions_up_to(8)) CHECK(Integer(dim_sym(mu)) == syt_count_skew(mu, {}));
}

TEST_CASE("skew tableau counts") {
    CHECK(syt_count_skew({2, 1}, {1}) == 2);
    CHECK(syt_count_skew({3, 2}, {2}) == 3);
    CHECK(syt_count_skew({3, 1}, {3, 1}) == 1);
    CHECK(syt_count_skew({2}, {1, 1}) == 0);
    CHECK(SkewShape::parse("3,2/2").size() == 3);
}

TEST_CASE("enumeration order") {
    auto p = partitions_of(3);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Partition{3});
    CHECK(p[1] == Partition{2, 1});
    CHECK(p[2] == Partition{1, 1, 1});
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(6, 2).size() == 4);
    CHECK(subpartitions({2, 1}).size() == 5);
}

TEST_CASE("interlacing and successors") {
    auto a = interlacing(Signature::parse("2,1"));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Signature({2}));
    CHECK(a[1] == Signature({1}));
    CHECK(interlacing(Signature::parse("1,1")).size() == 1);
    CHECK(interlacing(Signature::parse("2,0")).size() == 3);
    CHECK(successors({}) == std::vector<Partition>{{1}});
    CHECK(successors({1}) == std::vector<Partition>{{2}, {1, 1}});
    CHECK(successors({2, 1}) == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
}
