#include "doctest.h"
#include "oracle.hpp"

#include <nilorb/partition.hpp>

using namespace nilorb;

namespace {

ClassicalFamily fam(char c, int n) { return ClassicalFamily(family_from_char(c), n); }

}

TEST_CASE("construction and parsing")
{
    CHECK(Partition({3, 0, 2, 2}).parts() == std::vector<int>{3, 2, 2});
    CHECK(parse_partition("[3,2,2]") == Partition{3, 2, 2});
    CHECK(parse_partition("[3,2^2]") == Partition{3, 2, 2});
    CHECK(parse_partition("3,2,2") == Partition{3, 2, 2});
    CHECK(parse_partition("[13,1^3]") == Partition{13, 1, 1, 1});
    CHECK(parse_partition("(3,3,1)") == Partition{3, 2, 2});
    CHECK(to_string(Partition{7, 1, 1}) == "[7,1,1]");
    CHECK_THROWS_AS(parse_partition("[3,x]"), Error);
    CHECK(Partition({1, 2}) == Partition{2, 1});
    CHECK_THROWS_AS(Partition({3, -1}), Error);
}

TEST_CASE("transpose is an involution and reverses dominance")
{
    for (int n = 1; n <= 14; ++n) {
        auto all = partitions_of(n);
        CHECK(all.size() == oracle::partitions(n).size());
        for (const auto& p : all) CHECK(transpose(transpose(p)) == p);
    }
    for (int n = 1; n <= 9; ++n) {
        auto all = partitions_of(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                CHECK(dominates(a, b) == oracle::dominates(a.parts(), b.parts()));
                CHECK(dominates(a, b) == dominates(transpose(b), transpose(a)));
            }
    }
    CHECK(transpose(Partition{3, 2, 2}) == Partition{3, 3, 1});
}

TEST_CASE("columns round trip")
{
    for (const auto& p : partitions_of(10)) CHECK(from_columns(columns(p)) == p);
    CHECK(columns_string(Partition{3, 2, 2}) == "(3,3,1)");
}

TEST_CASE("validity")
{
    CHECK(is_valid(Partition{3, 2, 2}, fam('B', 7)));
    CHECK_FALSE(is_valid(Partition{4, 2, 1}, fam('B', 7)));
    CHECK(is_valid(Partition{2, 2, 1, 1}, fam('C', 6)));
    CHECK_FALSE(is_valid(Partition{3, 1, 1, 1}, fam('C', 6)));
    CHECK(is_valid(Partition{3, 1, 1, 1}, fam('D', 6)));
    CHECK_THROWS_AS(is_valid(Partition{3, 2, 2}, fam('B', 9)), Error);
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n))
            for (char c : {'B', 'C', 'D'}) {
                if (c == 'C' && n % 2) continue;
                if (c == 'B' && n % 2 == 0) continue;
                if (c == 'D' && n % 2) continue;
                CHECK(is_valid(p, fam(c, n)) == oracle::valid(p.parts(), c));
            }
}

TEST_CASE("collapse against exhaustive search")
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n))
            for (char c : {'B', 'C', 'D'}) {
                bool odd = c == 'B';
                if ((n % 2 == 1) != odd) continue;
                auto got = collapse(p, fam(c, n));
                CHECK(got.parts() == oracle::collapse(p.parts(), c));
                CHECK(is_valid(got, fam(c, n)));
                if (is_valid(p, fam(c, n))) CHECK(got == p);
            }
    CHECK(collapse(Partition{4, 2, 1}, fam('B', 7)) == Partition{3, 3, 1});
    CHECK(collapse(Partition{3, 3}, fam('C', 6)) == Partition{3, 3});
    CHECK(collapse(Partition{3, 1, 1, 1}, fam('C', 6)) == Partition{2, 2, 1, 1});
}

TEST_CASE("size mismatch")
{
    CHECK_THROWS_AS(collapse(Partition{3, 2}, fam('B', 7)), Error);
    CHECK_THROWS_AS(ClassicalFamily(Family::D, 7), Error);
}
