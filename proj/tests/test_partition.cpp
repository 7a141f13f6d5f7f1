#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schurq/errors.hpp"
#include "schurq/partition.hpp"
#include "test_support.hpp"

using namespace schurq;
using testsupport::sp;

TEST_CASE("parsing and printing round-trip") {
    CHECK(sp("6,5,2,1").parts() == std::vector<int>{6, 5, 2, 1});
    CHECK(sp("0").empty());
    CHECK(sp("0").str() == "0");
    CHECK(sp("9,7,4").str() == "9,7,4");
    CHECK(sp("3").length() == 1);
    CHECK(StrictPartition::parse(sp("8,6,5,3,2").str()) == sp("8,6,5,3,2"));
}

TEST_CASE("invalid literals are rejected") {
    CHECK_THROWS_AS(sp("3,3"), ParseError);     // repeated part
    CHECK_THROWS_AS(sp("1,2"), ParseError);     // increasing
    CHECK_THROWS_AS(sp("3,0"), ParseError);     // zero part
    CHECK_THROWS_AS(sp("-2"), ParseError);      // negative
    CHECK_THROWS_AS(sp("3,"), ParseError);      // trailing comma
    CHECK_THROWS_AS(sp(""), ParseError);        // empty string
    CHECK_THROWS_AS(sp("a,1"), ParseError);     // garbage
    CHECK_THROWS_AS(sp("3 2"), ParseError);     // wrong separator
    CHECK_THROWS_AS(StrictPartition({4, 4, 1}), InvalidPartition);
    CHECK_THROWS_AS(StrictPartition({0}), InvalidPartition);
}

TEST_CASE("parts beyond the length read as zero") {
    StrictPartition p = sp("5,2");
    CHECK(p.part(1) == 5);
    CHECK(p.part(2) == 2);
    CHECK(p.part(3) == 0);
    CHECK(p.part(100) == 0);
    CHECK(p.sum() == 7);
}

TEST_CASE("lexicographic order pads with zeros") {
    CHECK(sp("5,2,1") > sp("5,2"));
    CHECK(sp("5,3") > sp("5,2,1"));
    CHECK(sp("6") > sp("5,4,3"));
    CHECK(sp("0") < sp("1"));
    CHECK(!(sp("4,2") < sp("4,2")));
}

TEST_CASE("containment is componentwise") {
    CHECK(sp("6,4,1").contains(sp("5,2")));
    CHECK(sp("6,4,1").contains(sp("0")));
    CHECK(!sp("6,4,1").contains(sp("7")));
    CHECK(!sp("6,4").contains(sp("5,2,1")));
    CHECK(sp("3,1").contains(sp("3,1")));
}

TEST_CASE("multiset difference of parts") {
    CHECK(partition_difference(sp("9,7,5,4,3,1"), sp("5,3,1")) == sp("9,7,4"));
    CHECK(partition_difference(sp("4,3,2,1"), sp("3,2")) == sp("4,1"));
    CHECK(partition_difference(sp("3,1"), sp("0")) == sp("3,1"));
    CHECK(partition_difference(sp("3,1"), sp("3,1")) == sp("0"));
    CHECK_THROWS_AS(partition_difference(sp("4,2"), sp("3")), NotSubset);
}

TEST_CASE("staircase detection") {
    CHECK(is_staircase(sp("4,3,2,1")));
    CHECK(is_staircase(sp("1")));
    CHECK(is_staircase(sp("0")));
    CHECK(!is_staircase(sp("4,3,1")));
    CHECK(!is_staircase(sp("5,4,3,2")));
}

TEST_CASE("strict partitions of n, lex descending") {
    auto of8 = strict_partitions_of(8);
    REQUIRE(of8.size() == 6);
    CHECK(of8.front() == sp("8"));
    CHECK(of8.back() == sp("4,3,1"));
    for (size_t i = 1; i < of8.size(); ++i) CHECK(of8[i - 1] > of8[i]);

    CHECK(strict_partitions_of(0).size() == 1);
    CHECK(strict_partitions_of(0).front().empty());
    CHECK(strict_partitions_of(1).size() == 1);
    CHECK(strict_partitions_of(2).size() == 1);  // only (2): 1+1 is not strict
    CHECK(strict_partitions_of(6).size() == 4);  // 6; 5,1; 4,2; 3,2,1
}

TEST_CASE("contained subpartitions") {
    auto subs = strict_subpartitions(sp("3,1"));
    std::set<std::vector<int>> got;
    for (const auto& p : subs) got.insert(p.parts());
    std::set<std::vector<int>> want = {{}, {1}, {2}, {3}, {2, 1}, {3, 1}};
    CHECK(got == want);

    for (const auto& p : strict_subpartitions(sp("5,3,2"))) {
        CHECK(sp("5,3,2").contains(p));
    }
    CHECK(strict_subpartitions(sp("0")).size() == 1);
}
