#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "schurq/cells.hpp"
#include "schurq/errors.hpp"
#include "schurq/shapes.hpp"
#include "test_support.hpp"

using namespace schurq;
using testsupport::cells_of;
using testsupport::shape;
using testsupport::sp;

TEST_CASE("shifted diagram cells") {
    CHECK(shifted_cells(sp("3,2,1")) ==
          cells_of({{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}));
    CHECK(shifted_cells(sp("2")) == cells_of({{1, 1}, {1, 2}}));
    CHECK(shifted_cells(sp("0")).empty());
}

TEST_CASE("skew shape literals and cells") {
    SkewShape s = shape("6,5,2,1/4,3");
    CHECK(s.outer() == sp("6,5,2,1"));
    CHECK(s.inner() == sp("4,3"));
    CHECK(s.str() == "6,5,2,1/4,3");
    CHECK(shape("3,1").str() == "3,1");
    CHECK(shape("3,1").inner().empty());
    CHECK(s.cells() == cells_of({{1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {4, 4}}));
    CHECK(s.cell_count() == 7);

    CHECK(!shape("3,1/3,2").is_valid());  // (3,2) not contained in (3,1)
    CHECK_THROWS_AS(shape("3,1/3,2").cells(), InvalidShape);
    CHECK(shape("3,1/3,1").is_valid());
    CHECK(shape("3,1/3,1").cells().empty());
}

TEST_CASE("reading order and components") {
    CellSet skew = shape("6,5,2,1/4,3").cells();
    auto order = skew.reading_order();
    REQUIRE(order.size() == 7);
    CHECK(order.front() == Cell{4, 4});
    CHECK(order.back() == Cell{1, 6});

    auto comps = components(skew);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == cells_of({{3, 3}, {3, 4}, {4, 4}}));
    CHECK(comps[1] == cells_of({{1, 5}, {1, 6}, {2, 5}, {2, 6}}));
}

TEST_CASE("corners and corner removals") {
    CHECK(corners(shifted_cells(sp("3,2,1"))) == std::vector<Cell>{{3, 3}});

    auto removals = corner_removals(sp("6,5,2,1"));
    REQUIRE(removals.size() == 2);
    CHECK(std::count(removals.begin(), removals.end(), sp("6,4,2,1")) == 1);
    CHECK(std::count(removals.begin(), removals.end(), sp("6,5,2")) == 1);

    // Against a brute-force oracle: delete the corner cell and re-read.
    for (int n = 1; n <= 8; ++n) {
        for (const StrictPartition& lambda : strict_partitions_of(n)) {
            CellSet d = shifted_cells(lambda);
            auto cs = corners(d);
            auto rems = corner_removals(lambda);
            REQUIRE(cs.size() == rems.size());
            for (size_t i = 0; i < cs.size(); ++i) {
                CellSet rest = d;
                rest.erase(cs[i]);
                auto reread = read_skew_shape(rest);
                REQUIRE(reread.has_value());
                CHECK(reread->inner().empty());
                CHECK(reread->outer() == rems[i]);
            }
        }
    }
}

TEST_CASE("border cells and border strips") {
    CellSet b = border(sp("6,4,3,2,1"));
    CHECK(b == cells_of({{1, 5}, {1, 6}, {2, 5}, {3, 5}, {4, 5}, {5, 5}}));
    CHECK(is_border_strip(b));
    CHECK(strip_first_box(b) == Cell{1, 6});
    CHECK(strip_last_box(b) == Cell{5, 5});

    CellSet two = cells_of({{1, 5}, {1, 6}, {3, 3}, {3, 4}});
    CHECK(!is_border_strip(two));       // disconnected
    CHECK(is_broken_border_strip(two));
    CHECK(broken_strip_first_box(two) == Cell{1, 6});  // rightmost component
    CHECK(broken_strip_last_box(two) == Cell{3, 3});   // leftmost component

    CHECK(!is_broken_border_strip(cells_of({{1, 1}, {1, 2}, {2, 2}, {2, 1}})));  // 2x2 block

    // Removing the full border of a straight shape leaves a straight shape.
    CHECK(read_straight_shape(shifted_cells(sp("6,4,3,2,1")).set_minus(b)) == sp("4,3,2,1"));
}

TEST_CASE("reading cell sets back into shapes") {
    CHECK(read_skew_shape(shape("6,5,2,1/4,3").cells()) == shape("6,5,2,1/4,3"));
    CHECK(read_skew_shape(cells_of({{1, 3}, {2, 3}})) == shape("3,2/2,1"));
    CHECK(read_skew_shape(CellSet{}) == shape("0/0"));

    // Empty rows are filled in minimally, bottom-up.
    CHECK(read_skew_shape(cells_of({{1, 4}, {3, 3}})) == shape("4,2,1/3,2"));

    CHECK(!read_skew_shape(cells_of({{1, 1}, {1, 3}})).has_value());  // gap in a row
    CHECK(!read_skew_shape(cells_of({{2, 1}})).has_value());          // below the diagonal
    CHECK(!read_skew_shape(cells_of({{1, 1}, {2, 1}})).has_value());  // column below diagonal
    CHECK(!read_skew_shape(cells_of({{1, 1}, {1, 2}, {2, 2}, {2, 3}})).has_value());

    CHECK(read_straight_shape(shifted_cells(sp("5,3,2"))) == sp("5,3,2"));
    CHECK_THROWS_AS(read_straight_shape(shape("4,1/2").cells()), NotRealizable);
}

TEST_CASE("basic shape recognition") {
    CHECK(is_basic(shape("6,5,2,1/4,3")));
    CHECK(is_basic(shape("3,1")));
    CHECK(is_basic(shape("0")));
    CHECK(!is_basic(shape("5,1/3")));        // empty column inside
    CHECK(!is_basic(shape("6,5,2,1/6,5")));  // empty rows on top
    CHECK(!is_basic(shape("3,2/2,1")));      // equal lengths
    CHECK(!is_basic(shape("3,1/3,2")));      // not even contained
}

TEST_CASE("normalization to basic shapes") {
    CHECK(normalize_basic(shape("5,1/3")) == shape("4,1/2"));
    CHECK(normalize_basic(shape("6,5,2,1/6,5")) == shape("2,1"));
    CHECK(normalize_basic(shape("5,4,3,2,1/5,3,2")) == shape("4,3,2,1/3,2"));
    CHECK(normalize_basic(shape("3,1/3,1")) == shape("0/0"));
    CHECK(normalize_basic(shape("6,5,2,1/4,3")) == shape("6,5,2,1/4,3"));  // fixpoint
    CHECK(normalize_basic(shape("3,2/2,1")) == shape("2,1/1"));

    for (const char* literal : {"5,1/3", "6,5,2,1/6,5", "5,4,3,2,1/5,3,2", "7,4,2/6,1",
                                "8,7,3/7,4", "4,2/2,1", "9,6,5,1/8,4,2"}) {
        SkewShape raw = shape(literal);
        SkewShape basic = normalize_basic(raw);
        CHECK(is_basic(basic));
        CHECK(basic.cell_count() == raw.cell_count());
        // Removing empty rows and columns must not change the Q-function.
        CHECK(testsupport::oracle_decompose(raw) == testsupport::oracle_decompose(basic));
    }
}

TEST_CASE("orthogonal transpose") {
    CHECK(orthogonal_transpose_cells(shifted_cells(sp("2"))) == cells_of({{1, 2}, {2, 2}}));
    CHECK(orthogonal_transpose(shape("2")) == shape("2,1/1"));
    CHECK(orthogonal_transpose(shape("4,1/2")) == shape("4,3,1/3,2"));
    CHECK(orthogonal_transpose(shape("4,3,1/3,2")) == shape("4,1/2"));
    CHECK(orthogonal_transpose_cells(shape("5,4,3,2,1/5,3,2").cells()) ==
          shifted_cells(sp("4,1")));
    CHECK(orthogonal_transpose_cells(CellSet{}).empty());

    // An involution on basic shapes.
    for (const char* literal : {"4,1/2", "6,5,2,1/4,3", "3,2,1", "5,3,2/2,1", "2,1/1"}) {
        SkewShape s = shape(literal);
        CHECK(orthogonal_transpose(orthogonal_transpose(s)) == s);
    }
}

TEST_CASE("row strips inside the border") {
    auto strips = border_substrips(sp("6,4,3,2,1"), 5);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].inner() == sp("5,3,2,1"));

    for (const SkewShape& s : border_substrips(sp("6,4,3,2,1"), 3)) {
        CHECK(s.cell_count() == 3);
        for (const Cell& c : s.cells()) CHECK(border(sp("6,4,3,2,1")).contains(c));
    }
}
