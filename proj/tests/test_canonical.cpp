#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurq/amenability.hpp"
#include "schurq/canonical.hpp"
#include "schurq/enumerate.hpp"
#include "test_support.hpp"

using namespace schurq;
using testsupport::cells_of;
using testsupport::shape;
using testsupport::sp;

TEST_CASE("greedy filling of (6,5,3,2)/(4,1) cell by cell") {
    BandTableau bt = canonical_tableau(shape("6,5,3,2/4,1"));
    const Tableau& t = bt.tableau;

    CHECK(t.at({1, 5}) == Letter::marked(1));
    CHECK(t.at({1, 6}) == Letter::unmarked(1));
    CHECK(t.at({2, 3}) == Letter::marked(1));
    CHECK(t.at({2, 4}) == Letter::unmarked(1));
    CHECK(t.at({2, 5}) == Letter::unmarked(1));
    CHECK(t.at({2, 6}) == Letter::unmarked(2));
    CHECK(t.at({3, 3}) == Letter::unmarked(1));
    CHECK(t.at({3, 4}) == Letter::marked(2));
    CHECK(t.at({3, 5}) == Letter::unmarked(2));
    CHECK(t.at({4, 4}) == Letter::unmarked(2));
    CHECK(t.at({4, 5}) == Letter::unmarked(3));

    REQUIRE(bt.bands.size() == 3);
    CHECK(bt.bands[0] == cells_of({{1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 3}}));
    CHECK(bt.bands[1] == cells_of({{2, 6}, {3, 4}, {3, 5}, {4, 4}}));
    CHECK(bt.bands[2] == cells_of({{4, 5}}));

    CHECK(t.is_valid());
    CHECK(is_amenable(t));
    CHECK(t.content().total == std::vector<int>{6, 4, 1});
    CHECK(lex_max_content(shape("6,5,3,2/4,1")) == sp("6,4,1"));
    // Band 2 splits into {(2,6)} and {(3,4),(3,5),(4,4)}.
    CHECK(leading_coefficient(shape("6,5,3,2/4,1").cells()) == 2);
}

TEST_CASE("straight shapes peel into all-unmarked fillings") {
    BandTableau bt = canonical_tableau(shape("3,2,1"));
    for (const Cell& c : bt.tableau.shape().cells()) {
        CHECK(!bt.tableau.at(c).is_marked());
    }
    CHECK(lex_max_content(shifted_cells(sp("3,2,1"))) == sp("3,2,1"));
    CHECK(leading_coefficient(shifted_cells(sp("3,2,1"))) == 1);
    CHECK(bt.tableau.content().total == std::vector<int>{3, 2, 1});
}

TEST_CASE("column runs get marked above the bottom") {
    BandTableau bt = canonical_tableau(shape("2,1/1"));
    CHECK(bt.tableau.at({1, 2}) == Letter::marked(1));
    CHECK(bt.tableau.at({2, 2}) == Letter::unmarked(1));
    CHECK(lex_max_content(shape("2,1/1")) == sp("2"));
    CHECK(leading_coefficient(shape("2,1/1").cells()) == 1);

    BandTableau hook = canonical_tableau(shape("3,2/2"));
    CHECK(hook.tableau.at({1, 3}) == Letter::marked(1));
    CHECK(hook.tableau.at({2, 2}) == Letter::unmarked(1));
    CHECK(hook.tableau.at({2, 3}) == Letter::unmarked(1));
    CHECK(lex_max_content(shape("3,2/2")) == sp("3"));
}

TEST_CASE("disconnected shapes double the leading coefficient per extra piece") {
    // Three isolated boxes: one band with three components.
    CHECK(lex_max_content(shape("5,3,1/4,2")) == sp("3"));
    CHECK(leading_coefficient(shape("5,3,1/4,2").cells()) == 4);

    // Two components.
    CHECK(lex_max_content(shape("3,1/2")) == sp("2"));
    CHECK(leading_coefficient(shape("3,1/2").cells()) == 2);
}

TEST_CASE("empty shape") {
    BandTableau bt = canonical_tableau(CellSet{});
    CHECK(bt.bands.empty());
    CHECK(bt.tableau.size() == 0);
    CHECK(lex_max_content(CellSet{}) == sp("0"));
    CHECK(leading_coefficient(CellSet{}) == 1);
}

TEST_CASE("prescribed first band repeels the remainder") {
    // (6,3,2,1)/(4,1) with the diagonal end (3,3) removed from the first band:
    // the rest reorganizes into bands {(3,3),(3,4)} and {(4,4)}.
    CellSet cells = shape("6,3,2,1/4,1").cells();
    BandTableau canon = canonical_tableau(cells);
    CHECK(canon.bands[0] ==
          cells_of({{1, 5}, {1, 6}, {2, 3}, {2, 4}, {3, 3}}));
    CHECK(canon.tableau.at({2, 3}) == Letter::marked(1));

    CellSet trimmed = canon.bands[0];
    trimmed.erase({3, 3});
    BandTableau bt = band_tableau_with_first(cells, trimmed);
    REQUIRE(bt.bands.size() == 3);
    CHECK(bt.bands[0] == trimmed);
    CHECK(bt.bands[1] == cells_of({{3, 3}, {3, 4}}));
    CHECK(bt.bands[2] == cells_of({{4, 4}}));
    CHECK(bt.tableau.at({2, 3}) == Letter::unmarked(1));  // nothing below it anymore
    CHECK(bt.tableau.at({3, 3}) == Letter::unmarked(2));
    CHECK(bt.tableau.at({3, 4}) == Letter::unmarked(2));
    CHECK(bt.tableau.at({4, 4}) == Letter::unmarked(3));
    CHECK(bt.tableau.is_valid());
    CHECK(is_amenable(bt.tableau));
    CHECK(bt.tableau.content().total == std::vector<int>{4, 2, 1});
}

TEST_CASE("greedy content dominates every valid content") {
    // The canonical content is lexicographically maximal among ALL fillings,
    // amenable or not, value by value.
    for (const char* lit : {"3,2/1", "4,2/2", "3,2,1/2", "4,3,1/3"}) {
        CellSet cells = shape(lit).cells();
        StrictPartition lead = lex_max_content(cells);
        std::vector<int> lead_total = lead.parts();
        int n = static_cast<int>(cells.size());
        for_each_tableau(cells, n, [&](const Tableau& t) {
            std::vector<int> c = t.content().total;
            c.resize(std::max(c.size(), lead_total.size()), 0);
            std::vector<int> l = lead_total;
            l.resize(c.size(), 0);
            CHECK(l >= c);
        });
    }
}

TEST_CASE("canonical tableau is the unique amenable filling of greedy content") {
    for (const char* lit : {"3,2/1", "4,2/2", "3,1/2", "3,2,1"}) {
        CellSet cells = shape(lit).cells();
        BandTableau canon = canonical_tableau(cells);
        StrictPartition lead = lex_max_content(cells);
        long long hits = 0;
        for_each_tableau_with_content(cells, lead.parts(), [&](const Tableau& t) {
            if (is_amenable(t)) ++hits;
        });
        // The greedy filling itself is amenable but generally not the only
        // one: its multiplicity is the leading coefficient.
        CHECK(is_amenable(canon.tableau));
        CHECK(hits == leading_coefficient(cells));
    }
}
