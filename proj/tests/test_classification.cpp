#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurq/amenability.hpp"
#include "schurq/classification.hpp"
#include "schurq/errors.hpp"
#include "schurq/expansion.hpp"
#include "test_support.hpp"

using namespace schurq;
using testsupport::shape;
using testsupport::sp;

namespace {

void check_homogeneous(const char* lit, long long coeff, const char* nu, Family family) {
    CAPTURE(lit);
    ClassificationResult res = classify(shape(lit));
    CHECK(!res.zero);
    REQUIRE(res.homogeneous);
    REQUIRE(res.hom.has_value());
    CHECK(res.hom->coefficient == coeff);
    CHECK(res.hom->nu == sp(nu));
    CHECK(res.hom->family == family);
    CHECK(!res.witness.has_value());
}

}  // namespace

TEST_CASE("single-term families") {
    check_homogeneous("4,3,2,1", 1, "4,3,2,1", Family::I);
    check_homogeneous("3,2,1/1", 1, "3,2", Family::II);
    check_homogeneous("4,3,2,1/2,1", 1, "4,3", Family::II);
    check_homogeneous("5,4,3,2,1/5,3,2", 1, "4,1", Family::II);
    check_homogeneous("4,3,2/1", 1, "4,3,1", Family::III);
    check_homogeneous("6,5,4,3/2,1", 1, "6,5,3,1", Family::III);
    check_homogeneous("5,4,3/2,1", 1, "5,3,1", Family::IV);
    check_homogeneous("4,3,2/2,1", 1, "4,2", Family::IV);
    check_homogeneous("2,1/1", 1, "2", Family::IV);
    check_homogeneous("3,2,1/2,1", 1, "3", Family::IV);
    check_homogeneous("3,2/1", 1, "3,1", Family::IV);
    check_homogeneous("3,1/2", 2, "2", Family::V);
    check_homogeneous("4,2,1/3", 2, "3,1", Family::V);

    // The whole-shape and empty-shape degenerate cases.
    check_homogeneous("3,1", 1, "3,1", Family::I);
    check_homogeneous("2,1/2,1", 1, "0", Family::I);
}

TEST_CASE("classification normalizes first") {
    ClassificationResult res = classify(shape("5,4,3,2,1/5,3,2"));
    CHECK(res.normalized.outer() == sp("4,3,2,1"));
    CHECK(res.normalized.inner() == sp("3,2"));
}

TEST_CASE("family names") {
    CHECK(family_name(Family::I) == "i");
    CHECK(family_name(Family::IV) == "iv");
    CHECK(family_name(Family::V) == "v");
}

TEST_CASE("zero shapes") {
    ClassificationResult res = classify(shape("2,1/3"));
    CHECK(res.zero);
    CHECK(!res.homogeneous);
    CHECK(!res.witness.has_value());
}

TEST_CASE("family decisions agree with the expansion") {
    for (const char* lit :
         {"4,3,2,1/2,1", "4,3,2/1", "3,1/2", "4,3,2/2,1", "3,2,1/1", "3,2/1",
          "3,2/2", "3,2,1/2", "4,2/1", "4,3,1/3", "6,5,2,1/4,3", "4,2,1/3"}) {
        CAPTURE(lit);
        ClassificationResult res = classify(shape(lit));
        QExpansion e = expand(shape(lit));
        REQUIRE(!e.zero);
        CHECK(res.homogeneous == (e.terms.size() == 1));
        if (res.homogeneous) {
            CHECK(e.terms.begin()->first == res.hom->nu);
            CHECK(e.terms.begin()->second == res.hom->coefficient);
        } else if (res.witness) {
            const Tableau& w = *res.witness;
            CHECK(w.is_valid());
            CHECK(is_amenable(w));
            CHECK(e.terms.count(w.content().to_strict_partition()) == 1);
        }
    }
}

TEST_CASE("witness for three isolated components") {
    auto w = witness_disconnected(shape("5,3,1/4,2"));
    REQUIRE(w.has_value());
    CHECK(w->at({3, 3}) == Letter::unmarked(1));
    CHECK(w->at({2, 4}) == Letter::unmarked(2));
    CHECK(w->at({1, 5}) == Letter::unmarked(1));
    CHECK(w->content().total == std::vector<int>{2, 1});
    CHECK(is_amenable(*w));
}

TEST_CASE("witness for a tall second component") {
    auto w = witness_disconnected(shape("6,5,2,1/4,3"));
    REQUIRE(w.has_value());
    CHECK(w->at({2, 5}) == Letter::unmarked(2));
    CHECK(w->at({1, 5}) == Letter::unmarked(1));
    CHECK(w->content().total == std::vector<int>{4, 3});
    CHECK(is_amenable(*w));
}

TEST_CASE("witness by shortening the first band at the diagonal") {
    auto w = witness_disconnected(shape("6,3,2,1/4,1"));
    REQUIRE(w.has_value());
    CHECK(w->at({2, 3}) == Letter::unmarked(1));
    CHECK(w->at({2, 4}) == Letter::unmarked(1));
    CHECK(w->at({3, 3}) == Letter::unmarked(2));
    CHECK(w->at({3, 4}) == Letter::unmarked(2));
    CHECK(w->at({4, 4}) == Letter::unmarked(3));
    CHECK(w->content().total == std::vector<int>{4, 2, 1});
    CHECK(is_amenable(*w));
}

TEST_CASE("witness by shortening the first band at its lowest row") {
    auto w = witness_disconnected(shape("6,4,2/5,2"));
    REQUIRE(w.has_value());
    CHECK(w->at({3, 3}) == Letter::unmarked(1));
    CHECK(w->at({3, 4}) == Letter::unmarked(2));
    CHECK(w->at({2, 4}) == Letter::unmarked(1));
    CHECK(w->content().total == std::vector<int>{4, 1});
    CHECK(is_amenable(*w));
}

TEST_CASE("no witness for the doubled family") {
    CHECK(!witness_disconnected(shape("3,1/2")).has_value());
    CHECK(!witness_disconnected(shape("4,2,1/3")).has_value());
}

TEST_CASE("witness across a wide band gap") {
    auto w = witness_connected(shape("9,8,5,3,2/6,5,2,1"));
    REQUIRE(w.has_value());
    CHECK(w->at({3, 7}) == Letter::unmarked(2));
    CHECK(w->at({2, 7}) == Letter::unmarked(1));
    CHECK(w->at({1, 7}) == Letter::marked(1));
    CHECK(w->content().total == std::vector<int>{8, 5});
    CHECK(is_amenable(*w));
}

TEST_CASE("witness across an adjacent band gap") {
    auto w = witness_connected(shape("11,10,9,5,4,3,2/7,6,4,3"));
    REQUIRE(w.has_value());
    CHECK(w->at({2, 8}) == Letter::unmarked(1));
    CHECK(w->at({3, 8}) == Letter::marked(2));
    CHECK(w->at({4, 8}) == Letter::marked(2));
    CHECK(w->at({5, 8}) == Letter::unmarked(2));
    CHECK(w->at({6, 8}) == Letter::marked(3));
    CHECK(w->at({7, 8}) == Letter::unmarked(3));  // unchanged below the shift
    CHECK(w->content().total == std::vector<int>{10, 9, 5});
    CHECK(is_amenable(*w));
}

TEST_CASE("connected shape with connected bands has no witness") {
    ClassificationResult res = classify(shape("3,2/2"));
    CHECK(!res.zero);
    CHECK(!res.homogeneous);
    CHECK(!res.witness.has_value());
    // Yet the expansion really has a second term.
    CHECK(expand(shape("3,2/2")).terms.size() == 2);
}

TEST_CASE("staircase reduction") {
    CHECK(staircase_reduce(shape("5,4,3,2,1/5,3,2")) == sp("4,1"));
    CHECK(staircase_reduce(shape("3,2,1/2")) == sp("3,1"));
    CHECK(staircase_reduce(shape("2,1/2,1")) == sp("0"));
    CHECK_THROWS_AS(staircase_reduce(shape("4,2,1/1")), PreconditionViolated);
    CHECK_THROWS_AS(staircase_reduce(shape("3,2,1/4")), PreconditionViolated);
}
