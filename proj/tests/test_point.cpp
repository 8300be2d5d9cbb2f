#include <doctest.h>

#include <random>
#include <stdexcept>

#include "powcol/point.hpp"

using namespace powcol;

namespace {

FinitePoint fp(std::vector<Nat> v) { return FinitePoint(std::move(v)); }

TailPoint random_tail_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<Index> len(0, 6);
    std::uniform_int_distribution<Nat> value(0, 7);
    std::vector<Nat> prefix(len(rng));
    for (auto& p : prefix) p = value(rng);
    return TailPoint(std::move(prefix), value(rng));
}

}  // namespace

TEST_CASE("delta on finite points") {
    CHECK(delta(fp({0, 1, 2}), fp({1, 2, 0})) == std::vector<Index>{0, 1, 2});
    CHECK(delta(fp({0, 1, 2}), fp({0, 2, 2})) == std::vector<Index>{1});
    CHECK_THROWS_AS(delta(fp({0}), fp({0, 1})), std::invalid_argument);
}

TEST_CASE("delta on tail points") {
    TailPoint x({5}, 0), y({5}, 1);
    CoSet d = delta(x, y);
    CHECK(!d.is_finite());
    CHECK(d.exceptions == IndexSet{0});

    TailPoint a({1, 2, 0, 0}, 0), b({1, 3}, 0);  // tails equal
    CoSet e = delta(a, b);
    CHECK(e.is_finite());
    CHECK(e.exceptions == IndexSet{1});
}

TEST_CASE("totally different") {
    CHECK(totally_different(fp({0, 0}), fp({1, 1})));
    CHECK(!totally_different(fp({0, 0}), fp({0, 1})));
    CHECK(totally_different(TailPoint::constant(0), TailPoint::constant(1)));
    CHECK(!totally_different(TailPoint({1}, 0), TailPoint({1}, 2)));
}

TEST_CASE("relation_on finite") {
    FinitePoint x = fp({0, 1}), y = fp({0, 2});
    CHECK(relation_on(x, y, {0}) == PairRelation::Coincide);
    CHECK(relation_on(x, y, {1}) == PairRelation::TotallyDifferentOn);
    CHECK(relation_on(x, y, {0, 1}) == PairRelation::Neither);
    IndexSet out_of_range{2};
    CHECK_THROWS_AS(relation_on(x, y, out_of_range), std::invalid_argument);
}

TEST_CASE("relation_on tail points over cosets") {
    TailPoint x({0, 1}, 0), y({2, 1}, 0);  // differ exactly at 0
    CHECK(relation_on(x, y, CoSet::finite({0})) ==
          PairRelation::TotallyDifferentOn);
    CHECK(relation_on(x, y, CoSet::cofinite({0})) == PairRelation::Coincide);
    CHECK(relation_on(x, y, CoSet::all()) == PairRelation::Neither);
}

TEST_CASE("almost equal / almost totally different") {
    TailPoint x({3, 1, 4}, 0), y({9, 9}, 0);
    CHECK(almost_equal(x, y));
    CHECK(!almost_totally_different(x, y));

    TailPoint z({3, 1, 4}, 1);
    CHECK(!almost_equal(x, z));
    CHECK(almost_totally_different(x, z));

    CHECK(almost_equal(x, x));
    CHECK(!almost_totally_different(x, x));
}

TEST_CASE("tail point canonical form") {
    CHECK(TailPoint({3, 0, 0}, 0) == TailPoint({3}, 0));
    CHECK(TailPoint({0}, 0) == TailPoint::constant(0));
    CHECK(TailPoint({0, 1}, 1).prefix() == std::vector<Nat>{0});
}

TEST_CASE("delta is symmetric with empty diagonal") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<Nat> value(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Nat> a(4), b(4);
        for (Index i = 0; i < 4; ++i) {
            a[i] = value(rng);
            b[i] = value(rng);
        }
        FinitePoint x = fp(a), y = fp(b);
        CHECK(delta(x, x).empty());
        CHECK(delta(x, y) == delta(y, x));
        CHECK(totally_different(x, y) ==
              (relation_on(x, y, {0, 1, 2, 3}) ==
               PairRelation::TotallyDifferentOn));
    }
}

TEST_CASE("tail point pairs satisfy exactly one of the almost relations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        TailPoint x = random_tail_point(rng), y = random_tail_point(rng);
        CHECK(almost_equal(x, y) != almost_totally_different(x, y));
        CoSet d = delta(x, y);
        CHECK(almost_equal(x, y) == d.is_finite());
        CHECK(delta(x, x) == CoSet::empty());
    }
}

TEST_CASE("a totally different partner always exists for kappa >= 2") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<Nat> value(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Nat> a(5);
        for (auto& v : a) v = value(rng);
        FinitePoint x = fp(a);
        std::vector<Nat> b(5);
        for (Index i = 0; i < 5; ++i) b[i] = (a[i] + 1) % 3;
        CHECK(totally_different(x, fp(b)));
    }
}
