#include <doctest.h>

#include <stdexcept>

#include "powcol/table.hpp"

using namespace powcol;

namespace {

// F(x) = x(0) on ^2 3
ColoringTable first_coordinate_table() {
    SpaceSig sig(2, 3, 3);
    std::vector<Nat> colors(9);
    for (std::size_t n = 0; n < 9; ++n) colors[n] = dec(n, sig)[0];
    return ColoringTable(sig, std::move(colors));
}

}  // namespace

TEST_CASE("mixed-radix encoding, coordinate 0 least significant") {
    SpaceSig sig(2, 3, 3);
    CHECK(enc(FinitePoint({2, 1}), sig) == 5);
    CHECK(dec(0, sig) == FinitePoint({0, 0}));
    for (std::size_t n = 0; n < sig.point_count(); ++n)
        CHECK(enc(dec(n, sig), sig) == n);
    CHECK_THROWS_AS(enc(FinitePoint({3, 0}), sig), std::out_of_range);
    CHECK_THROWS_AS(dec(9, sig), std::out_of_range);
}

TEST_CASE("enc is a bijection on every small signature") {
    for (Index lambda = 1; lambda <= 4; ++lambda)
        for (Nat kappa = 1; kappa <= 10; ++kappa) {
            SpaceSig sig(lambda, kappa, 1);
            if (sig.point_count() > 10'000) continue;
            std::vector<bool> hit(sig.point_count(), false);
            for (std::size_t n = 0; n < sig.point_count(); ++n) {
                std::size_t m = enc(dec(n, sig), sig);
                CHECK(!hit[m]);
                hit[m] = true;
            }
        }
}

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(SpaceSig(0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSig(2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSig(100, 1000, 2), std::overflow_error);
    CHECK(SpaceSig(20, 2, 2).point_count() == std::size_t{1} << 20);
}

TEST_CASE("eval") {
    ColoringTable t = first_coordinate_table();
    CHECK(t.eval(FinitePoint({2, 1})) == 2);
    CHECK(t.eval(FinitePoint({1, 1})) == 1);

    ColoringTable zero(SpaceSig(2, 3, 1), std::vector<Nat>(9, 0));
    CHECK(zero.eval(FinitePoint({2, 2})) == 0);
}

TEST_CASE("color classes partition the domain") {
    ColoringTable t = first_coordinate_table();
    auto classes = t.color_classes();
    CHECK(classes.size() == 3);
    std::size_t total = 0;
    for (const auto& [color, members] : classes) {
        CHECK(members.size() == 3);
        total += members.size();
    }
    CHECK(total == t.sig().point_count());

    ColoringTable zero(SpaceSig(2, 3, 1), std::vector<Nat>(9, 0));
    auto zc = zero.color_classes();
    CHECK(zc.size() == 1);
    CHECK(zc.at(0).size() == 9);
}

TEST_CASE("json round trip") {
    ColoringTable t = first_coordinate_table();
    CHECK(ColoringTable::from_json(t.to_json()) == t);
}

TEST_CASE("load rejects malformed documents") {
    CHECK_THROWS(ColoringTable::from_json("not json"));
    CHECK_THROWS_AS(ColoringTable::from_json(
                        R"({"lambda":2,"kappa":3,"mu":3,"colors":[0,1]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ColoringTable::from_json(
            R"({"lambda":1,"kappa":2,"mu":2,"colors":[0,2]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(ColoringTable::from_json(R"({"lambda":1})"),
                    std::invalid_argument);
}
