#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okbody/rat.hpp"

using namespace okbody;

TEST_CASE("construction always lands in canonical form") {
    CHECK(make_rat(4, 8) == make_rat(1, 2));
    CHECK(make_rat(-4, 8) == make_rat(-1, 2));
    // Negative denominators are the known foot-gun; they must normalize too.
    CHECK(make_rat(4, -8) == make_rat(-1, 2));
    CHECK(make_rat(-4, -8) == make_rat(1, 2));
    CHECK(rat_to_string(make_rat(4, -8)) == "-1/2");
    CHECK(make_rat(0, -5) == 0);
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(rat_from_string("3/4") == make_rat(3, 4));
    CHECK(rat_from_string("-7/2") == make_rat(-7, 2));
    CHECK(rat_from_string("5") == 5);
    CHECK(rat_from_string("-12") == -12);
    CHECK(rat_from_string("6/4") == make_rat(3, 2));
    CHECK(rat_to_string(make_rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_to_string(Rat(-7)) == "-7");
    CHECK(rat_to_string(Rat(0)) == "0");
    for (const char* s : {"3/4", "-7/2", "5", "1151/999"})
        CHECK(rat_to_string(rat_from_string(s)) == s);
}

TEST_CASE("malformed literals are rejected") {
    CHECK_THROWS_AS(rat_from_string("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("2.0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::domain_error);
}

TEST_CASE("exact arithmetic has no drift") {
    Rat x(0);
    for (int i = 0; i < 10; ++i) x += make_rat(1, 10);
    CHECK(x == 1);
    CHECK(make_rat(1, 3) + make_rat(1, 6) == make_rat(1, 2));
    CHECK(make_rat(2, 3) * make_rat(9, 4) == make_rat(3, 2));
}

TEST_CASE("helpers") {
    CHECK(sign(make_rat(-3, 7)) == -1);
    CHECK(sign(Rat(0)) == 0);
    CHECK(sign(make_rat(3, 7)) == 1);
    CHECK(rat_abs(make_rat(-3, 7)) == make_rat(3, 7));
    CHECK(rat_min(make_rat(1, 3), make_rat(1, 4)) == make_rat(1, 4));
    CHECK(rat_max(make_rat(1, 3), make_rat(1, 4)) == make_rat(1, 3));
    CHECK(pos_part(make_rat(-5, 2)) == 0);
    CHECK(pos_part(make_rat(5, 2)) == make_rat(5, 2));
}
