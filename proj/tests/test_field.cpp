#include <doctest.h>

#include "twupoly/field.hpp"

using namespace twupoly;

TEST_CASE("gfp construction checks primality") {
    CHECK_NOTHROW(Field::gfp(2));
    CHECK_NOTHROW(Field::gfp(3));
    CHECK_NOTHROW(Field::gfp(1000003));
    CHECK_NOTHROW(Field::gfp(2147483647));  // 2^31 - 1
    CHECK_THROWS_AS(Field::gfp(1), ContractError);
    CHECK_THROWS_AS(Field::gfp(4), ContractError);
    CHECK_THROWS_AS(Field::gfp(1000001), ContractError);  // 101 * 9901
}

TEST_CASE("gfp arithmetic and inverses") {
    Field f = Field::gfp(7);
    Scalar a = f.from_int(3), b = f.from_int(5);
    CHECK(f.equal(f.add(a, b), f.from_int(1)));
    CHECK(f.equal(f.mul(a, b), f.from_int(1)));
    CHECK(f.equal(f.sub(a, b), f.from_int(5)));
    CHECK(f.equal(f.neg(a), f.from_int(4)));
    CHECK(f.equal(f.inv(a), f.from_int(5)));  // 3*5 = 15 = 1 mod 7
    for (int x = 1; x < 7; ++x) {
        CHECK(f.is_one(f.mul(f.from_int(x), f.inv(f.from_int(x)))));
    }
    CHECK_THROWS_AS(f.inv(f.zero()), ContractError);
    CHECK(f.equal(f.from_int(-3), f.from_int(4)));
}

TEST_CASE("gf2 arithmetic") {
    Field f = Field::gf2();
    CHECK(f.is_zero(f.add(f.one(), f.one())));
    CHECK(f.is_one(f.mul(f.one(), f.one())));
    CHECK(f.is_one(f.inv(f.one())));
    CHECK(f.equal(f.neg(f.one()), f.one()));
    CHECK_THROWS(f.parse("2"));
}

TEST_CASE("rational arithmetic stays canonical") {
    Field f = Field::rationals();
    Scalar half = f.parse("2/4");
    CHECK(f.to_string(half) == "1/2");
    Scalar neg = f.parse("6/-8");
    CHECK(f.to_string(neg) == "-3/4");
    Scalar sum = f.add(half, neg);
    CHECK(f.to_string(sum) == "-1/4");
    CHECK(f.to_string(f.inv(neg)) == "-4/3");
    CHECK(f.to_string(f.mul(half, f.from_int(2))) == "1");
    CHECK_THROWS(f.parse("1/0"));
    CHECK_THROWS(f.parse("abc"));
}

TEST_CASE("field tags") {
    CHECK(Field::gf2().tag() == "gf2");
    CHECK(Field::gfp(13).tag() == "gfp 13");
    CHECK(Field::rationals().tag() == "q");
}
