#include <doctest.h>

#include "projperm/errors.hpp"
#include "projperm/gf.hpp"

#include <stdexcept>
#include <vector>

using namespace projperm;

TEST_CASE("prime field arithmetic") {
    Field f(5, 1);
    CHECK(f.p() == 5);
    CHECK(f.degree() == 1);
    CHECK(f.q() == 5);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.sub(1, 3) == 3);
    CHECK(f.neg(2) == 3);
    CHECK(f.neg(0) == 0);
    CHECK(f.inv(4) == 4);
    CHECK(f.inv(2) == 3);
    CHECK(f.inv0(0) == 0);
    CHECK(f.inv0(3) == 2);
    CHECK(f.pow(2, 3) == 3);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(3, 0) == 1);
    CHECK(f.from_int(-1) == 4);
    CHECK(f.from_int(7) == 2);
    CHECK(f.from_int(-13) == 2);
    CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    CHECK_THROWS_AS(f.mul(5, 1), std::invalid_argument);
}

TEST_CASE("GF(9) with modulus x^2 + 1") {
    Field f(3, 2, {1, 0, 1});
    CHECK(f.q() == 9);
    // Index 3 encodes alpha; alpha^2 = -1 which has index 2.
    CHECK(f.mul(3, 3) == 2);
    CHECK(f.pow(3, 2) == 2);
    CHECK(f.add(3, 1) == 4);
    // (alpha + 1)^2 = alpha^2 + 2 alpha + 1 = 2 alpha.
    CHECK(f.mul(4, 4) == 6);
    CHECK(f.inv(3) == 6);
    CHECK(f.mul(3, 6) == 1);
    CHECK(f.neg(3) == 6);
    for (Elem a = 0; a < 9; ++a) CHECK(f.inv0(a) == f.pow(a, 7));
    // The multiplicative group is cyclic of order 8; alpha + 1 generates it.
    Elem x = 1;
    int order = 0;
    do {
        x = f.mul(x, 4);
        ++order;
    } while (x != 1);
    CHECK(order == 8);
}

TEST_CASE("default moduli are the smallest monic irreducibles") {
    CHECK(Field(2, 2).modulus() == std::vector<std::uint32_t>({1, 1, 1}));
    CHECK(Field(2, 3).modulus() == std::vector<std::uint32_t>({1, 0, 1, 1}));
    CHECK(Field(2, 4).modulus() == std::vector<std::uint32_t>({1, 0, 0, 1, 1}));
    CHECK(Field(3, 2).modulus() == std::vector<std::uint32_t>({1, 0, 1}));
    CHECK(Field(3, 3).modulus() == std::vector<std::uint32_t>({1, 0, 2, 1}));
    CHECK(Field(5, 2).modulus() == std::vector<std::uint32_t>({1, 0, 2}));
    CHECK(Field(7, 1).modulus() == std::vector<std::uint32_t>({1, 0}));
    // Same arithmetic whether the modulus is defaulted or spelled out.
    Field implicit(3, 2), explicit_(3, 2, {1, 0, 1});
    CHECK(implicit == explicit_);
    for (Elem a = 0; a < 9; ++a)
        for (Elem b = 0; b < 9; ++b) CHECK(implicit.mul(a, b) == explicit_.mul(a, b));
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument); // (x+1)^2
    CHECK_THROWS_AS(Field(3, 2, {2, 0, 1}), std::invalid_argument); // not monic
    CHECK_THROWS_AS(Field(3, 2, {1, 0, 3}), std::invalid_argument); // coeff >= p
    CHECK_THROWS_AS(Field(3, 2, {1, 0, 0, 1}), std::invalid_argument); // wrong size
    CHECK_THROWS_AS(Field(5, 1, {1, 1}), std::invalid_argument);
    CHECK_NOTHROW(Field(5, 1, {1, 0}));
    CHECK_THROWS_AS(Field(2, 17), guard_error);       // order > 65536
    CHECK_THROWS_AS(Field(1021, 2), guard_error);     // order > 65536 too
    CHECK_THROWS_AS(Field(23, 2), std::invalid_argument); // q=529: no default table
    CHECK_NOTHROW(Field(2, 9));
}

TEST_CASE("field text round-trips") {
    CHECK(Field::from_text("q=5").text() == "q=5");
    CHECK(Field::from_text("q=7^1").text() == "q=7");
    CHECK(Field::from_text("q=3^2;mod=1,0,1").text() == "q=3^2;mod=1,0,1");
    CHECK(Field::from_text("q=2^3").text() == "q=2^3;mod=1,0,1,1");
    CHECK(Field::from_text(" q=5 ").q() == 5);
    CHECK(Field::from_text("q=3^2; mod=1,0,1").q() == 9);
    CHECK_THROWS_AS(Field::from_text(""), parse_error);
    CHECK_THROWS_AS(Field::from_text("5"), parse_error);
    CHECK_THROWS_AS(Field::from_text("q="), parse_error);
    CHECK_THROWS_AS(Field::from_text("q=x"), parse_error);
    CHECK_THROWS_AS(Field::from_text("q=3^2;foo=1,0,1"), parse_error);
    CHECK_THROWS_AS(Field::from_text("q=3^2;mod=1,0,x"), parse_error);
    CHECK_THROWS_AS(Field::from_text("q=6"), std::invalid_argument);
    CHECK_THROWS_AS(Field::from_text("q=2"), std::invalid_argument);
    CHECK_THROWS_AS(Field::from_text("q=5^0"), std::invalid_argument);
    CHECK_THROWS_AS(Field::from_text("q=3^2;mod=1,1"), std::invalid_argument);
}

TEST_CASE("GF(8) arithmetic under x^3 + x + 1") {
    Field f(2, 3);
    CHECK(f.q() == 8);
    // alpha^3 = alpha + 1 -> index 3.
    CHECK(f.pow(2, 3) == 3);
    CHECK(f.mul(2, f.mul(2, 2)) == 3);
    for (Elem a = 1; a < 8; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    // Characteristic 2: everything is its own negative.
    for (Elem a = 0; a < 8; ++a) {
        CHECK(f.neg(a) == a);
        CHECK(f.add(a, a) == 0);
    }
    CHECK(f.from_int(-1) == 1);
}
