#include <doctest.h>

#include "ech/errors.hpp"
#include "ech/rational.hpp"

using namespace ech;

TEST_CASE("complex rational arithmetic") {
    ComplexQ a{Rational(1, 2), Rational(3)};
    ComplexQ b{Rational(-2), Rational(1, 3)};
    CHECK(a + b == ComplexQ{Rational(-3, 2), Rational(10, 3)});
    CHECK(a - b == ComplexQ{Rational(5, 2), Rational(8, 3)});
    // (1/2 + 3i)(-2 + i/3) = -1 - 1 + i(1/6 - 6)
    CHECK(a * b == ComplexQ{Rational(-2), Rational(-35, 6)});
    CHECK((a / b) * b == a);
    CHECK((-a) + a == ComplexQ{0});
    CHECK(a.conj().im == Rational(-3));
    CHECK(a.norm_sq() == Rational(1, 4) + Rational(9));
    CHECK_THROWS_AS(a / ComplexQ{0}, DegenerateInput);
}

TEST_CASE("integer powers") {
    ComplexQ i{0, 1};
    CHECK(pow_int(i, 2) == ComplexQ{-1});
    CHECK(pow_int(i, 4) == ComplexQ{1});
    CHECK(pow_int(ComplexQ{Rational(2, 3)}, 3) == ComplexQ{Rational(8, 27)});
    CHECK(pow_int(ComplexQ{5, -7}, 0) == ComplexQ{1});
}

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("1+2i") == ComplexQ{1, 2});
    CHECK(parse_complex("3/7-1/2i") == ComplexQ{Rational(3, 7), Rational(-1, 2)});
    CHECK(parse_complex("-i") == ComplexQ{0, -1});
    CHECK(parse_complex("i") == ComplexQ{0, 1});
    CHECK(parse_complex("2i") == ComplexQ{0, 2});
    CHECK(parse_complex("-4") == ComplexQ{-4});
    CHECK(parse_complex("2.5") == ComplexQ{Rational(5, 2)});
    CHECK(parse_complex("-.5+1.25i") == ComplexQ{Rational(-1, 2), Rational(5, 4)});
    CHECK(parse_complex(" 1 + 0i ") == ComplexQ{1});
    CHECK_THROWS_AS(parse_complex(""), Error);
    CHECK_THROWS_AS(parse_complex("1+2j"), Error);
    CHECK_THROWS_AS(parse_complex("1/0"), Error);
    CHECK_THROWS_AS(parse_complex("1+2i+3i"), Error);
}

TEST_CASE("printing round trips") {
    ComplexQ z{Rational(-3, 4), Rational(2, 5)};
    CHECK(parse_complex(to_string(z)) == z);
    CHECK(to_string(ComplexQ{Rational(1, 2)}) == "1/2");
    CHECK(to_string(ComplexQ{0, -1}) == "0-1i");
}
