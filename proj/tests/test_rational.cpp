#include <doctest.h>

#include <random>

#include "domforge/rational.hpp"

using domforge::BigInt;
using domforge::Rational;

TEST_CASE("rational reduction is eager, so equality is structural") {
    Rational r(BigInt(24), BigInt(9));
    CHECK(r.num() == BigInt(8));
    CHECK(r.den() == BigInt(3));
    CHECK(r == Rational(BigInt(8), BigInt(3)));
    CHECK(Rational(BigInt(117), BigInt(33)) == Rational(BigInt(39), BigInt(11)));
    CHECK(Rational(BigInt(0), BigInt(17)).den() == BigInt(1));
    CHECK(Rational(BigInt(-4), BigInt(-6)) == Rational(BigInt(2), BigInt(3)));
    // sign is carried by the numerator
    Rational neg(BigInt(4), BigInt(-6));
    CHECK(neg.num() == BigInt(-2));
    CHECK(neg.den() == BigInt(3));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational comparison is cross-multiplied, never floating") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(34), BigInt(100)));
    CHECK(Rational(BigInt(2), BigInt(3)) > Rational(BigInt(33), BigInt(50)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
    // values that collide in double precision stay distinct
    BigInt big = BigInt::pow2(200);
    CHECK(Rational(big + BigInt(1), big) > Rational(1));
    CHECK(Rational(big + BigInt(1), big) != Rational(1));
}

TEST_CASE("rational arithmetic identities on random values") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int i = 0; i < 400; ++i) {
        Rational a(BigInt(num(rng)), BigInt(den(rng)));
        Rational b(BigInt(num(rng)), BigInt(den(rng)));
        Rational c(BigInt(num(rng)), BigInt(den(rng)));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        CHECK(BigInt::gcd(a.num().abs(), a.den()) == BigInt(1));
    }
}

TEST_CASE("rational rendering") {
    CHECK(Rational(BigInt(4), BigInt(3)).to_string() == "4/3");
    CHECK(Rational(BigInt(10), BigInt(5)).to_string() == "2");
    CHECK(Rational(BigInt(8), BigInt(3)).decimal_string() == "2.666667");
    CHECK(Rational(BigInt(1), BigInt(2)).decimal_string() == "0.500000");
    CHECK(Rational(BigInt(-4), BigInt(3)).decimal_string(3) == "-1.333");
    CHECK(Rational(2).decimal_string(2) == "2.00");
}
