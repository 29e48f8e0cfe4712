#include <susa/rational.hpp>

#include <doctest.h>

using namespace susa;

TEST_CASE("rationals are stored reduced with positive denominator") {
    CHECK(Rational(44, 162) == Rational(22, 81));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(22, 81).num() == 22);
    CHECK(Rational(22, 81).den() == 81);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic follows the tablet computations") {
    // SMT 20 obverse: (0;26,40) x (0;36,40) and the completed square.
    CHECK(Rational(4, 9) * Rational(11, 18) == Rational(22, 81));
    CHECK(Rational(22, 81) + Rational(1, 4) == Rational(169, 324));
    CHECK(Rational(1) - Rational(1) == Rational(0));
    CHECK(Rational(3, 4) / Rational(1, 2) == Rational(3, 2));
    CHECK(-Rational(5, 3) == Rational(-5, 3));

    Rational acc(1, 2);
    acc += Rational(1, 3);
    acc *= Rational(6);
    CHECK(acc == Rational(5));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_WITH_AS(Rational(1) / Rational(0), doctest::Contains("DivisionByZero"), Error);
    try {
        Rational(1) / Rational(0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("ordering compares exact values") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 12) > Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(5, 3) >= Rational(5, 3));
}

TEST_CASE("reciprocal inverts exactly") {
    CHECK(reciprocal(Rational(4, 9)) == Rational(9, 4));   // "0;26,40" -> "2;15"
    CHECK(reciprocal(Rational(4, 3)) == Rational(3, 4));   // "1;20" -> "0;45"
    CHECK(reciprocal(Rational(1)) == Rational(1));
    CHECK(reciprocal(Rational(-2, 5)) == Rational(-5, 2));
    CHECK(reciprocal(reciprocal(Rational(7, 11))) == Rational(7, 11));

    try {
        reciprocal(Rational(0));
        FAIL("expected ZeroHasNoReciprocal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroHasNoReciprocal);
    }
}

TEST_CASE("integer square root is exact on large values") {
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(1)) == 1);
    CHECK(isqrt(BigInt(3480)) == 58);
    CHECK(isqrt(BigInt(3481)) == 59);
    CHECK(isqrt(BigInt(3482)) == 59);
    const BigInt big("123456789012345678901234567890123456789");
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
    CHECK(isqrt(big * big + 1) == big);
}

TEST_CASE("sqrt_exact recognizes perfect rational squares") {
    CHECK(*sqrt_exact(Rational(169, 324)) == Rational(13, 18)); // "0;43,20"
    CHECK(*sqrt_exact(Rational(625, 324)) == Rational(25, 18)); // "1;23,20"
    CHECK(*sqrt_exact(Rational(2500)) == Rational(50));
    CHECK(*sqrt_exact(Rational(0)) == Rational(0));
    CHECK(!sqrt_exact(Rational(2)).has_value());
    CHECK(!sqrt_exact(Rational(22, 81)).has_value());
    CHECK(!sqrt_exact(Rational(4, 7)).has_value());

    try {
        sqrt_exact(Rational(-1));
        FAIL("expected NegativeValue");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeValue);
    }
}

TEST_CASE("regularity depends only on the reduced denominator") {
    CHECK(is_regular(Rational(4, 9)));
    CHECK(!is_regular(Rational(1, 7)));
    CHECK(is_regular(Rational(1)));
    CHECK(is_regular(Rational(7)));       // integer: denominator 1
    CHECK(is_regular(Rational(1, 8100))); // 2^2 3^4 5^2
    CHECK(is_regular(Rational(7, 14)));   // reduces to 1/2
    CHECK(!is_regular(Rational(-1, 77)));

    try {
        is_regular(Rational(0));
        FAIL("expected ZeroIsNeitherRegularNorIrregular");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroIsNeitherRegularNorIrregular);
    }
}

TEST_CASE("fraction literals parse and print") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational::from_string("245/2") == Rational(245, 2));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(Rational(3, 4).to_string() == "3/4");
    CHECK(Rational(-9, 4).to_string() == "-9/4");
    CHECK(Rational(55).to_string() == "55");
    CHECK_THROWS_AS(Rational::from_string(""), Error);
    CHECK_THROWS_AS(Rational::from_string("1/2/3"), Error);
    CHECK_THROWS_AS(Rational::from_string("a/b"), Error);
    CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
}
