#include <doctest.h>

#include "mmt/error.hpp"
#include "mmt/rational.hpp"

using mmt::Rational;

TEST_CASE("rationals are canonical and exact") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 10) * Rational(10)) == Rational(1));
    CHECK((Rational(1) / Rational(3)) * Rational(3) == Rational(1));
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-5).abs() == Rational(5));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational().is_zero());
}

TEST_CASE("string form is num/den and round-trips") {
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-2).str() == "-2/1");
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("6/8") == Rational(3, 4));
    for (long n = -5; n <= 5; ++n)
        for (long d = 1; d <= 5; ++d)
            CHECK(Rational::from_string(Rational(n, d).str()) == Rational(n, d));
    CHECK_THROWS_AS(Rational::from_string("1/0"), mmt::Error);
    CHECK_THROWS_AS(Rational::from_string("x"), mmt::Error);
    CHECK_THROWS_AS(Rational::from_string(""), mmt::Error);
}

TEST_CASE("perfect squares and exact roots") {
    CHECK(Rational(16).is_perfect_square());
    CHECK(Rational(16).exact_sqrt() == Rational(4));
    CHECK(Rational(1, 4).is_perfect_square());
    CHECK(Rational(1, 4).exact_sqrt() == Rational(1, 2));
    CHECK(Rational(9, 16).exact_sqrt() == Rational(3, 4));
    CHECK(!Rational(2).is_perfect_square());
    CHECK(!Rational(1, 3).is_perfect_square());
    CHECK(Rational(0).is_perfect_square());
}

TEST_CASE("sqrt lower bounds converge from below") {
    const Rational two(2);
    Rational prev(0);
    for (unsigned prec = 1; prec <= 40; prec += 13) {
        const Rational r = two.sqrt_lower_bound(prec);
        CHECK(r * r <= two);
        // within 1/2^prec of the true root: (r + step)^2 must overshoot
        Rational step(1);
        for (unsigned i = 0; i < prec; ++i) step = step / Rational(2);
        CHECK((r + step) * (r + step) > two);
        CHECK(prev <= r);
        prev = r;
    }
    CHECK(Rational(9).sqrt_lower_bound(5) == Rational(3));
}
