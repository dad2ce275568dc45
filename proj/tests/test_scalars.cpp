#include <catch2/catch_amalgamated.hpp>

#include "lgtk/gaussian_rational.hpp"

using lgtk::GaussianRational;
using lgtk::Rational;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(Rational(1, 2), Rational(3, 4));
    GaussianRational b(Rational(-2), Rational(1));

    REQUIRE(a + b == GaussianRational(Rational(-3, 2), Rational(7, 4)));
    REQUIRE(a - b == GaussianRational(Rational(5, 2), Rational(-1, 4)));
    REQUIRE(a * b == GaussianRational(Rational(-7, 4), Rational(-1)));
    REQUIRE((a / b) * b == a);
}

TEST_CASE("division inverts multiplication for nonzero operands") {
    std::vector<GaussianRational> pool = {
        GaussianRational(1),
        GaussianRational(Rational(0), Rational(1)),
        GaussianRational(Rational(-3, 7), Rational(2, 5)),
        GaussianRational(Rational(11), Rational(-4)),
    };
    for (const auto& x : pool)
        for (const auto& y : pool) {
            REQUIRE((x * y) / y == x);
            REQUIRE(x * y == y * x);
        }
}

TEST_CASE("conjugation and norm") {
    GaussianRational a(Rational(3), Rational(-4));
    REQUIRE(a.conj() == GaussianRational(Rational(3), Rational(4)));
    REQUIRE(a * a.conj() == GaussianRational(a.norm()));
    REQUIRE(a.norm() == Rational(25));
}

TEST_CASE("powers of i cycle with period four") {
    REQUIRE(lgtk::i_power(0) == GaussianRational(1));
    REQUIRE(lgtk::i_power(1) == GaussianRational(Rational(0), Rational(1)));
    REQUIRE(lgtk::i_power(2) == GaussianRational(-1));
    REQUIRE(lgtk::i_power(3) == GaussianRational(Rational(0), Rational(-1)));
    REQUIRE(lgtk::i_power(4) == GaussianRational(1));
    REQUIRE(lgtk::i_power(7) == lgtk::i_power(3));
}

TEST_CASE("string rendering round-trips through expected forms") {
    REQUIRE(GaussianRational(3).str() == "3");
    REQUIRE(GaussianRational(Rational(-1, 2)).str() == "-1/2");
    REQUIRE(GaussianRational(Rational(0), Rational(1)).str() == "i");
    REQUIRE(GaussianRational(Rational(0), Rational(-1)).str() == "-i");
    REQUIRE(GaussianRational(Rational(0), Rational(2)).str() == "2*i");
    REQUIRE(GaussianRational(Rational(1, 2), Rational(-3, 4)).str() == "(1/2-3/4*i)");
}

TEST_CASE("factorials as exact rationals") {
    REQUIRE(lgtk::factorial_rational(0) == Rational(1));
    REQUIRE(lgtk::factorial_rational(1) == Rational(1));
    REQUIRE(lgtk::factorial_rational(4) == Rational(24));
    REQUIRE(lgtk::factorial_rational(6) == Rational(720));
}

TEST_CASE("total order is consistent") {
    GaussianRational a(Rational(1), Rational(2));
    GaussianRational b(Rational(1), Rational(3));
    GaussianRational c(Rational(2), Rational(0));
    REQUIRE(a < b);
    REQUIRE(!(b < a));
    REQUIRE((a < c) != (c < a));
    REQUIRE(!(a < a));
}
