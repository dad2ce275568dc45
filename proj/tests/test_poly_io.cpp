#include <catch2/catch_amalgamated.hpp>

#include "lgtk/poly_io.hpp"

using lgtk::GaussianRational;
using lgtk::MonomialOrder;
using lgtk::OrderKind;
using lgtk::ParseError;
using lgtk::Polynomial;
using lgtk::Rational;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> Z{"z"};

}  // namespace

TEST_CASE("parsing basic polynomials") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    REQUIRE(lgtk::parse_polynomial("x^3 + y^3", XY) == x.pow(3) + y.pow(3));
    REQUIRE(lgtk::parse_polynomial("x^2*y - 2*x + 1/2", XY) ==
            x.pow(2) * y - GaussianRational(2) * x +
                Polynomial::constant(2, GaussianRational(Rational(1, 2))));
    REQUIRE(lgtk::parse_polynomial("-x", XY) == -x);
    REQUIRE(lgtk::parse_polynomial("0", XY).is_zero());
}

TEST_CASE("imaginary coefficients in both spellings") {
    Polynomial z = Polynomial::variable(1, 0);
    Polynomial a = lgtk::parse_polynomial("i*z^2 - 3*i", Z);
    Polynomial b = GaussianRational::i() * z.pow(2) -
                   Polynomial::constant(1, GaussianRational(Rational(0), Rational(3)));
    REQUIRE(a == b);
    REQUIRE(lgtk::parse_polynomial("(1/2-3/4*i)*z", Z) ==
            GaussianRational(Rational(1, 2), Rational(-3, 4)) * z);
}

TEST_CASE("printing round-trips through the parser") {
    MonomialOrder grevlex(OrderKind::grevlex);
    std::vector<std::string> srcs{"x^3 + y^3", "x^2*y - 2*x + 1/2", "i*x*y - y^2",
                                  "(1/2-3/4*i)*x^2 + (2+i)*y - 1"};
    for (const auto& s : srcs) {
        Polynomial p = lgtk::parse_polynomial(s, XY);
        std::string printed = lgtk::to_string(p, XY, grevlex);
        REQUIRE(lgtk::parse_polynomial(printed, XY) == p);
    }
    REQUIRE(lgtk::to_string(Polynomial(2), XY, grevlex) == "0");
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        lgtk::parse_polynomial("z + * 2", Z);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.position() == 4);
    }
    REQUIRE_THROWS_AS(lgtk::parse_polynomial("z^", Z), ParseError);
    REQUIRE_THROWS_AS(lgtk::parse_polynomial("w", Z), ParseError);
    REQUIRE_THROWS_AS(lgtk::parse_polynomial("", Z), ParseError);
    REQUIRE_THROWS_AS(lgtk::parse_polynomial("z^^2", Z), ParseError);
}

TEST_CASE("variable name validation") {
    REQUIRE_THROWS_AS(lgtk::validate_variable_names({"i"}), lgtk::Error);
    REQUIRE_THROWS_AS(lgtk::validate_variable_names({"x", "x"}), lgtk::Error);
    REQUIRE_THROWS_AS(lgtk::validate_variable_names({"2x"}), lgtk::Error);
    REQUIRE_NOTHROW(lgtk::validate_variable_names({"x", "y", "z_1"}));
}

TEST_CASE("coefficient parsing uses the same grammar") {
    REQUIRE(lgtk::parse_coefficient("3/4") == GaussianRational(Rational(3, 4)));
    REQUIRE(lgtk::parse_coefficient("-i") == -GaussianRational::i());
    REQUIRE(lgtk::parse_coefficient("(1/2-3/4*i)") ==
            GaussianRational(Rational(1, 2), Rational(-3, 4)));
    REQUIRE_THROWS_AS(lgtk::parse_coefficient("x"), ParseError);
}

TEST_CASE("printed form is stable under the chosen order") {
    MonomialOrder grevlex(OrderKind::grevlex);
    Polynomial p = lgtk::parse_polynomial("y^2 + x^2*y - 2*x", XY);
    std::string a = lgtk::to_string(p, XY, grevlex);
    std::string b = lgtk::to_string(p, XY, grevlex);
    REQUIRE(a == b);
    REQUIRE(a == "x^2*y + y^2 - 2*x");
}
