#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lgtk/groebner.hpp"
#include "lgtk/poly_io.hpp"

using lgtk::GaussianRational;
using lgtk::GroebnerBasis;
using lgtk::GroebnerOptions;
using lgtk::MonomialOrder;
using lgtk::OrderKind;
using lgtk::Polynomial;
using lgtk::Rational;

namespace {

const std::vector<std::string> XY{"x", "y"};

Polynomial p(const std::string& s) { return lgtk::parse_polynomial(s, XY); }

Polynomial random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    Polynomial out(2);
    for (int t = 0; t < 4; ++t) {
        int a = deg(rng), b = deg(rng);
        out.add_term({a, b}, GaussianRational(coeff(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("textbook basis in two variables") {
    MonomialOrder grevlex(OrderKind::grevlex);
    auto gb = lgtk::groebner_basis({p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x")}, grevlex);
    std::vector<Polynomial> expected{p("x^2"), p("x*y"), p("y^2 - 1/2*x")};
    REQUIRE(gb.generators.size() == expected.size());
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : gb.generators) found = found || g == e;
        REQUIRE(found);
    }
}

TEST_CASE("generators reduce to zero against their own basis") {
    MonomialOrder lex(OrderKind::lex);
    std::vector<Polynomial> gens{p("x^2 + y"), p("x*y - 1"), p("y^3 + x - 2")};
    auto gb = lgtk::groebner_basis(gens, lex);
    for (const auto& g : gens) REQUIRE(lgtk::normal_form(g, gb).remainder.is_zero());
}

TEST_CASE("normal form is idempotent and annihilates products with generators") {
    MonomialOrder grevlex(OrderKind::grevlex);
    std::vector<Polynomial> gens{p("x^2 - y"), p("y^2 - 3")};
    auto gb = lgtk::groebner_basis(gens, grevlex);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        Polynomial q = random_poly(rng, 4);
        Polynomial nf = lgtk::normal_form(q, gb).remainder;
        REQUIRE(lgtk::normal_form(nf, gb).remainder == nf);
        Polynomial mult = q * gens[trial % gens.size()];
        REQUIRE(lgtk::normal_form(mult, gb).remainder.is_zero());
    }
}

TEST_CASE("normal form is linear") {
    MonomialOrder grevlex(OrderKind::grevlex);
    auto gb = lgtk::groebner_basis({p("x^2 - y"), p("y^2 - 3")}, grevlex);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        Polynomial f = random_poly(rng, 5), g = random_poly(rng, 5);
        Polynomial lhs = lgtk::normal_form(f + g, gb).remainder;
        Polynomial rhs =
            lgtk::normal_form(f, gb).remainder + lgtk::normal_form(g, gb).remainder;
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("basis generators carry verified cofactor certificates") {
    for (OrderKind kind : {OrderKind::lex, OrderKind::grevlex}) {
        MonomialOrder order(kind);
        auto gb = lgtk::groebner_basis({p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x")}, order);
        REQUIRE(gb.cofactors_verify());
    }
}

TEST_CASE("membership certificates re-expand to the member") {
    MonomialOrder grevlex(OrderKind::grevlex);
    std::vector<Polynomial> gens{p("x^2 + y^2 - 1"), p("x*y - 2")};
    auto gb = lgtk::groebner_basis(gens, grevlex);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial member =
            random_poly(rng, 3) * gens[0] + random_poly(rng, 3) * gens[1];
        auto cert = lgtk::membership_certificate(member, gb);
        REQUIRE(cert.has_value());
        Polynomial acc(2);
        for (std::size_t j = 0; j < gens.size(); ++j) acc += (*cert)[j] * gens[j];
        REQUIRE(acc == member);
    }
    REQUIRE(!lgtk::membership_certificate(p("x"), gb).has_value());
}

TEST_CASE("normal forms agree on ideal-equal inputs across orders") {
    std::vector<Polynomial> gens{p("x^2 - y"), p("x*y - 1")};
    MonomialOrder lex(OrderKind::lex), grevlex(OrderKind::grevlex);
    auto gl = lgtk::groebner_basis(gens, lex);
    auto gg = lgtk::groebner_basis(gens, grevlex);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        Polynomial q = random_poly(rng, 4);
        // membership is order-independent even though remainders differ
        bool in_l = lgtk::normal_form(q, gl).remainder.is_zero();
        bool in_g = lgtk::normal_form(q, gg).remainder.is_zero();
        REQUIRE(in_l == in_g);
    }
}

TEST_CASE("the unit ideal collapses to one") {
    MonomialOrder grevlex(OrderKind::grevlex);
    auto gb = lgtk::groebner_basis({p("x - 1"), p("x")}, grevlex);
    REQUIRE(gb.generators.size() == 1);
    REQUIRE(gb.generators[0] == Polynomial::constant(2, GaussianRational(1)));
}

TEST_CASE("step budget aborts oversized computations") {
    MonomialOrder grevlex(OrderKind::grevlex);
    GroebnerOptions tiny;
    tiny.step_budget = 2;
    try {
        lgtk::groebner_basis({p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x"), p("y^4 - x")}, grevlex,
                             tiny);
        FAIL("expected the budget to run out");
    } catch (const lgtk::Error& e) {
        REQUIRE(e.code() == lgtk::errc::budget_exceeded);
    }
}
