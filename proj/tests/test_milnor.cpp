#include <catch2/catch_amalgamated.hpp>

#include "lgtk/milnor.hpp"
#include "lgtk/poly_io.hpp"
#include "support/oracles.hpp"

using lgtk::GaussianRational;
using lgtk::MonomialOrder;
using lgtk::OrderKind;
using lgtk::Polynomial;
using lgtk::Rational;

namespace {

Polynomial uni(const std::string& s) { return lgtk::parse_polynomial(s, {"z"}); }
Polynomial biv(const std::string& s) { return lgtk::parse_polynomial(s, {"x", "y"}); }

const MonomialOrder kGrevlex(OrderKind::grevlex);
const MonomialOrder kLex(OrderKind::lex);

}  // namespace

TEST_CASE("quotient dimensions for one-variable power potentials") {
    for (int n = 1; n <= 6; ++n) {
        Polynomial w = uni("z^" + std::to_string(n + 1));
        auto alg = lgtk::milnor_algebra(w, kGrevlex);
        REQUIRE(alg.dimension() == static_cast<std::size_t>(n));
        auto brute = oracles::milnor_number_brute_force(w);
        REQUIRE(brute.has_value());
        REQUIRE(*brute == alg.dimension());
    }
}

TEST_CASE("quotient dimensions for two-variable potentials") {
    struct Case {
        std::string w;
        std::size_t mu;
    };
    std::vector<Case> cases{{"x^3 + y^3", 4},
                            {"x^2*y + y^3", 4},
                            {"x^2*y + y^4", 5},
                            {"x^2*y + y^5", 6},
                            {"x^2 + y^2", 1}};
    for (const auto& c : cases) {
        Polynomial w = biv(c.w);
        auto alg = lgtk::milnor_algebra(w, kGrevlex);
        REQUIRE(alg.dimension() == c.mu);
        auto brute = oracles::milnor_number_brute_force(w);
        REQUIRE(brute.has_value());
        REQUIRE(*brute == c.mu);
    }
}

TEST_CASE("dimension does not depend on the monomial order") {
    for (const std::string& s : {"x^3 + y^3", "x^2*y + y^4", "x^4 + x*y^3"}) {
        Polynomial w = biv(s);
        REQUIRE(lgtk::milnor_algebra(w, kGrevlex).dimension() ==
                lgtk::milnor_algebra(w, kLex).dimension());
    }
}

TEST_CASE("basis of the cusp quotient") {
    auto alg = lgtk::milnor_algebra(uni("z^3"), kGrevlex);
    REQUIRE(alg.basis.size() == 2);
    REQUIRE(alg.basis[0] == lgtk::Exponents{0});
    REQUIRE(alg.basis[1] == lgtk::Exponents{1});
}

TEST_CASE("non-isolated critical loci are rejected") {
    for (const MonomialOrder& order : {kGrevlex, kLex}) {
        try {
            lgtk::milnor_algebra(biv("x^2*y"), order);
            FAIL("expected rejection");
        } catch (const lgtk::Error& e) {
            REQUIRE(e.code() == lgtk::errc::non_isolated_critical);
        }
    }
    // the brute-force dimension diverges on the same input
    REQUIRE(!oracles::milnor_number_brute_force(biv("x^2*y")).has_value());
}

TEST_CASE("constant potentials are rejected") {
    REQUIRE_THROWS_AS(lgtk::milnor_algebra(biv("3"), kGrevlex), lgtk::Error);
    REQUIRE_THROWS_AS(lgtk::milnor_algebra(Polynomial(2), kGrevlex), lgtk::Error);
}

TEST_CASE("potentials with no critical points give the zero algebra") {
    // dW = 1 generates the unit ideal
    auto alg = lgtk::milnor_algebra(uni("z"), kGrevlex);
    REQUIRE(alg.dimension() == 0);
}

TEST_CASE("normal form is a projector onto the basis span") {
    auto alg = lgtk::milnor_algebra(uni("z^4"), kGrevlex);
    Polynomial p = uni("z^5 + 2*z^3 + z");
    Polynomial nf = alg.normal_form(p);
    REQUIRE(alg.normal_form(nf) == nf);
    auto coords = alg.coordinates(p);
    REQUIRE(alg.from_coordinates(coords) == nf);
}

TEST_CASE("weight certificates for weighted-homogeneous potentials") {
    auto qh = lgtk::is_quasi_homogeneous(biv("x^2 + y^2"), kGrevlex);
    REQUIRE(qh.is_quasi_homogeneous);
    REQUIRE(qh.certificate.has_value());
    REQUIRE(qh.certificate->weights == std::vector<long>{1, 1});
    REQUIRE(qh.certificate->degree == 2);

    auto d4 = lgtk::is_quasi_homogeneous(biv("x^2*y + y^3"), kGrevlex);
    REQUIRE(d4.is_quasi_homogeneous);
    REQUIRE(d4.certificate.has_value());
    REQUIRE(d4.certificate->weights == std::vector<long>{1, 1});
    REQUIRE(d4.certificate->degree == 3);

    auto a3 = lgtk::is_quasi_homogeneous(uni("z^4"), kGrevlex);
    REQUIRE(a3.is_quasi_homogeneous);
    REQUIRE(a3.certificate->weights == std::vector<long>{1});
    REQUIRE(a3.certificate->degree == 4);
}

TEST_CASE("certificates really grade the potential") {
    for (const std::string& s : {"x^3 + y^3", "x^2*y + y^5", "x^3 + x*y^3"}) {
        Polynomial w = biv(s);
        auto qh = lgtk::is_quasi_homogeneous(w, kGrevlex);
        REQUIRE(qh.certificate.has_value());
        const auto& cert = *qh.certificate;
        for (const auto& [e, c] : w.terms()) {
            long deg = 0;
            for (std::size_t k = 0; k < e.size(); ++k) deg += cert.weights[k] * e[k];
            REQUIRE(deg == cert.degree);
        }
        for (long wk : cert.weights) REQUIRE(wk > 0);
    }
}

TEST_CASE("weighted-homogeneous dimension formula") {
    // mu = prod (D - w_k)/w_k for an isolated weighted-homogeneous potential
    for (const std::string& s : {"x^3 + y^3", "x^2*y + y^3", "x^2*y + y^5", "x^2 + y^2"}) {
        Polynomial w = biv(s);
        auto qh = lgtk::is_quasi_homogeneous(w, kGrevlex);
        REQUIRE(qh.certificate.has_value());
        Rational mu(1);
        for (long wk : qh.certificate->weights)
            mu *= Rational(qh.certificate->degree - wk, wk);
        REQUIRE(mu == Rational(static_cast<long>(lgtk::milnor_algebra(w, kGrevlex).dimension())));
    }
}

TEST_CASE("shifted potentials are detected as inhomogeneous") {
    auto qh = lgtk::is_quasi_homogeneous(uni("z^3 - 3*z"), kGrevlex);
    REQUIRE(!qh.is_quasi_homogeneous);
    REQUIRE(!qh.certificate.has_value());
}

TEST_CASE("membership decision matches the Tyurina comparison") {
    // quasi-homogeneity (up to coordinate change) holds exactly when the
    // Milnor and Tyurina numbers agree
    for (const std::string& s :
         {"x^3 + y^3", "x^2*y + y^4", "x^3 + y^7 + x^2*y^5", "x^4 + y^4 + x^2*y^3"}) {
        Polynomial w = biv(s);
        auto mu = oracles::milnor_number_brute_force(w);
        auto tau = oracles::tyurina_number_brute_force(w);
        REQUIRE(mu.has_value());
        REQUIRE(tau.has_value());
        bool qh = lgtk::is_quasi_homogeneous(w, kGrevlex).is_quasi_homogeneous;
        REQUIRE(qh == (*mu == *tau));
    }
    REQUIRE(!lgtk::is_quasi_homogeneous(biv("x^3 + y^7 + x^2*y^5"), kGrevlex).is_quasi_homogeneous);
}

TEST_CASE("recentring at a critical point") {
    Polynomial w = uni("z^3 - 3*z");
    std::vector<GaussianRational> p{GaussianRational(1)};
    Polynomial local = lgtk::localize_at_point(w, p);
    REQUIRE(local == uni("z^3 + 3*z^2"));
    REQUIRE(local.constant_term().is_zero());
}

TEST_CASE("local quotient dimensions at individual critical points") {
    Polynomial w = uni("z^3 - 3*z");
    REQUIRE(lgtk::local_milnor_number(w, {GaussianRational(1)}, kGrevlex) == 1);
    REQUIRE(lgtk::local_milnor_number(w, {GaussianRational(-1)}, kGrevlex) == 1);
    // a pure power has everything at the origin
    REQUIRE(lgtk::local_milnor_number(uni("z^4"), {GaussianRational()}, kGrevlex) == 3);
}
