#include <catch2/catch_amalgamated.hpp>

#include "lgtk/poly_io.hpp"
#include "lgtk/supermatrix.hpp"

using lgtk::GaussianRational;
using lgtk::Parity;
using lgtk::PolyMatrix;
using lgtk::Polynomial;
using lgtk::SuperMatrix;
using lgtk::SuperRank;

namespace {

Polynomial uni(const std::string& s) { return lgtk::parse_polynomial(s, {"z"}); }

PolyMatrix pm(const std::vector<std::vector<std::string>>& rows) {
    PolyMatrix m(rows.size(), rows[0].size(), 1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = uni(rows[r][c]);
    return m;
}

}  // namespace

TEST_CASE("parity classification of block structure") {
    SuperRank r{1, 1};
    SuperMatrix even = SuperMatrix::even_map(r, r, pm({{"z"}}), pm({{"1"}}));
    SuperMatrix odd = SuperMatrix::odd_map(r, r, pm({{"1"}}), pm({{"-1"}}));
    REQUIRE(even.parity() == Parity::even);
    REQUIRE(odd.parity() == Parity::odd);
    REQUIRE((even + odd).parity() == Parity::mixed);
    REQUIRE(SuperMatrix::zero(r, r, 1).parity() == Parity::even);
    REQUIRE(SuperMatrix::identity(r, 1).parity() == Parity::even);
}

TEST_CASE("supertrace subtracts the odd block") {
    SuperRank r{2, 1};
    PolyMatrix ee(2, 2, 1), oo(1, 1, 1);
    ee.at(0, 0) = uni("z^2");
    ee.at(1, 1) = uni("3");
    oo.at(0, 0) = uni("z^2 + 1");
    SuperMatrix m = SuperMatrix::even_map(r, r, ee, oo);
    REQUIRE(m.supertrace() == uni("2"));
}

TEST_CASE("supertrace vanishes on graded commutators") {
    SuperRank r{1, 1};
    SuperMatrix a = SuperMatrix::even_map(r, r, pm({{"z"}}), pm({{"z^2 - 1"}}));
    SuperMatrix b = SuperMatrix::even_map(r, r, pm({{"z + 2"}}), pm({{"z^3"}}));
    SuperMatrix c = SuperMatrix::odd_map(r, r, pm({{"z"}}), pm({{"1"}}));
    SuperMatrix d = SuperMatrix::odd_map(r, r, pm({{"2"}}), pm({{"z^2"}}));
    REQUIRE(lgtk::graded_commutator(a, b).supertrace().is_zero());
    REQUIRE(lgtk::graded_commutator(a, c).supertrace().is_zero());
    REQUIRE(lgtk::graded_commutator(c, d).supertrace().is_zero());
}

TEST_CASE("graded commutator of two odd maps is the anticommutator") {
    SuperRank r{1, 1};
    SuperMatrix c = SuperMatrix::odd_map(r, r, pm({{"z"}}), pm({{"1"}}));
    SuperMatrix d = SuperMatrix::odd_map(r, r, pm({{"2"}}), pm({{"z^2"}}));
    SuperMatrix expect = c * d + d * c;
    SuperMatrix got = lgtk::graded_commutator(c, d);
    REQUIRE((got - expect).is_zero());
}

TEST_CASE("mixed parity inputs are rejected by the commutator") {
    SuperRank r{1, 1};
    SuperMatrix even = SuperMatrix::even_map(r, r, pm({{"z"}}), pm({{"1"}}));
    SuperMatrix odd = SuperMatrix::odd_map(r, r, pm({{"1"}}), pm({{"1"}}));
    SuperMatrix mixed = even + odd;
    try {
        lgtk::graded_commutator(mixed, even);
        FAIL("expected rejection");
    } catch (const lgtk::Error& e) {
        REQUIRE(e.code() == lgtk::errc::mixed_parity);
    }
}

TEST_CASE("composition respects block shapes") {
    SuperRank a{1, 2}, b{2, 1}, c{1, 1};
    SuperMatrix f = SuperMatrix::zero(b, a, 1);   // a -> b
    SuperMatrix g = SuperMatrix::zero(c, b, 1);   // b -> c
    SuperMatrix h = g * f;                        // a -> c
    REQUIRE(h.ee().rows() == 1);
    REQUIRE(h.ee().cols() == 1);
    REQUIRE(h.eo().cols() == 2);
}

TEST_CASE("entrywise derivative of a supermatrix") {
    SuperRank r{1, 1};
    SuperMatrix m = SuperMatrix::even_map(r, r, pm({{"z^3"}}), pm({{"z"}}));
    SuperMatrix dm = m.derivative(0);
    REQUIRE(dm.ee().at(0, 0) == uni("3*z^2"));
    REQUIRE(dm.oo().at(0, 0) == uni("1"));
}

TEST_CASE("scalar and polynomial scaling act entrywise") {
    SuperRank r{1, 1};
    SuperMatrix m = SuperMatrix::odd_map(r, r, pm({{"z"}}), pm({{"1"}}));
    SuperMatrix two = GaussianRational(2) * m;
    REQUIRE(two.eo().at(0, 0) == uni("2*z"));
    SuperMatrix zm = uni("z") * m;
    REQUIRE(zm.oe().at(0, 0) == uni("z"));
}
