#include <catch2/catch_amalgamated.hpp>

#include "lgtk/poly_io.hpp"
#include "lgtk/tft_check.hpp"

using lgtk::AxiomCheck;
using lgtk::AxiomReport;
using lgtk::CheckStatus;
using lgtk::GaussianRational;
using lgtk::MatrixFactorization;
using lgtk::Morphism;
using lgtk::Normalization;
using lgtk::Polynomial;
using lgtk::PolyMatrix;
using lgtk::Rational;
using lgtk::SuperMatrix;
using lgtk::TftInstance;
using lgtk::TftOptions;
using lgtk::VolumeForm;

namespace {

Polynomial uni(const std::string& s) { return lgtk::parse_polynomial(s, {"z"}); }

PolyMatrix scalar1(const Polynomial& p) {
    PolyMatrix m(1, 1, p.num_vars());
    m.at(0, 0) = p;
    return m;
}

MatrixFactorization rank1(const Polynomial& w, const std::string& u, const std::string& v) {
    return lgtk::make_factorization(w, scalar1(uni(u)), scalar1(uni(v)));
}

TftInstance quadratic_instance(const Normalization& norm = {}) {
    Polynomial w = uni("z^2");
    return lgtk::build_instance(w, {"z"}, {{"a", rank1(w, "z", "z")}}, VolumeForm::unit(1), norm,
                                TftOptions{});
}

TftInstance cusp_instance() {
    Polynomial w = uni("z^3");
    return lgtk::build_instance(
        w, {"z"}, {{"a", rank1(w, "z", "z^2")}, {"b", rank1(w, "z^2", "z")}}, VolumeForm::unit(1),
        Normalization{}, TftOptions{});
}

TftInstance quartic_instance() {
    Polynomial w = uni("z^4");
    return lgtk::build_instance(w, {"z"},
                                {{"a1", rank1(w, "z", "z^3")},
                                 {"a2", rank1(w, "z^2", "z^2")},
                                 {"a3", rank1(w, "z^3", "z")}},
                                VolumeForm::unit(1), Normalization{}, TftOptions{});
}

const AxiomCheck& find_check(const AxiomReport& report, const std::string& name) {
    for (const auto& c : report.checks)
        if (c.name == name) return c;
    FAIL("no check named " + name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("the quadratic instance satisfies every required axiom") {
    TftInstance inst = quadratic_instance();
    AxiomReport report = lgtk::full_report(inst);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << lgtk::status_name(c.status));
        REQUIRE(c.ok());
    }
    REQUIRE(report.all_required_pass());

    REQUIRE(find_check(report, "unitality (c_e = 1 override)").status == CheckStatus::pass);
    const AxiomCheck& unit = find_check(report, "unitality (instance normalization)");
    REQUIRE(unit.status == CheckStatus::pass_up_to_scalar);
    REQUIRE(unit.constant == GaussianRational::i());
    REQUIRE(find_check(report, "multiplicativity (c_e = 1 override)").status == CheckStatus::pass);

    const AxiomCheck& cardy = find_check(report, "cardy condition");
    REQUIRE(!cardy.required);
    REQUIRE(cardy.status == CheckStatus::conjecture_verified);
    REQUIRE(cardy.constant == GaussianRational(1));

    REQUIRE(find_check(report, "bulk pairing non-degeneracy").status ==
            CheckStatus::conjecture_verified);
    REQUIRE(find_check(report, "boundary pairing non-degeneracy").status ==
            CheckStatus::conjecture_verified);
}

TEST_CASE("forcing the unit normalization makes unitality exact") {
    Normalization norm;
    norm.c_e = GaussianRational(1);
    TftInstance inst = quadratic_instance(norm);
    AxiomReport report = lgtk::full_report(inst);
    const AxiomCheck& unit = find_check(report, "unitality (instance normalization)");
    REQUIRE(unit.status == CheckStatus::pass);
    REQUIRE(unit.constant == GaussianRational(1));
}

TEST_CASE("adjointness values for the quadratic brane") {
    TftInstance inst = quadratic_instance();
    const auto& a = inst.objects[0].second;
    Morphism s = lgtk::make_morphism(
        a, a, SuperMatrix::odd_map(a.rank, a.rank, scalar1(uni("1")), scalar1(uni("-1"))));
    Polynomial h = uni("1");

    Polynomial fs = lgtk::boundary_bulk(a, s, inst.milnor, inst.vol, inst.norm);
    GaussianRational closed_route = lgtk::bulk_trace(inst.engine, h * fs, inst.vol, inst.norm);
    Morphism eh = lgtk::bulk_boundary(a, h, inst.milnor, inst.norm);
    GaussianRational open_route =
        lgtk::boundary_trace(inst.engine, a, lgtk::compose(eh, s), inst.milnor, inst.norm);

    GaussianRational minus_i(Rational(0), Rational(-1));
    REQUIRE(closed_route == minus_i);
    REQUIRE(open_route == minus_i);
}

TEST_CASE("degree selection zeroes the even disk images in one variable") {
    TftInstance inst = quadratic_instance();
    const auto& a = inst.objects[0].second;
    Morphism id = lgtk::identity_morphism(a);
    REQUIRE(lgtk::boundary_bulk(a, id, inst.milnor, inst.vol, inst.norm).is_zero());
    REQUIRE(lgtk::boundary_trace(inst.engine, a, id, inst.milnor, inst.norm).is_zero());
}

TEST_CASE("the cusp instance satisfies every required axiom") {
    TftInstance inst = cusp_instance();
    AxiomReport report = lgtk::full_report(inst);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << lgtk::status_name(c.status));
        REQUIRE(c.ok());
    }
    const AxiomCheck& cardy = find_check(report, "cardy condition");
    REQUIRE(cardy.status == CheckStatus::conjecture_verified);
    // every disk one-point function vanishes here, so no scalar gets recorded
    REQUIRE(!cardy.constant);
}

TEST_CASE("the quartic instance satisfies every required axiom") {
    TftInstance inst = quartic_instance();
    AxiomReport report = lgtk::full_report(inst);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << lgtk::status_name(c.status));
        REQUIRE(c.ok());
    }
    REQUIRE(report.all_required_pass());
}

TEST_CASE("instance digests are deterministic and normalization sensitive") {
    AxiomReport r1 = lgtk::full_report(quadratic_instance());
    AxiomReport r2 = lgtk::full_report(quadratic_instance());
    REQUIRE(r1.instance_digest == r2.instance_digest);
    REQUIRE(r1.instance_digest.size() == 16);

    Normalization scaled;
    scaled.bulk_constant = GaussianRational(2);
    AxiomReport r3 = lgtk::full_report(quadratic_instance(scaled));
    REQUIRE(r1.instance_digest != r3.instance_digest);
}

TEST_CASE("objects must factor the instance potential") {
    Polynomial w = uni("z^2");
    try {
        lgtk::build_instance(w, {"z"}, {{"bad", rank1(uni("z^3"), "z", "z^2")}},
                             VolumeForm::unit(1), Normalization{}, TftOptions{});
        FAIL("expected rejection");
    } catch (const lgtk::Error& e) {
        REQUIRE(e.code() == lgtk::errc::shape_mismatch);
    }
}

TEST_CASE("hom table covers all ordered pairs") {
    TftInstance inst = cusp_instance();
    REQUIRE(inst.homs.size() == 4);
    REQUIRE(inst.hom(0, 0).even_dim() == 1);
    REQUIRE(inst.hom(0, 0).odd_dim() == 1);
    REQUIRE(inst.hom(0, 1).even_dim() == 1);
    REQUIRE(inst.hom(1, 0).odd_dim() == 1);
}
