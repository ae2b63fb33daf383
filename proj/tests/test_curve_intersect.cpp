#include <doctest.h>

#include "generators.hpp"
#include "root_oracle.hpp"

#include "hypersect/curve_intersect.hpp"
#include "hypersect/errors.hpp"
#include "hypersect/parse.hpp"
#include "hypersect/polyalg.hpp"

using namespace hypersect;

namespace {

const VarList XY{"x", "y"};
const VarList CX{"c", "x"};

DiscriminantCurve curve(const char* s) { return {parse_poly(s, XY), 2, false}; }
UniPoly U(const char* s) { return UniPoly::from_multipoly(parse_poly(s, {"x"}), "x"); }

}  // namespace

TEST_CASE("pencil_trace examples") {
    CHECK(pencil_trace(curve("y - x^2"), U("x^2")).psi == parse_poly("(c-1)*x^2", CX));
    CHECK(pencil_trace(curve("y - x^2"), U("x")).psi == parse_poly("c*x - x^2", CX));
    CHECK(pencil_trace(curve("4*x^3 + 27*y^2"), U("x")).psi == parse_poly("4*x^3 + 27*c^2*x^2", CX));
    CHECK_THROWS_AS(pencil_trace(curve("y"), UniPoly("x")), PreconditionError);
    const DiscriminantCurve c_clash{parse_poly("c - x", {"x", "c"}), 2, false};
    CHECK(pencil_trace(c_clash, U("x")).psi.vars() == VarList{"c_", "x"});
}

TEST_CASE("distinct_count_at examples") {
    auto p = distinct_count_at(curve("y - x^2"), UniPoly("x"));
    CHECK(p.distinct_count == 1);
    CHECK(p.defect == 2);
    REQUIRE(p.multiple_factors.size() == 1);
    CHECK(p.multiple_factors[0] == SquarefreeFactor{U("x"), 2});

    p = distinct_count_at(curve("4*x^3 + 27*y^2"), UniPoly("x"));
    CHECK(p.distinct_count == 1);
    CHECK(p.defect == 3);

    p = distinct_count_at(curve("y - x^2 + 1"), UniPoly("x"));
    CHECK(p.distinct_count == 2);
    CHECK(p.defect == 0);
    CHECK_THROWS_AS(distinct_count_at(curve("y*(x+1)"), UniPoly("x")), ComponentError);
}

TEST_CASE("generic_distinct_count examples") {
    const SamplingOptions opt{5, 3};
    auto cert = generic_distinct_count(pencil_trace(curve("y - x^2"), U("x^2")), opt);
    CHECK(cert.generic_count == 1);
    CHECK(cert.agreement);
    CHECK(cert.symbolic);
    cert = generic_distinct_count(pencil_trace(curve("y - x^2"), U("x")), opt);
    CHECK(cert.generic_count == 2);
    cert = generic_distinct_count(pencil_trace(curve("4*x^3 + 27*y^2"), U("x")), opt);
    CHECK(cert.generic_count == 2);
    CHECK(cert.generic_degree == 3);
    CHECK(cert.gcd_degree == 1);
}

TEST_CASE("empty curve traces") {
    const DiscriminantCurve empty{parse_poly("1", XY), 2, true};
    const auto cert = generic_distinct_count(pencil_trace(empty, U("x")), {1, 2});
    CHECK(cert.generic_count == 0);
    CHECK(distinct_count_at(empty, UniPoly("x")).distinct_count == 0);
}

TEST_CASE("build_omega examples") {
    const auto p1 = distinct_count_at(curve("y - x^2"), UniPoly("x"));
    CHECK(build_omega(p1, true, "x") == U("x^2"));
    const auto p2 = distinct_count_at(curve("1 - x^2 + y"), UniPoly("x"));
    CHECK(build_omega(p2, true, "x") == U("x"));
    CHECK(build_omega(p2, false, "x") == U("1"));
    const auto p3 = tangency_profile(U("(x-1)^2*(x+3)"));
    CHECK(build_omega(p3, true, "x") == U("x*(x-1)^2"));
}

TEST_CASE("constancy_check examples") {
    CHECK(constancy_check(curve("y - x^2"), U("x^3"), 2));
    CHECK(constancy_check(curve("y^2 - x"), U("x^2"), 1));
    CHECK_FALSE(constancy_check(curve("y^2 - x^4"), U("x^2"), 1));
    CHECK_THROWS_AS(constancy_check(curve("y"), UniPoly("x"), 1), PreconditionError);
}

TEST_CASE("property: profile identities and numeric cluster agreement") {
    RandomStream rng(derive_seed(31, {1}));
    for (int i = 0; i < 60; ++i) {
        // Products with repeated factors exercise the defect bookkeeping.
        MultiPoly F = gen::random_poly(rng, XY, {2, 2}, 3, 9) + parse_poly("y", XY);
        if (i % 2 == 0) F = F * pow(parse_poly("y - x", XY) + MultiPoly::constant(XY, rng.uniform(-3, 3)), 2);
        const DiscriminantCurve G{F, 2, false};
        const UniPoly h = gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 5)), 5);
        const UniPoly psi0 = restrict_curve(G, h);
        if (psi0.is_zero()) continue;
        const auto p = distinct_count_at(G, h);
        int weighted = 0, defect = 0, distinct = 0;
        for (const auto& f : p.factors.factors) {
            weighted += f.multiplicity * f.q.degree();
            distinct += f.q.degree();
            if (f.multiplicity >= 2) defect += f.multiplicity * f.q.degree();
        }
        CHECK(p.trace_degree == weighted);
        CHECK(p.defect == defect);
        CHECK(p.distinct_count == distinct);
        if (psi0.degree() > 0) CHECK(p.distinct_count == oracle::count_clusters(psi0));
    }
}

TEST_CASE("property: shear equivariance of distinct counts") {
    RandomStream rng(derive_seed(31, {2}));
    for (int i = 0; i < 40; ++i) {
        const MultiPoly F = gen::random_poly(rng, XY, {3, 2}, 4, 9) + parse_poly("y^2", XY);
        const UniPoly s = gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 3)), 5);
        const UniPoly h = gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 3)), 5);
        const DiscriminantCurve G{F, 2, false};
        const DiscriminantCurve Gs{substitute(F, "y", parse_poly("y", XY) + s.to_multipoly(XY)), 2, false};
        if (restrict_curve(G, h).is_zero()) continue;
        CHECK(distinct_count_at(G, h).distinct_count == distinct_count_at(Gs, h - s).distinct_count);
    }
}

TEST_CASE("property: counts at special c never exceed generic count plus degree drop") {
    RandomStream rng(derive_seed(31, {3}));
    for (int i = 0; i < 30; ++i) {
        const MultiPoly F = gen::random_poly(rng, XY, {3, 3}, 5, 6) + parse_poly("x*y", XY);
        const UniPoly g = gen::random_uni(rng, "x", static_cast<int>(rng.uniform(1, 3)), 4) * U("x");
        PencilTrace t;
        try {
            t = pencil_trace({F, 2, false}, g);
        } catch (const ComponentError&) {
            continue;
        }
        const auto cert = generic_distinct_count(t, {static_cast<std::uint64_t>(i), 5});
        for (int c = -3; c <= 3; ++c) {
            const UniPoly at = UniPoly::from_multipoly(specialize(t.psi, "c", c), "x");
            if (at.is_zero() || at.degree() < 1) continue;
            const int count = at.degree() - gcd(at, derivative(at)).degree();
            CHECK(count <= cert.generic_count + (cert.generic_degree - at.degree()));
        }
    }
}
