#include <doctest.h>

#include "generators.hpp"
#include "root_oracle.hpp"

#include "hypersect/conditions.hpp"
#include "hypersect/errors.hpp"
#include "hypersect/parse.hpp"

using namespace hypersect;

namespace {

const VarList XYZ{"x", "y", "z"};
const VarList XY{"x", "y"};

Hypersurface H(const char* s) { return make_hypersurface(parse_poly(s, XYZ)); }
DiscriminantCurve curve(const char* s) { return {parse_poly(s, XY), 2, false}; }
UniPoly U(const char* s) { return UniPoly::from_multipoly(parse_poly(s, {"x"}), "x"); }

bool same_outcome(const ConditionReport& a, const ConditionReport& b) {
    return a.cond1.status == b.cond1.status && a.cond2.status == b.cond2.status && a.cond3.status == b.cond3.status &&
           a.g == b.g && a.cond3.count_at_zero == b.cond3.count_at_zero &&
           a.cond3.generic_count == b.cond3.generic_count && a.diagnostics == b.diagnostics;
}

}  // namespace

TEST_CASE("condition 1 examples") {
    auto r = check_condition_1(H("z^2 - x - 1"));
    CHECK(r.status == Status::certified);
    CHECK(r.certificate.restricted_degree == 2);
    CHECK(r.certificate.distinct_roots == 2);
    CHECK(r.certificate.plane_degree == 2);

    r = check_condition_1(H("z^2 - x"));
    CHECK(r.status == Status::not_certified);
    CHECK(r.certificate.distinct_roots == 1);
    CHECK(r.failed_clauses == std::vector<std::string>{"simple-fiber"});

    CHECK(check_condition_1(H("z^2 - 1")).status == Status::certified);
    CHECK(check_condition_1(H("x*z^2 + z + y")).failed_clauses.front() == "leading-coefficient");
    CHECK_THROWS_AS(check_condition_1(H("y*(z - x)")), PlaneContainedError);
}

TEST_CASE("condition 2 examples") {
    auto r = check_condition_2(H("z^2 + y*z + x"));
    CHECK(r.status == Status::certified);
    CHECK(r.sheet_count == 2);
    CHECK(r.plane_fibers_separable);

    r = check_condition_2(H("x*z + y"));
    CHECK(r.status == Status::failed);
    CHECK(r.failed_clauses == std::vector<std::string>{"finite"});

    r = check_condition_2(H("z^2 + y"));
    CHECK(r.status == Status::failed);
    CHECK(r.failed_clauses == std::vector<std::string>{"separable"});
    CHECK(r.separability_method == "symbolic-resultant");

    r = check_condition_2(H("z^2 + y*z^3 + x"));
    CHECK(r.status == Status::failed);
}

TEST_CASE("condition 3 examples") {
    auto r = check_condition_3(curve("y - x^2"), U("x^2"));
    CHECK(r.status == Status::certified);
    CHECK(r.count_at_zero == 1);
    CHECK(r.generic_count == 1);

    r = check_condition_3(curve("y - x^2"), U("x"));
    CHECK(r.status == Status::failed);
    CHECK(r.generic_count == 2);

    const DiscriminantCurve empty{parse_poly("1", XY), 2, true};
    r = check_condition_3(empty, U("x^3 - x"));
    CHECK(r.status == Status::certified);
    CHECK(r.count_at_zero == 0);
    CHECK(r.generic_count == 0);

    CHECK_THROWS_AS(check_condition_3(curve("y - x^2"), U("x + 1")), PreconditionError);
    CHECK_THROWS_AS(check_condition_3(curve("y - x^2"), UniPoly("x")), PreconditionError);
    CHECK_THROWS_AS(check_condition_3(curve("y*(x - 1)"), U("x")), ComponentError);
}

TEST_CASE("find_pencil_polynomial examples") {
    auto s = find_pencil_polynomial(curve("y - x^2"), 4, 1);
    REQUIRE(s.g);
    CHECK(*s.g == U("x^2"));
    CHECK(s.attempts.size() == 1);
    CHECK(s.attempts.front().source == "omega");

    s = find_pencil_polynomial(curve("1 - x^2 + y"), 4, 1);
    REQUIRE(s.g);
    CHECK(*s.g == U("x"));
}

TEST_CASE("cusp through the origin fails for every budget up to 6") {
    const DiscriminantCurve cusp = curve("27*y^2 + 4*x^3");
    for (int budget = 1; budget <= 6; ++budget) {
        const auto s = find_pencil_polynomial(cusp, budget, 3);
        CHECK_FALSE(s.g);
        CHECK(s.attempts.size() >= static_cast<std::size_t>(budget));
        for (const auto& a : s.attempts) CHECK(a.results.front().generic_count > 1);
    }
    // Independent check: ord_0 psi_c = min(2 ord_0 g, 3) < deg psi_c, so psi_c keeps a
    // root away from 0 besides the one at 0.
    RandomStream rng(derive_seed(41, {1}));
    for (int i = 0; i < 20; ++i) {
        const UniPoly g = gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 5)), 6) * U("x");
        CHECK(check_condition_3(cusp, g).status == Status::failed);
    }
}

TEST_CASE("assemble_report examples") {
    const ConditionOptions opt{5, 2, 8};
    auto r = assemble_report(H("z^2 + y*z + x"), 4, opt);
    CHECK(r.cond2.status == Status::certified);
    CHECK(r.cond1.status == Status::not_certified);
    CHECK_FALSE(r.all_certified());

    r = assemble_report(H("z^2 - x - 1"), 4, opt);
    CHECK(r.all_certified());
    CHECK(r.g == U("x"));
    CHECK(r.cond3.count_at_zero == 1);

    r = assemble_report(H("z^2 - 1"), 4, opt);
    CHECK(r.all_certified());
    CHECK(r.g == U("x"));
    CHECK(r.cond3.route == "no-branching");

    r = assemble_report(H("x*z + y"), 4, opt);
    CHECK(r.cond2.status == Status::failed);
    CHECK(r.cond1.status == Status::skipped);
    CHECK(r.cond3.status == Status::skipped);

    r = assemble_report(H("z^2 + y"), 4, opt);
    CHECK(r.cond3.status == Status::failed);
    CHECK(r.diagnostics == std::vector<std::string>{"line-in-discriminant"});

    r = assemble_report(H("y*(z^2 - x)"), 4, opt);
    CHECK(r.diagnostics == std::vector<std::string>{"projection-not-finite"});
    CHECK_FALSE(r.all_certified());
}

TEST_CASE("property: scaling invariance and determinism") {
    RandomStream rng(derive_seed(41, {2}));
    const ConditionOptions opt{9, 2, 8};
    for (int i = 0; i < 15; ++i) {
        const MultiPoly f = parse_poly("z^2", XYZ) + gen::random_poly(rng, XYZ, {2, 2, 1}, 4, 5);
        const Rational lambda = gen::small_rational(rng);
        if (is_zero(lambda)) continue;
        const auto a = assemble_report(make_hypersurface(f), 3, opt);
        const auto b = assemble_report(make_hypersurface(f.scaled(lambda)), 3, opt);
        const auto c = assemble_report(make_hypersurface(f), 3, opt);
        CHECK(same_outcome(a, b));
        CHECK(same_outcome(a, c));
    }
}

TEST_CASE("property: certified condition 1 agrees with numeric roots") {
    RandomStream rng(derive_seed(41, {3}));
    int certified = 0;
    for (int i = 0; i < 40; ++i) {
        const UniPoly fiber = gen::random_uni(rng, "z", 3, 6);
        MultiPoly f = fiber.to_multipoly(XYZ).scaled(Rational(1) / fiber.leading_coefficient()) + gen::random_poly(rng, XYZ, {2, 2, 2}, 5, 6);
        if (i % 3 == 0) f = f * parse_poly("z", XYZ) + parse_poly("x", XYZ);
        const Hypersurface h = make_hypersurface(f);
        Condition1Result r;
        try {
            r = check_condition_1(h);
        } catch (const PlaneContainedError&) {
            continue;
        }
        const UniPoly u = UniPoly::from_multipoly(specialize(specialize(h.f, "y", 0), "x", 0), "z");
        if (r.status != Status::certified) continue;
        ++certified;
        const auto clusters = oracle::root_clusters(u);
        CHECK(static_cast<int>(clusters.size()) == r.certificate.restricted_degree);
        for (const auto& c : clusters) CHECK(c.size == 1);
    }
    CHECK(certified >= 20);
}

TEST_CASE("property: larger budgets never lose a certified pencil") {
    RandomStream rng(derive_seed(41, {4}));
    int certified = 0;
    for (int i = 0; i < 20; ++i) {
        MultiPoly F = gen::random_poly(rng, XY, {3, 2}, 4, 5) + parse_poly("y", XY);
        if (i % 2 == 0) F = F * (parse_poly("y", XY) - pow(parse_poly("x", XY), 2));
        const DiscriminantCurve G{F, 2, false};
        try {
            (void)distinct_count_at(G, UniPoly("x"));
        } catch (const ComponentError&) {
            continue;
        }
        bool seen = false;
        for (int b = 1; b <= 4; ++b) {
            const auto s = find_pencil_polynomial(G, b, 7);
            if (seen) CHECK(s.g.has_value());
            seen = seen || s.g.has_value();
        }
        certified += seen;
    }
    CHECK(certified >= 3);
}

TEST_CASE("property: sheared route agrees with the explicit route") {
    RandomStream rng(derive_seed(41, {5}));
    int compared = 0;
    for (int i = 0; i < 12; ++i) {
        const MultiPoly f = parse_poly("z^2 + y^2", XYZ) + gen::random_poly(rng, XYZ, {1, 1, 1}, 4, 4);
        const PencilStructure s{f, gen::random_uni(rng, "z", 1, 3), gen::random_uni(rng, "x", 2, 3),
                                gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 2)), 3)};
        const Hypersurface h{surface_of(s), true};
        const UniPoly g = U("x") * gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 1)), 3);
        const auto a = assemble_report_with_pencil(h, g, {3, 2, 8}, s);
        const auto b = assemble_report_with_pencil(h, g, {3, 2, 0}, s);
        if (a.cond3.route != "explicit-discriminant") continue;
        CHECK(b.cond3.route == "sheared-resultant");
        CHECK(a.cond3.count_at_zero == b.cond3.count_at_zero);
        CHECK(a.cond3.status == b.cond3.status);
        CHECK(a.cond3.generic_count == b.cond3.generic_count);
        ++compared;
    }
    CHECK(compared >= 8);
}
