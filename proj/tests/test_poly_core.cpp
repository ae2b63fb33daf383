#include <doctest.h>

#include "generators.hpp"
#include "root_oracle.hpp"
#include "sylvester.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/parse.hpp"
#include "hypersect/polyalg.hpp"

using namespace hypersect;

namespace {

const VarList XYZ{"x", "y", "z"};
const VarList XY{"x", "y"};

MultiPoly P(const char* s, const VarList& v = XYZ) { return parse_poly(s, v); }
UniPoly U(const char* s) { return UniPoly::from_multipoly(parse_poly(s, {"x"}), "x"); }

}  // namespace

TEST_CASE("parse examples") {
    const MultiPoly p = P("z^2 - x");
    REQUIRE(p.size() == 2);
    CHECK(p.coefficient({0, 0, 2}) == 1);
    CHECK(p.coefficient({1, 0, 0}) == -1);
    CHECK(P("0").is_zero());
    CHECK(P("(y + x)^2 - y^2 - 2*x*y", XY) == P("x^2", XY));
    CHECK(P("3/6*x") == P("1/2 * x"));
    CHECK(P("-(-x)") == P("x"));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_poly("x + w", XYZ);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_poly("x +", XYZ), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1", XYZ), ParseError);
    CHECK_THROWS_AS(parse_poly("x/0", XYZ), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", XYZ), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", XYZ), ParseError);
    CHECK_THROWS_AS(parse_poly("", XYZ), ParseError);
    CHECK_THROWS_AS(parse_var_list("x,,y"), ParseError);
    CHECK_THROWS_AS(parse_var_list("x,x"), ParseError);
}

TEST_CASE("ring operations") {
    CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
    const MultiPoly p = P("x*y - 3*z + 1/2");
    CHECK(p + MultiPoly(XYZ) == p);
    CHECK(pow(P("x+1"), 3) == P("x^3 + 3*x^2 + 3*x + 1"));
    CHECK_THROWS_AS(P("x", XY) + P("x"), VariableMismatch);
}

TEST_CASE("canonical printing") {
    CHECK(P("z^2 - x + 3*x*y^2 - 1/2").to_string() == "3*x*y^2 + z^2 - x - 1/2");
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("0").to_string() == "0");
}

TEST_CASE("substitute examples") {
    CHECK(substitute(P("y"), "y", P("y + x^3")) == P("y + x^3"));
    CHECK(substitute(P("z^2 - x"), "x", P("x + z")) == P("z^2 - x - z"));
    const VarList XYC{"x", "y", "c"};
    const MultiPoly r = substitute(P("y^2", XYC), "y", P("c*x^2", XYC));
    CHECK(r.vars() == VarList{"x", "c"});
    CHECK(r == parse_poly("c^2*x^4", {"x", "c"}));
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P("z^3 + x*z + y"), "z") == P("3*z^2 + x"));
    CHECK(partial_derivative(P("7"), "x").is_zero());
    CHECK(partial_derivative(P("x^2*y^3"), "y") == P("3*x^2*y^2"));
}

TEST_CASE("univariate gcd") {
    CHECK(gcd(U("x^2 - 1"), U("x - 1")) == U("x - 1"));
    CHECK(gcd(U("x^2"), U("x^3")) == U("x^2"));
    CHECK(gcd(U("x^3 - x"), U("x^2 + x")) == U("x^2 + x"));
    CHECK(gcd(U("2*x + 4"), UniPoly("x")) == U("x + 2"));
    CHECK_THROWS_AS(gcd(UniPoly("x"), UniPoly("x")), PreconditionError);
}

TEST_CASE("squarefree factorization examples") {
    auto s = squarefree_factorization(U("4*x^3"));
    CHECK(s.unit == 4);
    REQUIRE(s.factors.size() == 1);
    CHECK(s.factors[0] == SquarefreeFactor{U("x"), 3});

    s = squarefree_factorization(U("x^2 - 1"));
    CHECK(s.unit == 1);
    REQUIRE(s.factors.size() == 1);
    CHECK(s.factors[0] == SquarefreeFactor{U("x^2 - 1"), 1});

    s = squarefree_factorization(U("x^3*(x-1)^2"));
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == SquarefreeFactor{U("x - 1"), 2});
    CHECK(s.factors[1] == SquarefreeFactor{U("x"), 3});
    CHECK_THROWS_AS(squarefree_factorization(UniPoly("x")), PreconditionError);
}

TEST_CASE("resultant examples") {
    CHECK(resultant(P("z^2 - x"), P("2*z"), "z") == P("-4*x", XY));
    CHECK(resultant(P("z^3 + x*z + y"), P("3*z^2 + x"), "z") == P("4*x^3 + 27*y^2", XY));
    const VarList ABZ{"a", "b", "z"};
    CHECK(resultant(parse_poly("z - a", ABZ), parse_poly("z - b", ABZ), "z") == parse_poly("a - b", {"a", "b"}));
    CHECK_THROWS_AS(resultant(P("x"), P("z"), "z"), PreconditionError);
}

TEST_CASE("multivariate gcd and squarefree part") {
    CHECK(gcd(P("(x+y)^2*(z-x)"), P("(x+y)*(z+1)")) == P("x+y"));
    CHECK(gcd(P("x*z^2 - x"), P("y*z - y")) == P("z - 1"));
    CHECK(squarefree_part(P("x^2*(z-1)")) == P("x*z - x"));
    CHECK(squarefree_part(P("(z-x)^2")) == P("z - x"));
    CHECK(is_squarefree(P("z^2 - x")));
    CHECK_FALSE(is_squarefree(P("(z^2 - x)^2*y")));
}

TEST_CASE("property: multivariate gcd extracts the planted factor") {
    RandomStream rng(derive_seed(11, {7}));
    for (int i = 0; i < 40; ++i) {
        const MultiPoly c = gen::random_poly(rng, XYZ, {2, 1, 2}, 3, 6) + P("z");
        const MultiPoly a = gen::random_poly(rng, XYZ, {2, 2, 2}, 4, 9) + P("z^2");
        const MultiPoly b = gen::random_poly(rng, XYZ, {2, 2, 1}, 4, 9) + P("x*z");
        const MultiPoly g = gcd(a * c, b * c);
        REQUIRE(divide_exact(g, c).has_value());
        const auto ca = divide_exact(a * c, g), cb = divide_exact(b * c, g);
        REQUIRE(ca.has_value());
        REQUIRE(cb.has_value());
        // Cofactors with positive z-degree share no factor involving z iff Res_z is nonzero.
        if (ca->degree_in(2) > 0 && cb->degree_in(2) > 0) CHECK_FALSE(resultant(*ca, *cb, "z").is_zero());
    }
}

TEST_CASE("property: parse(print(p)) == p") {
    RandomStream rng(derive_seed(11, {1}));
    for (int i = 0; i < 200; ++i) {
        MultiPoly p = gen::random_poly(rng, XYZ, {4, 4, 4}, 6, 50);
        p = p.scaled(gen::small_rational(rng, 20) + Rational(1, 7));
        CHECK(parse_poly(p.to_string(), XYZ) == p);
    }
}

TEST_CASE("property: squarefree reconstruction") {
    RandomStream rng(derive_seed(11, {2}));
    for (int i = 0; i < 100; ++i) {
        UniPoly u = UniPoly::constant("x", rng.nonzero(9));
        int degree = 0;
        while (degree < 12) {
            const int d = static_cast<int>(rng.uniform(1, 3));
            const int e = static_cast<int>(rng.uniform(1, 3));
            if (degree + d * e > 12) break;
            u = u * pow(gen::random_uni(rng, "x", d, 5), static_cast<unsigned>(e));
            degree += d * e;
        }
        const auto s = squarefree_factorization(u);
        CHECK(s.expand("x") == u);
        for (std::size_t a = 0; a < s.factors.size(); ++a) {
            CHECK(gcd(s.factors[a].q, derivative(s.factors[a].q)).degree() == 0);
            CHECK(s.factors[a].q.leading_coefficient() == 1);
            for (std::size_t b = a + 1; b < s.factors.size(); ++b) CHECK(gcd(s.factors[a].q, s.factors[b].q).degree() == 0);
        }
    }
}

TEST_CASE("property: PRS resultant matches the Sylvester determinant") {
    RandomStream rng(derive_seed(11, {3}));
    for (int i = 0; i < 60; ++i) {
        const MultiPoly f = gen::random_poly(rng, XYZ, {2, 2, 4}, 6, 9) + P("z^2");
        const MultiPoly g = gen::random_poly(rng, XYZ, {2, 2, 3}, 5, 9) + P("x*z");
        const MultiPoly r = resultant(f, g, "z");
        const int df = f.degree_in(2), dg = g.degree_in(2);
        for (int k = 0; k < 3; ++k) {
            const Rational a = gen::small_rational(rng), b = gen::small_rational(rng);
            auto coeffs = [&](const MultiPoly& p) {
                std::vector<Rational> out;
                for (const auto& c : coefficients_in(p, 2)) {
                    const std::vector<Rational> pt{a, b, Rational(0)};
                    out.push_back(evaluate_all(c, pt));
                }
                return out;
            };
            const std::vector<Rational> ab{a, b};
            CHECK(evaluate_all(r, ab) == oracle::sylvester_resultant(coeffs(f), coeffs(g), df, dg));
        }
    }
}

TEST_CASE("property: resultant multiplicativity") {
    RandomStream rng(derive_seed(11, {4}));
    for (int i = 0; i < 25; ++i) {
        const MultiPoly f = gen::random_poly(rng, XYZ, {1, 1, 2}, 4, 5) + P("z^2");
        const MultiPoly g = gen::random_poly(rng, XYZ, {1, 1, 2}, 4, 5) + P("z");
        const MultiPoly h = gen::random_poly(rng, XYZ, {1, 1, 2}, 4, 5) + P("z^3");
        CHECK(resultant(f * g, h, "z") == resultant(f, h, "z") * resultant(g, h, "z"));
    }
}

TEST_CASE("property: resultant vanishing agrees with numeric roots") {
    RandomStream rng(derive_seed(11, {5}));
    for (int i = 0; i < 30; ++i) {
        const Rational a = gen::small_rational(rng), b = gen::small_rational(rng);
        MultiPoly f = gen::random_poly(rng, XYZ, {2, 2, 3}, 5, 20) + P("z^3");
        MultiPoly g = gen::random_poly(rng, XYZ, {2, 2, 2}, 5, 20) + P("2*z^2");
        if (i % 3 == 0) {
            // Force a common root z = t over the line x = a.
            const MultiPoly shift = P("z") - MultiPoly::constant(XYZ, gen::small_rational(rng));
            const MultiPoly off = P("x") - MultiPoly::constant(XYZ, a);
            f = shift * f + off * P("y + 1");
            g = shift * g + off * P("z - y");
        }
        const std::vector<Rational> ab{a, b};
        const bool exact_zero = is_zero(evaluate_all(resultant(f, g, "z"), ab));
        const UniPoly fa = UniPoly::from_multipoly(specialize(specialize(f, "x", a), "y", b), "z");
        const UniPoly ga = UniPoly::from_multipoly(specialize(specialize(g, "x", a), "y", b), "z");
        if (i % 3 == 0) CHECK(exact_zero);
        CHECK(exact_zero == oracle::roots_intersect(fa, ga));
    }
}
