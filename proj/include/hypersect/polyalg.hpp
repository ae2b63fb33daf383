#pragma once

#include "hypersect/multipoly.hpp"
#include "hypersect/prs.hpp"
#include "hypersect/unipoly.hpp"

#include <string_view>
#include <vector>

namespace hypersect {

/// Coefficient ring Q[vars] for the PRS templates; every value shares one tuple.
struct MultiPolyRing {
    using value_type = MultiPoly;
    VarList vars;

    MultiPoly zero() const { return MultiPoly(vars); }
    MultiPoly one() const { return MultiPoly::constant(vars, 1); }
    bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
    MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
    MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
    MultiPoly neg(const MultiPoly& a) const { return -a; }
    MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) const { return exact_quotient(a, b); }
};

/// Coefficient ring Z.
struct IntegerRing {
    using value_type = Integer;
    Integer zero() const { return 0; }
    Integer one() const { return 1; }
    bool is_zero(const Integer& a) const { return a == 0; }
    Integer add(const Integer& a, const Integer& b) const { return a + b; }
    Integer sub(const Integer& a, const Integer& b) const { return a - b; }
    Integer mul(const Integer& a, const Integer& b) const { return a * b; }
    Integer neg(const Integer& a) const { return -a; }
    Integer exact_div(const Integer& a, const Integer& b) const;
};

/// Dense coefficient list of p in `var`, coefficients over p's tuple.
prs::Dense<MultiPolyRing> to_dense(const MultiPoly& p, std::size_t var);

/// Res_var(f, g) as a polynomial over the tuple with `var` removed.
/// Both inputs need positive degree in var (PreconditionError otherwise).
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var);
/// Same, keeping the full variable tuple.
MultiPoly resultant_in(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Resultant of univariate polynomials (degrees taken as actual degrees).
Rational resultant(const UniPoly& a, const UniPoly& b);
Integer resultant(const std::vector<Integer>& a, const std::vector<Integer>& b);

/// Multivariate gcd over Q, normalized by normalize_lex_monic. gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
/// Gcd of the coefficients of p viewed as a polynomial in var.
MultiPoly content_in(const MultiPoly& p, std::size_t var);
MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var);
/// Product of the distinct irreducible factors of p, normalized. p nonzero.
MultiPoly squarefree_part(const MultiPoly& p);
bool is_squarefree(const MultiPoly& p);

/// Determinant of a square rational matrix (fraction-free elimination).
Rational determinant(std::vector<std::vector<Rational>> m);

/// Principal subresultant coefficient psc_j(a, b) of univariate polynomials.
Rational principal_subresultant(const UniPoly& a, const UniPoly& b, int j);

}  // namespace hypersect
