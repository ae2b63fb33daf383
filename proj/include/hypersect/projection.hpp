#pragma once

#include "hypersect/multipoly.hpp"

#include <array>
#include <optional>

namespace hypersect {

/// Zero set of f. Roles are positional: with vars (x, y, z), the projection is
/// (x, y, z) -> (x, y) and the plane A0 is {y = 0}.
struct Hypersurface {
    MultiPoly f;
    bool squarefree = false;
};

/// Squarefree part of p, normalized (lex-leading coefficient 1, last variable highest).
/// Throws PreconditionError for constant input.
Hypersurface make_hypersurface(const MultiPoly& p);

/// Lex-greatest exponent vector and the degree in z it predicts after
/// x -> x + phi(z), y -> y + h(x + phi(z)). The order ranks y, then x, then z,
/// matching the weights d2 = deg(h) * deg(phi) > d1 = deg(phi).
struct LexLeadingVector {
    std::array<unsigned, 3> exponents;  ///< (k0, l0, m0) for (x, y, z)
    int d1 = 0;
    int d2 = 0;
    long predicted_degree = 0;  ///< k0*d1 + l0*d2 + m0
};

LexLeadingVector predict_substituted_degree(const MultiPoly& f, int phi_degree, int h_degree);

struct FinitenessCertificate {
    bool finite = false;
    int sheet_count = 0;
    MultiPoly leading_coefficient;
    std::optional<LexLeadingVector> lex_leading;
};

FinitenessCertificate check_finite_projection(const Hypersurface& H);

/// Squarefree discriminant curve over the first two variables.
struct DiscriminantCurve {
    MultiPoly F;
    int source_sheets = 0;
    bool no_branching = false;  ///< Res_z(f, f_z) is a nonzero constant; F = 1
};

/// Requires a finite projection; throws PreconditionError otherwise.
DiscriminantCurve discriminant_curve(const Hypersurface& H);

/// f(x, 0, z) over (x, z); throws PlaneContainedError when it vanishes identically.
MultiPoly restrict_to_plane(const Hypersurface& H);

/// Throws PreconditionError unless H has exactly three variables.
void require_trivariate(const Hypersurface& H);

}  // namespace hypersect
