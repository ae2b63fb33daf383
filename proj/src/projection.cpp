#include "hypersect/projection.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/polyalg.hpp"

#include <tuple>

namespace hypersect {

Hypersurface make_hypersurface(const MultiPoly& p) {
    if (p.is_constant()) throw PreconditionError("a hypersurface needs a nonconstant polynomial");
    return {squarefree_part(p), true};
}

void require_trivariate(const Hypersurface& H) {
    if (H.f.nvars() != 3) throw PreconditionError("expected a polynomial in exactly three variables");
}

LexLeadingVector predict_substituted_degree(const MultiPoly& f, int phi_degree, int h_degree) {
    if (f.nvars() != 3) throw PreconditionError("expected a polynomial in exactly three variables");
    if (f.is_zero()) throw PreconditionError("degree prediction for the zero polynomial");
    LexLeadingVector out;
    const Monomial* best = nullptr;
    for (const auto& t : f.terms()) {
        if (!best || std::tie(t.exps[1], t.exps[0], t.exps[2]) > std::tie((*best)[1], (*best)[0], (*best)[2]))
            best = &t.exps;
    }
    out.exponents = {(*best)[0], (*best)[1], (*best)[2]};
    out.d1 = phi_degree;
    out.d2 = phi_degree * h_degree;
    out.predicted_degree = static_cast<long>(out.exponents[0]) * out.d1 + static_cast<long>(out.exponents[1]) * out.d2 +
                           static_cast<long>(out.exponents[2]);
    return out;
}

FinitenessCertificate check_finite_projection(const Hypersurface& H) {
    require_trivariate(H);
    FinitenessCertificate c;
    c.leading_coefficient = leading_coefficient_in(H.f, 2);
    c.finite = !c.leading_coefficient.is_zero() && c.leading_coefficient.is_constant();
    if (c.finite) c.sheet_count = H.f.degree_in(2);
    return c;
}

DiscriminantCurve discriminant_curve(const Hypersurface& H) {
    const auto fin = check_finite_projection(H);
    if (!fin.finite) throw PreconditionError("projection is not finite: z-leading coefficient is not a constant");
    const VarList plane{H.f.vars()[0], H.f.vars()[1]};
    DiscriminantCurve out{MultiPoly::constant(plane, 1), fin.sheet_count, true};
    if (fin.sheet_count <= 1) return out;
    const MultiPoly R = resultant(H.f, derivative(H.f, 2), H.f.vars()[2]);
    if (R.is_zero()) {
        if (H.squarefree) throw InternalDisagreement("discriminant vanishes identically for a squarefree polynomial");
        throw PreconditionError("discriminant vanishes identically; the polynomial is not squarefree");
    }
    if (R.is_constant()) return out;
    out.F = squarefree_part(R);
    out.no_branching = false;
    return out;
}

MultiPoly restrict_to_plane(const Hypersurface& H) {
    require_trivariate(H);
    MultiPoly r = specialize(H.f, H.f.vars()[1], 0);
    if (r.is_zero()) throw PlaneContainedError("the plane " + H.f.vars()[1] + " = 0 is contained in the hypersurface");
    return r;
}

}  // namespace hypersect
