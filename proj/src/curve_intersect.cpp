#include "hypersect/curve_intersect.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/polyalg.hpp"
#include "hypersect/random.hpp"

#include <algorithm>

namespace hypersect {

namespace {

constexpr std::int64_t kSampleBound = 10000;
constexpr int kMaxSampleDraws = 64;

const std::string& curve_x(const DiscriminantCurve& G) { return G.F.vars()[0]; }
const std::string& curve_y(const DiscriminantCurve& G) { return G.F.vars()[1]; }

UniPoly renamed(const UniPoly& p, const std::string& var) { return UniPoly(var, p.coeffs()); }

// psi(c0, x) for a rational c0.
UniPoly specialize_trace(const MultiPoly& psi, const Rational& c0) {
    return UniPoly::from_multipoly(specialize(psi, psi.vars()[0], c0), psi.vars()[1]);
}

}  // namespace

std::string fresh_parameter_name(const VarList& taken, const std::string& preferred) {
    std::string name = preferred;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
    return name;
}

PencilTrace pencil_trace(const DiscriminantCurve& Gamma, const UniPoly& g) {
    if (g.is_zero()) throw PreconditionError("pencil polynomial must be nonzero");
    const std::string& x = curve_x(Gamma);
    const std::string c = fresh_parameter_name(Gamma.F.vars());
    const VarList cx{c, x};
    const MultiPoly cg = MultiPoly::variable(cx, c) * renamed(g, x).to_multipoly(cx);
    MultiPoly psi = substitute(Gamma.F, curve_y(Gamma), cg).with_vars(cx);
    if (psi.is_zero()) throw ComponentError("the pencil curves lie in the discriminant curve");
    return {std::move(psi), renamed(g, x), Gamma};
}

TangencyProfile tangency_profile(const UniPoly& trace) {
    TangencyProfile p;
    p.trace_degree = trace.degree();
    p.factors = squarefree_factorization(trace);
    int weighted = 0;
    for (const auto& f : p.factors.factors) {
        weighted += f.multiplicity * f.q.degree();
        p.distinct_count += f.q.degree();
        if (f.multiplicity >= 2) {
            p.defect += f.multiplicity * f.q.degree();
            p.multiple_factors.push_back(f);
        }
    }
    if (weighted != p.trace_degree) throw InternalDisagreement("profile degrees do not add up to the trace degree");
    return p;
}

UniPoly restrict_curve(const DiscriminantCurve& Gamma, const UniPoly& h) {
    const std::string& x = curve_x(Gamma);
    const VarList xonly{x};
    const MultiPoly r = substitute(Gamma.F, curve_y(Gamma), renamed(h, x).to_multipoly(xonly));
    return UniPoly::from_multipoly(r, x);
}

TangencyProfile distinct_count_at(const DiscriminantCurve& Gamma, const UniPoly& h) {
    const UniPoly psi0 = restrict_curve(Gamma, h);
    if (psi0.is_zero()) throw ComponentError("the curve y = h(x) is a component of the discriminant curve");
    return tangency_profile(psi0);
}

GenericCountCertificate generic_distinct_count(const PencilTrace& trace, const SamplingOptions& options) {
    const MultiPoly& psi = trace.psi;
    GenericCountCertificate cert;
    cert.method = "subresultant-prs-over-Q[c]";
    cert.symbolic = true;
    const int n = psi.degree_in(1);
    cert.generic_degree = n;
    UniPoly lc = UniPoly::from_multipoly(leading_coefficient_in(psi, 1).with_vars({psi.vars()[0]}), psi.vars()[0]);
    if (n >= 1) {
        const MultiPolyRing R{psi.vars()};
        const auto last = prs::last_subresultant(R, to_dense(psi, 1), to_dense(derivative(psi, 1), 1));
        cert.gcd_degree = prs::degree<MultiPolyRing>(last);
    }
    cert.generic_count = n - cert.gcd_degree;

    int agreeing = 0;
    for (int draw = 0; draw < kMaxSampleDraws && agreeing < options.samples; ++draw) {
        RandomStream rng(derive_seed(options.seed, {tag(Stream::count_sample), static_cast<std::uint64_t>(draw)}));
        CountSample s;
        s.c = rng.rational(kSampleBound);
        const UniPoly at = specialize_trace(psi, s.c);
        s.trace_degree = at.degree();
        s.exceptional = is_zero(lc(s.c));
        if (!s.exceptional && n >= 1)
            s.exceptional = is_zero(principal_subresultant(at, derivative(at), cert.gcd_degree));
        if (!at.is_zero()) s.count = at.degree() < 1 ? 0 : at.degree() - gcd(at, derivative(at)).degree();
        if (!s.exceptional) {
            if (s.count != cert.generic_count)
                throw InternalDisagreement("generic count " + std::to_string(cert.generic_count) + " but " +
                                           std::to_string(s.count) + " distinct roots at c = " + to_string(s.c) +
                                           " for psi = " + psi.to_string());
            ++agreeing;
        }
        cert.samples.push_back(std::move(s));
    }
    if (agreeing < options.samples)
        throw InternalDisagreement("no non-exceptional samples found for psi = " + psi.to_string());
    cert.agreement = true;
    return cert;
}

UniPoly build_omega(const TangencyProfile& profile, bool require_zero_at_origin, const std::string& var) {
    UniPoly omega = UniPoly::constant(var, 1);
    bool vanishes_at_origin = false;
    for (const auto& f : profile.multiple_factors) {
        omega = omega * pow(renamed(f.q, var), static_cast<unsigned>(f.multiplicity));
        if (is_zero(f.q(0))) vanishes_at_origin = true;
    }
    if (require_zero_at_origin && !vanishes_at_origin) omega = omega * UniPoly::monomial(var, 1);
    return omega;
}

bool constancy_check(const DiscriminantCurve& Gamma, const UniPoly& h0, int m) {
    if (m < 0 || h0.degree() <= m) throw PreconditionError("constancy check needs deg h0 > m >= 0");
    const std::string& x = curve_x(Gamma);
    VarList vars;
    for (int i = 0; i <= m; ++i) vars.push_back(fresh_parameter_name(Gamma.F.vars(), "b" + std::to_string(i)));
    vars.push_back(x);
    MultiPoly q = renamed(h0, x).to_multipoly(vars);
    for (int i = 0; i <= m; ++i)
        q += MultiPoly::variable(vars, vars[static_cast<std::size_t>(i)]) * UniPoly::monomial(x, static_cast<unsigned>(i)).to_multipoly(vars);
    const MultiPoly r = substitute(Gamma.F, curve_y(Gamma), q).with_vars(vars);
    if (r.is_zero()) return false;
    const MultiPoly top = leading_coefficient_in(r, vars.size() - 1);
    return top.is_constant();
}

}  // namespace hypersect
