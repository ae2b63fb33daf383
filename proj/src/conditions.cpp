#include "hypersect/conditions.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/modular.hpp"
#include "hypersect/polyalg.hpp"
#include "hypersect/random.hpp"

#include <algorithm>

namespace hypersect {

namespace {

constexpr int kSeparabilityProbes = 8;
constexpr std::int64_t kCandidateCoeffBound = 10;

MultiPoly plane_section(const Hypersurface& H) { return specialize(H.f, H.f.vars()[1], 0); }

Condition3Result base_result(const std::string& route, int trace0, int count0, const UniPoly& g) {
    Condition3Result r;
    r.route = route;
    r.trace_degree_at_zero = trace0;
    r.count_at_zero = count0;
    r.g = g;
    return r;
}

void require_pencil(const UniPoly& g) {
    if (g.is_zero()) throw PreconditionError("pencil polynomial must be nonzero");
    if (!is_zero(g(0))) throw PreconditionError("pencil polynomial must vanish at 0");
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::certified: return "certified";
        case Status::not_certified: return "not-certified";
        case Status::failed: return "failed";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

bool LineCompatibilityCertificate::certified() const {
    return leading_constant && restricted_degree >= 0 && restricted_degree == plane_degree &&
           distinct_roots == restricted_degree;
}

Condition1Result check_condition_1(const Hypersurface& H) {
    require_trivariate(H);
    const MultiPoly r = restrict_to_plane(H);
    Condition1Result out;
    auto& cert = out.certificate;
    cert.plane_degree = r.degree_in(1);
    cert.leading_constant = leading_coefficient_in(r, 1).is_constant();
    const UniPoly u = UniPoly::from_multipoly(specialize(r, r.vars()[0], 0), r.vars()[1]);
    cert.restricted_degree = u.degree();
    if (!u.is_zero()) cert.distinct_roots = squarefree_factorization(u).distinct_root_count();
    if (!cert.leading_constant) out.failed_clauses.push_back("leading-coefficient");
    if (u.is_zero() || cert.restricted_degree != cert.plane_degree || cert.distinct_roots != cert.restricted_degree)
        out.failed_clauses.push_back("simple-fiber");
    out.status = cert.certified() ? Status::certified : Status::not_certified;
    return out;
}

Condition2Result check_condition_2(const Hypersurface& H) {
    require_trivariate(H);
    Condition2Result out;
    const FinitenessCertificate fin = check_finite_projection(H);
    out.finite = fin.finite;
    out.sheet_count = fin.sheet_count;
    if (!fin.finite) {
        out.status = Status::failed;
        out.failed_clauses.push_back("finite");
        return out;
    }
    const MultiPoly r = plane_section(H);
    out.plane_degree = r.is_zero() ? -1 : r.degree_in(1);
    out.plane_leading_constant = !r.is_zero() && leading_coefficient_in(r, 1).is_constant();
    if (out.plane_degree != out.sheet_count || !out.plane_leading_constant) {
        out.status = Status::failed;
        out.failed_clauses.push_back("plane-degree");
        return out;
    }
    const int l = out.sheet_count;
    if (l <= 1) {
        out.plane_fibers_separable = true;
        out.separability_method = "linear-fiber";
    } else {
        const MultiPoly ri = integer_scaled(r);
        const Integer lc = leading_coefficient_in(ri, 1).constant_term().get_num();
        for (std::size_t i = 0; i < static_cast<std::size_t>(kSeparabilityProbes) && !out.plane_fibers_separable; ++i) {
            const modp::Field F{modp::large_prime(i)};
            if (F.reduce(lc) == 0 || F.reduce(Integer(l)) == 0) continue;
            const modp::u64 x0 = i + 1;
            const std::vector<modp::u64> point{x0, 0};
            const modp::Poly P = ModularImage(ri, F, 1).at(point);
            if (modp::resultant_formal(F, P, modp::derivative(F, P), l - 1) != 0) {
                out.plane_fibers_separable = true;
                out.separability_method = "modular-evaluation";
                out.witness_x = Rational(static_cast<long>(x0));
                out.witness_prime = F.p;
            }
        }
        if (!out.plane_fibers_separable) {
            out.separability_method = "symbolic-resultant";
            out.plane_fibers_separable = !resultant(r, partial_derivative(r, r.vars()[1]), r.vars()[1]).is_zero();
        }
    }
    if (!out.plane_fibers_separable) {
        out.status = Status::failed;
        out.failed_clauses.push_back("separable");
        return out;
    }
    out.status = Status::certified;
    return out;
}

PencilAnalysis PencilAnalysis::from_curve(const DiscriminantCurve& Gamma, const ConditionOptions& options) {
    PencilAnalysis a;
    a.options_ = options;
    a.x_name_ = Gamma.F.vars()[0];
    a.curve_ = Gamma;
    if (Gamma.no_branching) {
        a.route_ = "no-branching";
        return a;
    }
    a.route_ = "explicit-discriminant";
    const TangencyProfile p = distinct_count_at(Gamma, UniPoly(a.x_name_));
    a.trace_degree0_ = p.trace_degree;
    a.count0_ = p.distinct_count;
    a.multiple_ = p.multiple_factors;
    return a;
}

PencilAnalysis PencilAnalysis::for_hypersurface(const Hypersurface& H, const std::optional<PencilStructure>& structure,
                                                const ConditionOptions& options) {
    require_trivariate(H);
    if (structure && H.f.degree_in(2) > options.explicit_degree_limit) {
        if (auto zero = structured_count_at_zero(*structure, H.f)) {
            PencilAnalysis a;
            a.options_ = options;
            a.x_name_ = H.f.vars()[0];
            a.route_ = "sheared-resultant";
            a.structure_ = structure;
            a.surface_ = H.f;
            a.trace_degree0_ = zero->trace_degree;
            a.count0_ = zero->count;
            a.multiple_ = zero->multiple_factors;
            a.zero_ = std::move(zero);
            return a;
        }
    }
    return from_curve(discriminant_curve(H), options);
}

UniPoly PencilAnalysis::omega(const std::string& var) const {
    TangencyProfile p;
    p.multiple_factors = multiple_;
    return build_omega(p, true, var);
}

Condition3Result PencilAnalysis::evaluate(const UniPoly& g_in) const {
    require_pencil(g_in);
    const UniPoly g(x_name_, g_in.coeffs());
    Condition3Result r = base_result(route_, trace_degree0_, count0_, g);
    if (route_ == "no-branching") {
        r.generic_count = 0;
        r.status = Status::certified;
        r.note = "empty discriminant curve";
        return r;
    }
    if (route_ == "explicit-discriminant") {
        const GenericCountCertificate cert =
            generic_distinct_count(pencil_trace(*curve_, g), {options_.seed, options_.samples});
        r.generic_degree = cert.generic_degree;
        r.generic_count = cert.generic_count;
        r.gcd_degree = cert.gcd_degree;
        r.samples = cert.samples;
    } else {
        const StructuredPencilCount sc =
            structured_generic_count(*structure_, *surface_, g, *zero_, options_.seed, options_.samples);
        if (!sc.available) {
            r.status = Status::not_certified;
            r.note = sc.note;
            return r;
        }
        r.generic_degree = sc.generic_degree;
        r.generic_count = sc.generic_count;
        r.upper_bound = sc.upper_bound;
        r.samples = sc.samples;
        if (!sc.generic_count) {
            r.status = Status::not_certified;
            r.note = sc.note;
            return r;
        }
    }
    r.status = *r.generic_count == count0_ ? Status::certified : Status::failed;
    return r;
}

Condition3Result check_condition_3(const DiscriminantCurve& Gamma, const UniPoly& g, const ConditionOptions& options) {
    require_pencil(g);
    return PencilAnalysis::from_curve(Gamma, options).evaluate(g);
}

PencilSearch find_shared_pencil(std::span<const PencilAnalysis> members, int degree_budget, std::uint64_t seed) {
    if (members.empty()) throw PreconditionError("pencil search needs at least one member");
    const std::string& var = members.front().x_name();
    PencilSearch search;
    auto attempt = [&](const UniPoly& g, const char* source) {
        for (const PencilAttempt& a : search.attempts)
            if (a.g == g) return false;
        PencilAttempt a{g, source, {}, true};
        for (const PencilAnalysis& m : members) {
            a.results.push_back(m.evaluate(g));
            if (a.results.back().status != Status::certified) {
                a.success = false;
                break;
            }
        }
        search.attempts.push_back(std::move(a));
        if (search.attempts.back().success) search.g = g;
        return search.attempts.back().success;
    };

    UniPoly omega = UniPoly::constant(var, 1);
    for (const PencilAnalysis& m : members) omega = lcm(omega, m.omega(var));
    if (attempt(omega, "omega")) return search;
    for (int e = 1; e + omega.degree() <= degree_budget; ++e) {
        RandomStream rng(derive_seed(seed, {tag(Stream::pencil_candidate), static_cast<std::uint64_t>(e)}));
        std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1);
        for (int i = 0; i < e; ++i) coeffs[static_cast<std::size_t>(i)] = rng.uniform(-kCandidateCoeffBound, kCandidateCoeffBound);
        coeffs.back() = 1;
        if (attempt(omega * UniPoly(var, coeffs), "omega-times-random")) return search;
    }
    for (int j = 1; j <= degree_budget; ++j)
        if (attempt(UniPoly::monomial(var, static_cast<unsigned>(j)), "monomial")) return search;
    return search;
}

PencilSearch find_pencil_polynomial(const PencilAnalysis& analysis, int degree_budget, std::uint64_t seed) {
    return find_shared_pencil(std::span<const PencilAnalysis>(&analysis, 1), degree_budget, seed);
}

PencilSearch find_pencil_polynomial(const DiscriminantCurve& Gamma, int degree_budget, std::uint64_t seed) {
    ConditionOptions options;
    options.seed = seed;
    return find_pencil_polynomial(PencilAnalysis::from_curve(Gamma, options), degree_budget, seed);
}

bool ConditionReport::all_certified() const {
    return cond1.status == Status::certified && cond2.status == Status::certified &&
           cond3.status == Status::certified && g.has_value();
}

PreparedReport prepare_report(const Hypersurface& H, const std::optional<PencilStructure>& structure,
                              const ConditionOptions& options) {
    PreparedReport out;
    ConditionReport& rep = out.report;
    rep.cond2 = check_condition_2(H);
    if (!rep.cond2.finite) {
        rep.cond3.note = "projection is not finite";
        rep.diagnostics.push_back("projection-not-finite");
        return out;
    }
    try {
        rep.cond1 = check_condition_1(H);
    } catch (const PlaneContainedError&) {
        rep.cond1.status = Status::failed;
        rep.cond1.failed_clauses.push_back("plane-contained");
        rep.cond3.note = "the plane lies in the hypersurface";
        rep.diagnostics.push_back("plane-contained");
        return out;
    }
    try {
        out.analysis = PencilAnalysis::for_hypersurface(H, structure, options);
    } catch (const ComponentError&) {
        rep.cond3.status = Status::failed;
        rep.cond3.note = "L0 lies in the discriminant curve";
        rep.diagnostics.push_back("line-in-discriminant");
    }
    return out;
}

ConditionReport assemble_report(const Hypersurface& H, int degree_budget, const ConditionOptions& options,
                                const std::optional<PencilStructure>& structure) {
    PreparedReport prep = prepare_report(H, structure, options);
    ConditionReport& rep = prep.report;
    if (!prep.analysis) return rep;
    PencilSearch search = find_pencil_polynomial(*prep.analysis, degree_budget, options.seed);
    if (search.g) {
        rep.g = search.g;
        rep.cond3 = search.attempts.back().results.front();
    } else {
        rep.cond3 = search.attempts.front().results.front();
        if (rep.cond3.status == Status::certified) throw InternalDisagreement("certified candidate not accepted");
        rep.cond3.status = Status::failed;
        rep.cond3.note = "no candidate within degree budget " + std::to_string(degree_budget);
    }
    rep.search = std::move(search);
    return rep;
}

ConditionReport assemble_report_with_pencil(const Hypersurface& H, const UniPoly& g, const ConditionOptions& options,
                                            const std::optional<PencilStructure>& structure) {
    PreparedReport prep = prepare_report(H, structure, options);
    ConditionReport& rep = prep.report;
    if (!prep.analysis) return rep;
    rep.cond3 = prep.analysis->evaluate(g);
    rep.g = rep.cond3.g;
    return rep;
}

}  // namespace hypersect
