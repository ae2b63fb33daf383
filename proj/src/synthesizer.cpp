#include "hypersect/synthesizer.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/polyalg.hpp"
#include "hypersect/random.hpp"

#include <algorithm>

namespace hypersect {

namespace {

MultiPoly horner(const UniPoly& p, const MultiPoly& at) {
    MultiPoly out = MultiPoly::constant(at.vars(), 0);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) out = out * at + MultiPoly::constant(at.vars(), c[i]);
    return out;
}

void require_three(const VarList& v) {
    if (v.size() != 3) throw PreconditionError("expected a polynomial in exactly three variables");
}

// The shift's constant term would only repeat h's, so it stays zero.
UniPoly random_poly(RandomStream& rng, const std::string& var, int degree, std::int64_t bound, bool constant_term) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (int i = constant_term ? 0 : 1; i < degree; ++i) c[static_cast<std::size_t>(i)] = rng.uniform(-bound, bound);
    if (degree > 0) c.back() = rng.nonzero(bound);
    return UniPoly(var, std::move(c));
}

}  // namespace

FamilySample make_family(std::vector<std::pair<std::string, MultiPoly>> members, int declared_param_dim) {
    if (members.empty()) throw PreconditionError("a family needs at least one member");
    if (declared_param_dim < 0) throw PreconditionError("declared parameter dimension must be nonnegative");
    FamilySample out;
    out.vars = members.front().second.vars();
    out.declared_param_dim = declared_param_dim;
    for (auto& [tag, f] : members) {
        if (f.vars() != out.vars) throw PreconditionError("family members use different variable tuples");
        out.members.push_back({std::move(tag), make_hypersurface(f)});
    }
    return out;
}

Substitution Substitution::identity(const VarList& vars) {
    require_three(vars);
    return {UniPoly(vars[2], {}), UniPoly(vars[0], {}), UniPoly(vars[0], {})};
}

MultiPoly substitute_coordinates(const MultiPoly& f, const Substitution& s) {
    const VarList& v = f.vars();
    require_three(v);
    const MultiPoly x = MultiPoly::variable(v, v[0]);
    const MultiPoly y = MultiPoly::variable(v, v[1]);
    const MultiPoly z = MultiPoly::variable(v, v[2]);
    const MultiPoly X = x + horner(s.phi, z);
    return compose(f, {X, y + horner(s.shift, x) + horner(s.h, X), z});
}

MultiPoly invert_coordinates(const MultiPoly& f, const Substitution& s) {
    const VarList& v = f.vars();
    require_three(v);
    const MultiPoly x = MultiPoly::variable(v, v[0]);
    const MultiPoly y = MultiPoly::variable(v, v[1]);
    const MultiPoly z = MultiPoly::variable(v, v[2]);
    const MultiPoly X = x - horner(s.phi, z);
    return compose(f, {X, y - horner(s.h, x) - horner(s.shift, X), z});
}

Hypersurface apply_substitution(const Hypersurface& H, const Substitution& s) {
    const MultiPoly g = substitute_coordinates(H.f, s);
    if (H.squarefree) return {normalize_lex_monic(g), true};
    return make_hypersurface(g);
}

PencilStructure pencil_structure(const Hypersurface& H, const Substitution& s) {
    require_three(H.f.vars());
    const VarList& v = H.f.vars();
    return {H.f, UniPoly(v[2], s.phi.coeffs()), UniPoly(v[0], s.h.coeffs()), UniPoly(v[0], s.shift.coeffs())};
}

DegreeSchedule degree_schedule(const FamilySample& family, int round) {
    if (round < 0) throw PreconditionError("round must be nonnegative");
    DegreeSchedule d;
    d.round = round;
    d.declared_param_dim = family.declared_param_dim;
    for (const auto& m : family.members) d.max_member_degree = std::max(d.max_member_degree, m.hypersurface.f.total_degree());
    d.phi_degree = std::max(d.max_member_degree, d.declared_param_dim) + 1;
    d.h_degree = d.max_member_degree * d.phi_degree + 1;
    d.phi_degree <<= round;
    d.h_degree <<= round;
    d.shift_degree = d.h_degree + d.declared_param_dim;
    d.g_budget = d.h_degree - 1;
    return d;
}

SynthesisResult synthesize(const FamilySample& family, const SynthesisOptions& options) {
    if (family.members.empty()) throw PreconditionError("a family needs at least one member");
    require_three(family.vars);
    const VarList& v = family.vars;
    SynthesisResult result;
    for (int round = 0; round < options.max_rounds; ++round) {
        RoundStatistics stats;
        stats.schedule = degree_schedule(family, round);
        stats.coefficient_bound = 10 * (round + 1);
        const auto r = static_cast<std::uint64_t>(round);
        for (int t = 0; t < options.tries_per_round; ++t) {
            const auto ti = static_cast<std::uint64_t>(t);
            RandomStream rng(derive_seed(options.seed, {tag(Stream::substitution), r, ti}));
            Substitution sigma;
            sigma.phi = random_poly(rng, v[2], stats.schedule.phi_degree, stats.coefficient_bound, true);
            sigma.h = random_poly(rng, v[0], stats.schedule.h_degree, stats.coefficient_bound, true);
            sigma.shift = random_poly(rng, v[0], stats.schedule.shift_degree, stats.coefficient_bound, false);

            ConditionOptions copt;
            copt.seed = derive_seed(options.seed, {tag(Stream::count_sample), r, ti});
            copt.samples = options.samples;

            CandidateOutcome outcome{t, "", ""};
            std::vector<Hypersurface> substituted;
            std::vector<PreparedReport> prepared;
            std::vector<PencilAnalysis> analyses;
            for (const auto& m : family.members) {
                substituted.push_back(apply_substitution(m.hypersurface, sigma));
                PreparedReport p = prepare_report(substituted.back(), pencil_structure(m.hypersurface, sigma), copt);
                const ConditionReport& rep = p.report;
                if (rep.cond2.status != Status::certified) outcome.outcome = "condition-2";
                else if (rep.cond1.status != Status::certified) outcome.outcome = "condition-1";
                else if (!p.analysis) outcome.outcome = "condition-3-structure";
                if (!outcome.outcome.empty()) {
                    outcome.member = m.tag;
                    break;
                }
                analyses.push_back(*p.analysis);
                prepared.push_back(std::move(p));
            }
            if (!outcome.outcome.empty()) {
                stats.candidates.push_back(outcome);
                continue;
            }
            PencilSearch search = find_shared_pencil(analyses, stats.schedule.g_budget,
                                                     derive_seed(options.seed, {tag(Stream::pencil_candidate), r, ti}));
            if (!search.g) {
                outcome.outcome = "no-shared-pencil";
                const PencilAttempt& first = search.attempts.front();
                outcome.member = family.members[first.results.size() - 1].tag;
                stats.candidates.push_back(outcome);
                continue;
            }
            outcome.outcome = "certified";
            stats.candidates.push_back(outcome);

            Witness w;
            w.substitution = sigma;
            w.g = *search.g;
            w.substituted = std::move(substituted);
            const PencilAttempt& accepted = search.attempts.back();
            for (std::size_t i = 0; i < family.members.size(); ++i) {
                w.tags.push_back(family.members[i].tag);
                ConditionReport rep = std::move(prepared[i].report);
                rep.cond3 = accepted.results[i];
                rep.g = search.g;
                w.reports.push_back(std::move(rep));
            }
            w.pencil_search = std::move(search);
            w.degree_schedule_used = stats.schedule;
            w.condition_options = copt;
            w.seed = options.seed;
            w.round = round;
            w.try_index = t;
            result.rounds.push_back(std::move(stats));
            result.witness = std::move(w);
            return result;
        }
        result.rounds.push_back(std::move(stats));
    }
    return result;
}

WitnessCheck verify_witness(const FamilySample& family, const Witness& witness) {
    WitnessCheck out;
    if (witness.tags.size() != family.members.size() || witness.substituted.size() != family.members.size())
        out.problems.push_back("witness does not match the family size");
    if (witness.g.is_zero() || !is_zero(witness.g.coefficient(0))) out.problems.push_back("g must vanish at 0 and be nonzero");
    if (!out.problems.empty()) return out;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const FamilyMember& m = family.members[i];
        if (witness.tags[i] != m.tag) out.problems.push_back("tag mismatch at member " + m.tag);
        const Hypersurface H = apply_substitution(m.hypersurface, witness.substitution);
        if (H.f != witness.substituted[i].f) out.problems.push_back("substituted polynomial differs for member " + m.tag);
        ConditionReport rep = assemble_report_with_pencil(H, witness.g, witness.condition_options,
                                                          pencil_structure(m.hypersurface, witness.substitution));
        if (!rep.all_certified()) out.problems.push_back("member " + m.tag + " is not certified");
        out.reports.push_back(std::move(rep));
    }
    out.valid = out.problems.empty();
    return out;
}

SliceResult slice_family(const MultiPoly& f, std::string_view lambda, std::span<const Rational> c_samples,
                         int base_param_dim, const std::optional<MultiPoly>& plane) {
    const VarList& all = f.vars();
    if (all.size() < 4) throw PreconditionError("slicing needs at least four variables");
    if (base_param_dim < 0) throw PreconditionError("declared parameter dimension must be nonnegative");
    const std::size_t li = f.require_index(lambda);
    VarList rest;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (i != li) rest.push_back(all[i]);

    MultiPoly R = plane ? plane->with_vars(all) : MultiPoly::variable(all, rest[1]);
    if (R.total_degree() != 1) throw PreconditionError("the candidate hyperplane must be given by a linear polynomial");
    bool moves = false;
    for (const auto& t : R.terms())
        for (std::size_t i = 0; i < all.size(); ++i)
            if (i != li && t.exps[i] > 0) moves = true;
    if (!moves) throw PreconditionError("the candidate hyperplane is a level set of the slicing coordinate");

    SliceResult out;
    out.family.vars = rest;
    out.family.declared_param_dim = base_param_dim + 1;
    for (const Rational& c : c_samples) {
        const MultiPoly s = specialize(f, lambda, c).with_vars(rest);
        if (s.is_zero()) {
            out.diagnostics.push_back({c, "zero-slice", "the hypersurface contains the level set; value excluded"});
            continue;
        }
        if (s.is_constant()) {
            out.diagnostics.push_back({c, "constant-slice", "the slice is empty; value excluded"});
            continue;
        }
        const MultiPoly Rc = specialize(R, lambda, c).with_vars(rest);
        if (divide_exact(s, Rc))
            out.diagnostics.push_back({c, "plane-component", "the hyperplane restriction divides the slice"});
        out.family.members.push_back({c.get_str(), make_hypersurface(s)});
    }
    if (out.family.members.empty()) throw PreconditionError("no usable slice among the sampled values");
    return out;
}

}  // namespace hypersect
