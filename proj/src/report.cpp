#include "hypersect/report.hpp"

namespace hypersect {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return to_json(*v);
}

Json optional_int(const std::optional<int>& v) {
    if (!v) return nullptr;
    return *v;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const MultiPoly& p) { return p.to_string(); }
Json to_json(const UniPoly& p) { return p.to_string(); }

Json to_json(const Hypersurface& H) {
    return {{"variables", H.f.vars()}, {"polynomial", to_json(H.f)}, {"squarefree", H.squarefree}};
}

Json to_json(const FinitenessCertificate& c) {
    Json out{{"finite", c.finite}, {"sheet_count", c.sheet_count}, {"leading_coefficient", to_json(c.leading_coefficient)}};
    if (c.lex_leading) {
        const LexLeadingVector& l = *c.lex_leading;
        out["lex_leading"] = {{"exponents", l.exponents}, {"d1", l.d1}, {"d2", l.d2}, {"predicted_degree", l.predicted_degree}};
    } else {
        out["lex_leading"] = nullptr;
    }
    return out;
}

Json to_json(const DiscriminantCurve& c) {
    return {{"variables", c.F.vars()}, {"F", to_json(c.F)}, {"source_sheets", c.source_sheets}, {"no_branching", c.no_branching}};
}

Json to_json(const CountSample& s) {
    return {{"c", to_json(s.c)}, {"trace_degree", s.trace_degree}, {"count", s.count}, {"exceptional", s.exceptional}};
}

Json to_json(const Condition1Result& r) {
    const LineCompatibilityCertificate& c = r.certificate;
    return {{"status", to_string(r.status)},
            {"criterion", "sufficient"},
            {"certificate",
             {{"line_point", c.line_point},
              {"plane_degree", c.plane_degree},
              {"leading_constant", c.leading_constant},
              {"restricted_degree", c.restricted_degree},
              {"distinct_roots", c.distinct_roots}}},
            {"failed_clauses", r.failed_clauses}};
}

Json to_json(const Condition2Result& r) {
    return {{"status", to_string(r.status)},
            {"finite", r.finite},
            {"sheet_count", r.sheet_count},
            {"plane_degree", r.plane_degree},
            {"plane_leading_constant", r.plane_leading_constant},
            {"plane_fibers_separable", r.plane_fibers_separable},
            {"separability_method", r.separability_method},
            {"witness_x", optional_json(r.witness_x)},
            {"witness_prime", r.witness_prime},
            {"failed_clauses", r.failed_clauses}};
}

Json to_json(const Condition3Result& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples) samples.push_back(to_json(s));
    return {{"status", to_string(r.status)},
            {"g", optional_json(r.g)},
            {"route", r.route},
            {"trace_degree_at_zero", r.trace_degree_at_zero},
            {"count_at_zero", r.count_at_zero},
            {"generic_degree", r.generic_degree},
            {"generic_count", optional_int(r.generic_count)},
            {"gcd_degree", optional_int(r.gcd_degree)},
            {"upper_bound", optional_int(r.upper_bound)},
            {"samples", samples},
            {"note", r.note}};
}

Json to_json(const PencilSearch& s) {
    Json attempts = Json::array();
    for (const auto& a : s.attempts) {
        Json results = Json::array();
        for (const auto& r : a.results) results.push_back(to_json(r));
        attempts.push_back({{"g", to_json(a.g)}, {"source", a.source}, {"success", a.success}, {"results", results}});
    }
    return {{"g", optional_json(s.g)}, {"attempts", attempts}};
}

Json to_json(const ConditionReport& r) {
    return {{"all_certified", r.all_certified()},
            {"condition_2", to_json(r.cond2)},
            {"condition_1", to_json(r.cond1)},
            {"condition_3", to_json(r.cond3)},
            {"g", optional_json(r.g)},
            {"search", optional_json(r.search)},
            {"diagnostics", r.diagnostics}};
}

Json to_json(const Substitution& s) {
    return {{"phi", to_json(s.phi)}, {"h", to_json(s.h)}, {"shift", to_json(s.shift)}};
}

Json to_json(const DegreeSchedule& d) {
    return {{"round", d.round},
            {"max_member_degree", d.max_member_degree},
            {"declared_param_dim", d.declared_param_dim},
            {"phi_degree", d.phi_degree},
            {"h_degree", d.h_degree},
            {"shift_degree", d.shift_degree},
            {"g_budget", d.g_budget}};
}

Json to_json(const Witness& w) {
    Json members = Json::array();
    for (std::size_t i = 0; i < w.tags.size(); ++i) {
        Json m{{"tag", w.tags[i]}};
        if (i < w.substituted.size()) m["substituted"] = to_json(w.substituted[i]);
        if (i < w.reports.size()) m["report"] = to_json(w.reports[i]);
        members.push_back(std::move(m));
    }
    const ConditionOptions& o = w.condition_options;
    return {{"plane", w.plane},
            {"seed", w.seed},
            {"round", w.round},
            {"try_index", w.try_index},
            {"substitution", to_json(w.substitution)},
            {"g", to_json(w.g)},
            {"degree_schedule_used", to_json(w.degree_schedule_used)},
            {"condition_options",
             {{"seed", o.seed}, {"samples", o.samples}, {"explicit_degree_limit", o.explicit_degree_limit}}},
            {"pencil_search", to_json(w.pencil_search)},
            {"members", members}};
}

Json to_json(const WitnessCheck& c) {
    Json reports = Json::array();
    for (const auto& r : c.reports) reports.push_back(to_json(r));
    return {{"valid", c.valid}, {"problems", c.problems}, {"reports", reports}};
}

Json to_json(const SynthesisResult& r) {
    Json rounds = Json::array();
    for (const auto& s : r.rounds) {
        Json candidates = Json::array();
        for (const auto& c : s.candidates)
            candidates.push_back({{"try_index", c.try_index}, {"outcome", c.outcome}, {"member", c.member}});
        rounds.push_back({{"schedule", to_json(s.schedule)},
                          {"coefficient_bound", s.coefficient_bound},
                          {"candidates", candidates}});
    }
    return {{"found", r.witness.has_value()}, {"witness", optional_json(r.witness)}, {"rounds", rounds}};
}

Json to_json(const SliceDiagnostic& d) { return {{"c", to_json(d.c)}, {"kind", d.kind}, {"detail", d.detail}}; }

std::string render(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace hypersect
