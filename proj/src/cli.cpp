#include "hypersect/cli.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/family_io.hpp"
#include "hypersect/parse.hpp"
#include "hypersect/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifndef HYPERSECT_VERSION
#define HYPERSECT_VERSION "0.0.0"
#endif

namespace hypersect {

namespace {

// Input errors carry the name of the field they came from.
struct InputError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError{"cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
auto located(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw InputError{"parse error in " + where + ": " + e.what()};
    }
}

VarList job_vars(const JobSpec& job, const char* fallback) {
    return located("--vars", [&] { return parse_var_list(job.vars.empty() ? fallback : job.vars); });
}

std::string expression_text(const JobSpec& job) {
    return job.input_is_file ? read_file(job.input) : job.input;
}

MultiPoly job_poly(const JobSpec& job, const VarList& vars) {
    const std::string text = expression_text(job);
    MultiPoly p = located(job.input_is_file ? "'" + job.input + "'" : "expression", [&] { return parse_poly(text, vars); });
    if (p.is_constant()) throw InputError{"the input polynomial is constant"};
    return p;
}

Json job_json(const JobSpec& job) {
    Json j{{"command", job.command}, {"input", job.input}, {"input_is_file", job.input_is_file},
           {"vars", job.vars},       {"seed", job.seed}};
    if (job.command == "check" || job.command == "find-pencil") j["budget"] = job.budget;
    if (job.command == "check" || job.command == "find-pencil" || job.command == "synthesize") j["samples"] = job.samples;
    if (job.command == "synthesize") {
        j["rounds"] = job.rounds;
        j["tries"] = job.tries;
        j["verify"] = job.verify;
    }
    if (job.command == "slice") {
        j["lambda"] = job.lambda;
        j["values"] = job.values;
        j["plane"] = job.plane;
        j["param_dim"] = job.param_dim;
    }
    j["output"] = job.output;
    return j;
}

Json envelope(const JobSpec& job) {
    return {{"tool", {{"name", "hypersect"}, {"version", tool_version()}}}, {"job", job_json(job)}, {"seed", job.seed}};
}

ConditionOptions condition_options(const JobSpec& job) {
    ConditionOptions o;
    o.seed = job.seed;
    o.samples = job.samples;
    return o;
}

JobResult finish(Json doc, bool success) {
    doc["exit_status"] = success ? exit_ok : exit_failure;
    return {success ? exit_ok : exit_failure, render(doc), ""};
}

JobResult analyze(const JobSpec& job) {
    const Hypersurface H = make_hypersurface(job_poly(job, job_vars(job, "x,y,z")));
    require_trivariate(H);
    const FinitenessCertificate fin = check_finite_projection(H);
    Json doc = envelope(job);
    Json result{{"hypersurface", to_json(H)}, {"finiteness", to_json(fin)}};
    result["discriminant_curve"] = fin.finite ? to_json(discriminant_curve(H)) : Json(nullptr);
    doc["result"] = std::move(result);
    return finish(std::move(doc), fin.finite);
}

JobResult check(const JobSpec& job) {
    const Hypersurface H = make_hypersurface(job_poly(job, job_vars(job, "x,y,z")));
    require_trivariate(H);
    const ConditionReport rep = assemble_report(H, job.budget, condition_options(job));
    Json doc = envelope(job);
    doc["result"] = {{"hypersurface", to_json(H)}, {"report", to_json(rep)}};
    return finish(std::move(doc), rep.all_certified());
}

JobResult find_pencil(const JobSpec& job) {
    const VarList vars = job_vars(job, "x,y,z");
    if (vars.size() != 2 && vars.size() != 3) throw InputError{"find-pencil takes a curve in two variables or a surface in three"};
    const MultiPoly p = job_poly(job, vars);
    const ConditionOptions opt = condition_options(job);
    Json doc = envelope(job);
    Json result;
    PencilSearch search;
    try {
        if (vars.size() == 2) {
            const MultiPoly F = make_hypersurface(p).f;
            result["curve"] = to_json(DiscriminantCurve{F, 0, false});
            search = find_pencil_polynomial(DiscriminantCurve{F, 0, false}, job.budget, job.seed);
        } else {
            const Hypersurface H = make_hypersurface(p);
            result["hypersurface"] = to_json(H);
            if (!check_finite_projection(H).finite) throw InputError{"the projection is not finite"};
            const PencilAnalysis a = PencilAnalysis::for_hypersurface(H, std::nullopt, opt);
            search = find_pencil_polynomial(a, job.budget, job.seed);
        }
    } catch (const ComponentError& e) {
        result["search"] = nullptr;
        result["diagnostic"] = std::string("line-in-discriminant: ") + e.what();
        doc["result"] = std::move(result);
        return finish(std::move(doc), false);
    }
    const bool found = search.g.has_value();
    result["search"] = to_json(search);
    if (!found) result["diagnostic"] = "no candidate within degree budget " + std::to_string(job.budget);
    doc["result"] = std::move(result);
    return finish(std::move(doc), found);
}

Json family_json(const FamilySample& f) {
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back({{"tag", m.tag}, {"polynomial", to_json(m.hypersurface.f)}});
    return {{"variables", f.vars}, {"declared_param_dim", f.declared_param_dim}, {"members", members}};
}

JobResult synthesize_job(const JobSpec& job) {
    const std::string text = read_file(job.input);
    const FamilySample fam = located("'" + job.input + "'", [&] { return parse_family(text); });
    if (fam.vars.size() != 3) throw InputError{"a family for synthesis must be over three variables"};
    SynthesisOptions opt;
    opt.seed = job.seed;
    opt.max_rounds = job.rounds;
    opt.tries_per_round = job.tries;
    opt.samples = job.samples;
    const SynthesisResult res = synthesize(fam, opt);
    Json doc = envelope(job);
    Json result{{"family", family_json(fam)}, {"synthesis", to_json(res)}};
    bool ok = res.witness.has_value();
    if (ok && job.verify) {
        const WitnessCheck wc = verify_witness(fam, *res.witness);
        result["verification"] = to_json(wc);
        if (!wc.valid) throw InternalDisagreement("the synthesized witness does not re-check: " + wc.problems.front());
    }
    doc["result"] = std::move(result);
    return finish(std::move(doc), ok);
}

std::vector<Rational> parse_values(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        try {
            const MultiPoly c = parse_poly(item, {});
            out.push_back(c.is_zero() ? Rational(0) : c.terms().front().coeff);
        } catch (const ParseError& e) {
            throw InputError{"parse error in --values: " + e.message() + " at position " +
                             std::to_string(start + e.position())};
        }
        start = comma + 1;
    }
    return out;
}

JobResult slice(const JobSpec& job) {
    const VarList vars = job_vars(job, "x,y,z,w");
    const MultiPoly f = job_poly(job, vars);
    if (job.values.empty()) throw InputError{"slice needs --values"};
    const std::vector<Rational> cs = parse_values(job.values);
    const std::string lambda = job.lambda.empty() ? vars.back() : job.lambda;
    if (std::find(vars.begin(), vars.end(), lambda) == vars.end()) throw InputError{"--lambda is not one of the variables"};
    std::optional<MultiPoly> plane;
    if (!job.plane.empty()) plane = located("--plane", [&] { return parse_poly(job.plane, vars); });
    const SliceResult res = slice_family(f, lambda, cs, job.param_dim, plane);

    std::vector<std::string> comments{std::string("hypersect ") + tool_version() + " slice",
                                      "job: " + job_json(job).dump(), "seed: " + std::to_string(job.seed)};
    for (const auto& d : res.diagnostics) comments.push_back(d.kind + " at " + lambda + " = " + to_string(d.c) + ": " + d.detail);
    return {exit_ok, format_family(res.family, comments), ""};
}

JobResult dispatch(const JobSpec& job) {
    if (job.command == "analyze") return analyze(job);
    if (job.command == "check") return check(job);
    if (job.command == "find-pencil") return find_pencil(job);
    if (job.command == "synthesize") return synthesize_job(job);
    if (job.command == "slice") return slice(job);
    throw InputError{"unknown command '" + job.command + "'"};
}

}  // namespace

const char* tool_version() { return HYPERSECT_VERSION; }

JobResult run(const JobSpec& job) {
    try {
        if (job.budget < 1 || job.rounds < 0 || job.tries < 0 || job.samples < 1 || job.param_dim < 0)
            throw InputError{"numeric options out of range"};
        // The echoed job shows the variable order actually used.
        JobSpec resolved = job;
        if (resolved.vars.empty() && resolved.command != "synthesize")
            resolved.vars = resolved.command == "slice" ? "x,y,z,w" : "x,y,z";
        return dispatch(resolved);
    } catch (const InputError& e) {
        return {exit_input_error, "", e.message};
    } catch (const InternalDisagreement& e) {
        Json doc = envelope(job);
        doc["error"] = {{"kind", "internal-disagreement"}, {"message", e.what()}};
        doc["exit_status"] = exit_disagreement;
        return {exit_disagreement, render(doc), e.what()};
    } catch (const Error& e) {
        return {exit_input_error, "", e.what()};
    }
}

}  // namespace hypersect
