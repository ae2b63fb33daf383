// Acceptance run: one PASS/FAIL line per criterion. Tolerances and time limits are
// fixed below; every random instance comes from a fixed seed.

#include "generators.hpp"
#include "root_oracle.hpp"

#include "hypersect/cli.hpp"
#include "hypersect/curve_intersect.hpp"
#include "hypersect/errors.hpp"
#include "hypersect/family_io.hpp"
#include "hypersect/parse.hpp"
#include "hypersect/polyalg.hpp"
#include "hypersect/report.hpp"
#include "hypersect/synthesizer.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

using namespace hypersect;

namespace {

constexpr double cluster_tolerance = 1e-8;
constexpr double limit_c1_seconds = 1.0;
constexpr double limit_c2_seconds = 30.0;
constexpr double limit_c4_seconds = 5.0;
constexpr double limit_c6_seconds = 300.0;
constexpr std::int64_t coefficient_limit = 1000;
constexpr std::uint64_t synthesis_seed = 7;

const VarList XY{"x", "y"};
const VarList XYZ{"x", "y", "z"};
const VarList XYZW{"x", "y", "z", "w"};
const std::string data_dir = HYPERSECT_TEST_DATA;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Counts problems and keeps the first, so a failing line says why.
struct Ledger {
    int failures = 0;
    std::string first;
    void fail(const std::string& what) {
        if (failures++ == 0) first = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failures == 0) return {true, summary};
        return {false, summary + "; " + std::to_string(failures) + " problem(s), first: " + first};
    }
};

MultiPoly P(const std::string& s, const VarList& v = XYZ) { return parse_poly(s, v); }

bool same_up_to_constant(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    const auto q = divide_exact(a, b);
    return q && q->is_constant() && divide_exact(b, a).has_value();
}

std::int64_t max_abs_coefficient(const MultiPoly& p) {
    std::int64_t m = 0;
    for (const auto& t : p.terms()) {
        const Rational c = abs(t.coeff);
        if (c.get_den() != 1 || c.get_num() > coefficient_limit) return coefficient_limit + 1;
        m = std::max<std::int64_t>(m, c.get_num().get_si());
    }
    return m;
}

Outcome criterion_1() {
    Ledger l;
    const MultiPoly g1 = discriminant_curve(make_hypersurface(P("z^2 - x"))).F;
    if (!same_up_to_constant(g1, P("x", XY))) l.fail("Gamma(z^2 - x) = " + g1.to_string());
    const MultiPoly g2 = discriminant_curve(make_hypersurface(P("z^3 + x*z + y"))).F;
    if (!same_up_to_constant(g2, P("4*x^3 + 27*y^2", XY))) l.fail("Gamma(z^3 + x*z + y) = " + g2.to_string());
    return l.outcome("both fixtures equal up to a nonzero constant");
}

Outcome criterion_2() {
    Ledger l;
    RandomStream rng(derive_seed(902, {1}));
    int pairs = 0, vanishing = 0;
    while (pairs < 120) {
        const Rational a = gen::small_rational(rng), b = gen::small_rational(rng);
        MultiPoly f = gen::random_poly(rng, XYZ, {2, 2, 3}, 5, coefficient_limit) + P("z^4");
        MultiPoly g = gen::random_poly(rng, XYZ, {2, 2, 2}, 5, coefficient_limit) + P("3*z^3");
        if (pairs % 3 == 0) {
            // A shared root z = t over the point (a, b).
            const MultiPoly shift = P("z") - MultiPoly::constant(XYZ, rng.uniform(-5, 5));
            const MultiPoly off = (P("x") - MultiPoly::constant(XYZ, a)) * MultiPoly::constant(XYZ, a.get_den());
            f = shift * (gen::random_poly(rng, XYZ, {1, 1, 2}, 3, 9) + P("z^3")) + off * P("y + 1");
            g = shift * (gen::random_poly(rng, XYZ, {1, 1, 1}, 3, 9) + P("z^2")) + off * P("z - y");
        }
        if (f.degree_in(2) > 4 || g.degree_in(2) > 4 || max_abs_coefficient(f) > coefficient_limit ||
            max_abs_coefficient(g) > coefficient_limit)
            continue;
        ++pairs;
        const std::vector<Rational> ab{a, b};
        const bool symbolic = is_zero(evaluate_all(resultant(f, g, "z"), ab));
        const UniPoly fa = UniPoly::from_multipoly(specialize(specialize(f, "x", a), "y", b), "z");
        const UniPoly ga = UniPoly::from_multipoly(specialize(specialize(g, "x", a), "y", b), "z");
        const bool numeric = oracle::roots_intersect(fa, ga, cluster_tolerance);
        vanishing += symbolic;
        if (symbolic && !numeric) l.fail("false positive at pair " + std::to_string(pairs));
        if (!symbolic && numeric) l.fail("false negative at pair " + std::to_string(pairs));
    }
    return l.outcome(std::to_string(pairs) + " pairs, " + std::to_string(vanishing) + " vanishing");
}

Outcome criterion_3() {
    Ledger l;
    RandomStream rng(derive_seed(903, {1}));
    int profiles = 0;
    while (profiles < 220) {
        MultiPoly F = gen::random_poly(rng, XY, {2, 2}, 3, 9) + P("y", XY);
        if (profiles % 2 == 0) F = F * pow(P("y - x", XY) + MultiPoly::constant(XY, rng.uniform(-3, 3)), 2);
        if (profiles % 5 == 0) F = F * pow(P("y + x^2", XY) - MultiPoly::constant(XY, rng.uniform(1, 4)), 3);
        const DiscriminantCurve G{F, 2, false};
        const UniPoly h = gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 4)), 5);
        const UniPoly psi = restrict_curve(G, h);
        if (psi.is_zero()) continue;
        ++profiles;
        const TangencyProfile p = tangency_profile(psi);
        int weighted = 0, defect = 0, distinct = 0;
        for (const auto& f : p.factors.factors) {
            weighted += f.multiplicity * f.q.degree();
            distinct += f.q.degree();
            if (f.multiplicity >= 2) defect += f.multiplicity * f.q.degree();
        }
        const std::string at = "profile " + std::to_string(profiles);
        if (p.factors.expand("x") != psi) l.fail(at + ": factors do not multiply back");
        if (p.defect != defect) l.fail(at + ": defect");
        if (p.trace_degree != weighted || p.trace_degree != psi.degree()) l.fail(at + ": trace degree");
        if (p.distinct_count != distinct) l.fail(at + ": distinct count bookkeeping");
        const int numeric = psi.degree() > 0 ? oracle::count_clusters(psi, cluster_tolerance) : 0;
        if (p.distinct_count != numeric)
            l.fail(at + ": distinct " + std::to_string(p.distinct_count) + " vs numeric " + std::to_string(numeric));
    }
    return l.outcome(std::to_string(profiles) + " profiles");
}

Outcome criterion_4() {
    Ledger l;
    const DiscriminantCurve parabola{P("y - x^2", XY), 2, false};
    const UniPoly x = UniPoly::monomial("x", 1);
    if (check_condition_3(parabola, x * x).status != Status::certified) l.fail("y - x^2 with g = x^2 not certified");
    if (check_condition_3(parabola, x).status != Status::failed) l.fail("y - x^2 with g = x did not fail");
    const DiscriminantCurve cusp{P("27*y^2 + 4*x^3", XY), 2, false};
    const PencilSearch s = find_pencil_polynomial(cusp, 6, 3);
    if (s.g) l.fail("cusp certified with g = " + s.g->to_string());
    for (const auto& a : s.attempts)
        if (a.results.front().status == Status::certified) l.fail("cusp candidate " + a.g.to_string() + " certified");
    for (int e = 1; e <= 6; ++e)
        if (check_condition_3(cusp, UniPoly::monomial("x", static_cast<unsigned>(e))).status != Status::failed)
            l.fail("cusp with g = x^" + std::to_string(e) + " did not fail");
    return l.outcome("parabola certifies with x^2 only; cusp fails " + std::to_string(s.attempts.size()) +
                     " candidates up to degree 6");
}

Outcome criterion_5() {
    Ledger l;
    RandomStream rng(derive_seed(905, {1}));
    int traces = 0, sampled = 0;
    while (traces < 110) {
        const MultiPoly F = gen::random_poly(rng, XY, {3, 2}, 4, 9) + P("y^2 - x*y", XY);
        const UniPoly g = gen::random_uni(rng, "x", static_cast<int>(rng.uniform(0, 2)), 5) * UniPoly::monomial("x", 1);
        PencilTrace t;
        try {
            t = pencil_trace({F, 2, false}, g);
        } catch (const ComponentError&) {
            continue;
        }
        ++traces;
        GenericCountCertificate cert;
        try {
            cert = generic_distinct_count(t, {static_cast<std::uint64_t>(traces), 2});
        } catch (const InternalDisagreement& e) {
            l.fail("trace " + std::to_string(traces) + ": " + e.what());
            continue;
        }
        const std::string cvar = t.psi.vars()[0];
        const std::string xvar = t.psi.vars()[1];
        int taken = 0;
        while (taken < 5) {
            const Rational c(rng.uniform(-10000, 10000), rng.uniform(1, 10000));
            const UniPoly at = UniPoly::from_multipoly(specialize(t.psi, cvar, c), xvar);
            if (at.degree() != cert.generic_degree) continue;  // exceptional: the degree drops
            ++taken;
            ++sampled;
            const int numeric = at.degree() > 0 ? oracle::count_clusters(at, cluster_tolerance) : 0;
            if (numeric != cert.generic_count)
                l.fail("trace " + std::to_string(traces) + " at c = " + to_string(c) + ": symbolic " +
                       std::to_string(cert.generic_count) + ", sampled " + std::to_string(numeric));
        }
    }
    return l.outcome(std::to_string(traces) + " traces, " + std::to_string(sampled) + " samples");
}

FamilySample linear_family() {
    return make_family({{"0", P("z^2 - x")}, {"1", P("z^2 - x - y")}, {"-1", P("z^2 - x + y")}, {"2", P("z^2 - x - 2*y")}},
                       1);
}

Outcome criterion_6() {
    Ledger l;
    const FamilySample fam = linear_family();
    SynthesisOptions opt;
    opt.seed = synthesis_seed;
    opt.max_rounds = 3;
    const SynthesisResult r = synthesize(fam, opt);
    if (!r.witness) return {false, "no witness within 3 rounds"};
    const Witness& w = *r.witness;
    if (w.reports.size() != 4) l.fail("expected 4 reports");
    for (std::size_t i = 0; i < w.reports.size(); ++i)
        if (!w.reports[i].all_certified()) l.fail("member " + w.tags[i] + " not certified");
    const WitnessCheck check = verify_witness(fam, w);
    if (!check.valid) l.fail("self-verification: " + (check.problems.empty() ? "" : check.problems.front()));
    return l.outcome("round " + std::to_string(w.round) + ", try " + std::to_string(w.try_index) + ", g = " +
                     w.g.to_string() + ", self-verified");
}

Outcome criterion_7() {
    Ledger l;
    RandomStream rng(derive_seed(907, {1}));
    for (int i = 0; i < 100; ++i) {
        MultiPoly f = gen::random_poly(rng, XYZ, {2, 1, 2}, 5, 9);
        while (f.total_degree() > 2 || f.is_constant()) f = gen::random_poly(rng, XYZ, {2, 1, 2}, 4, 9);
        const int d = f.total_degree();
        const int dphi = d + 1 + static_cast<int>(rng.uniform(0, 1));
        const int dh = d * dphi + 1 + static_cast<int>(rng.uniform(0, 1));
        const Substitution s{gen::random_uni(rng, "z", dphi, 9), gen::random_uni(rng, "x", dh, 9),
                             i % 2 == 0 ? UniPoly("x") : gen::random_uni(rng, "x", dh + 1, 9)};
        const MultiPoly g = substitute_coordinates(f, s);
        const std::string at = "instance " + std::to_string(i);
        if (invert_coordinates(g, s) != f) l.fail(at + ": round trip");
        const long predicted = predict_substituted_degree(f, dphi, dh).predicted_degree;
        if (g.degree_in(2) != predicted)
            l.fail(at + ": deg_z " + std::to_string(g.degree_in(2)) + " vs predicted " + std::to_string(predicted));
    }
    return l.outcome("100 instances");
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
}

// The slicing job followed by the synthesis job, as the command line runs them.
struct SliceRun {
    JobResult slice;
    JobResult synth;
};

SliceRun run_sphere() {
    JobSpec s;
    s.command = "slice";
    s.input = "w^2 + z^2 + x^2 + y^2 - 1";
    s.vars = "x,y,z,w";
    s.lambda = "w";
    s.values = "0,1/2,1/3,2";
    SliceRun out;
    out.slice = run(s);
    if (out.slice.status != exit_ok) return out;
    JobSpec y;
    y.command = "synthesize";
    y.input = write_temp("hypersect_acceptance_sphere.txt", out.slice.document);
    y.input_is_file = true;
    y.seed = synthesis_seed;
    out.synth = run(y);
    return out;
}

JobResult run_linear() {
    JobSpec y;
    y.command = "synthesize";
    y.input = data_dir + "/linear_family.txt";
    y.input_is_file = true;
    y.seed = synthesis_seed;
    return run(y);
}

SliceRun first_sphere;

Outcome criterion_8() {
    Ledger l;
    first_sphere = run_sphere();
    if (first_sphere.slice.status != exit_ok) return {false, "slice job failed: " + first_sphere.slice.error};
    const FamilySample fam = parse_family(first_sphere.slice.document);
    if (fam.members.size() != 4) l.fail("expected 4 slices");
    if (first_sphere.synth.status != exit_ok) {
        l.fail("synthesize status " + std::to_string(first_sphere.synth.status) + " " + first_sphere.synth.error);
    } else {
        const Json d = Json::parse(first_sphere.synth.document);
        const Json& w = d["result"]["synthesis"]["witness"];
        if (w["members"].size() != fam.members.size()) l.fail("witness does not cover every slice");
        for (const auto& m : w["members"])
            if (m["report"]["all_certified"] != true) l.fail("slice " + m["tag"].get<std::string>() + " not certified");
    }
    const std::vector<Rational> cs{1, 3};
    const SliceResult poisoned = slice_family(P("(w - 1)*(x^2 + y^2 + z^2 - 4)", XYZW), "w", cs);
    bool flagged = false;
    for (const auto& dg : poisoned.diagnostics) flagged |= dg.kind == "zero-slice" && dg.c == 1;
    if (!flagged) l.fail("poisoned member not flagged at c = 1");
    if (poisoned.family.members.size() != 1) l.fail("poisoned value not excluded");
    return l.outcome("4 slices certified by one witness; zero-slice flagged at c = 1");
}

Outcome criterion_9() {
    Ledger l;
    const JobResult a = run_linear(), b = run_linear();
    if (a.status != exit_ok || a.document != b.document) l.fail("criterion 6 documents differ");
    const SliceRun second = run_sphere();
    if (second.slice.document != first_sphere.slice.document) l.fail("slice documents differ");
    if (second.synth.document.empty() || second.synth.document != first_sphere.synth.document)
        l.fail("criterion 8 documents differ");
    return l.outcome("byte-identical documents (" + std::to_string(a.document.size()) + " and " +
                     std::to_string(second.synth.document.size()) + " bytes)");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::function<Outcome()> body;
        double limit_seconds;  // 0: no time limit
    };
    const Criterion criteria[] = {
        {1, criterion_1, limit_c1_seconds}, {2, criterion_2, limit_c2_seconds}, {3, criterion_3, 0},
        {4, criterion_4, limit_c4_seconds}, {5, criterion_5, 0},                {6, criterion_6, limit_c6_seconds},
        {7, criterion_7, 0},                {8, criterion_8, 0},                {9, criterion_9, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
        }
        failed += !o.pass;
        std::printf("criterion %d: %s (%.2f s) %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
