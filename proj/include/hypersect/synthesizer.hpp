#pragma once

// Randomized search for a coordinate system in which the plane {y = 0} satisfies the
// three conditions for every sampled member of a family, and the slicing step that
// reduces a hypersurface in more variables to such a family.

#include "hypersect/conditions.hpp"
#include "hypersect/projection.hpp"
#include "hypersect/structured.hpp"
#include "hypersect/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypersect {

struct FamilyMember {
    std::string tag;
    Hypersurface hypersurface;
};

/// Members share one variable tuple and are squarefree-normalized.
struct FamilySample {
    VarList vars;
    std::vector<FamilyMember> members;
    int declared_param_dim = 0;
};

/// Normalizes every member. Throws PreconditionError for an empty list, a negative
/// dimension or mixed variable tuples.
FamilySample make_family(std::vector<std::pair<std::string, MultiPoly>> members, int declared_param_dim);

/// (x, y, z) -> (x + phi(z), y + shift(x) + h(x + phi(z)), z). With shift = 0 this is
/// f(x + phi(z), y + h(x + phi(z)), z); the shift is the plane automorphism y -> y + s(x)
/// applied afterwards, which keeps deg_z and the finiteness argument unchanged.
struct Substitution {
    UniPoly phi;    ///< in z
    UniPoly h;      ///< in x
    UniPoly shift;  ///< in x; may be zero

    /// Identity substitution over the given variable tuple.
    static Substitution identity(const VarList& vars);
};

/// The composite polynomial, not normalized.
MultiPoly substitute_coordinates(const MultiPoly& f, const Substitution& s);
/// Inverse map (x, y, z) -> (x - phi(z), y - h(x) - shift(x - phi(z)), z).
MultiPoly invert_coordinates(const MultiPoly& f, const Substitution& s);
/// Squarefree-normalized hypersurface of the composite.
Hypersurface apply_substitution(const Hypersurface& H, const Substitution& s);
PencilStructure pencil_structure(const Hypersurface& H, const Substitution& s);

struct DegreeSchedule {
    int round = 0;
    int max_member_degree = 0;
    int declared_param_dim = 0;
    int phi_degree = 0;
    int h_degree = 0;
    int shift_degree = 0;  ///< deg h + declared_param_dim
    int g_budget = 0;      ///< deg h - 1
};

DegreeSchedule degree_schedule(const FamilySample& family, int round);

struct Witness {
    std::string plane = "A0 = {y=0} in substituted coordinates";
    Substitution substitution;
    UniPoly g;
    std::vector<std::string> tags;
    std::vector<Hypersurface> substituted;
    std::vector<ConditionReport> reports;
    PencilSearch pencil_search;
    DegreeSchedule degree_schedule_used;
    ConditionOptions condition_options;
    std::uint64_t seed = 0;
    int round = 0;
    int try_index = 0;
};

/// One rejected or accepted candidate substitution.
struct CandidateOutcome {
    int try_index = 0;
    std::string outcome;  ///< "certified", "condition-2", "condition-1", "condition-3-structure", "no-shared-pencil"
    std::string member;   ///< tag of the first member that rejected it, if any
};

struct RoundStatistics {
    DegreeSchedule schedule;
    int coefficient_bound = 0;
    std::vector<CandidateOutcome> candidates;
};

struct SynthesisOptions {
    std::uint64_t seed = 0;
    int max_rounds = 3;
    int tries_per_round = 4;
    int samples = 2;
};

struct SynthesisResult {
    std::optional<Witness> witness;
    std::vector<RoundStatistics> rounds;
};

/// Rounds of random substitutions with integer coefficients in [-10 (round + 1), 10 (round + 1)].
/// The first candidate (in (round, try) order) for which one g certifies every member wins.
SynthesisResult synthesize(const FamilySample& family, const SynthesisOptions& options);

/// Recomputes every member's substitution and report from the witness data alone.
struct WitnessCheck {
    bool valid = false;
    std::vector<ConditionReport> reports;
    std::vector<std::string> problems;
};
WitnessCheck verify_witness(const FamilySample& family, const Witness& witness);

struct SliceDiagnostic {
    Rational c;
    std::string kind;  ///< "zero-slice", "constant-slice" or "plane-component"
    std::string detail;
};

struct SliceResult {
    FamilySample family;
    std::vector<SliceDiagnostic> diagnostics;
};

/// Members f|_{lambda = c} (squarefree parts) over the remaining variables, tagged by c.
/// `plane` is a linear polynomial over f's variables for the candidate hyperplane; by
/// default it is the second remaining variable. Slices it divides are flagged but kept;
/// zero and constant slices are flagged and excluded. The family dimension is
/// base_param_dim + 1. Throws PreconditionError when fewer than four variables are given,
/// the plane is not linear or is a level set of lambda, or no slice survives.
SliceResult slice_family(const MultiPoly& f, std::string_view lambda, std::span<const Rational> c_samples,
                         int base_param_dim = 0, const std::optional<MultiPoly>& plane = std::nullopt);

}  // namespace hypersect
