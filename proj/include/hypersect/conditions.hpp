#pragma once

// The three conditions for the plane A0 = {y = 0}, the projection (x, y, z) -> (x, y)
// and a pencil polynomial g, checked in the order 2, 1, 3.

#include "hypersect/curve_intersect.hpp"
#include "hypersect/projection.hpp"
#include "hypersect/structured.hpp"
#include "hypersect/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypersect {

/// not_certified means no certificate either way: condition 1's criterion is only
/// sufficient, and a sampled count can stay inconclusive.
enum class Status { certified, not_certified, failed, skipped };
std::string to_string(Status s);

struct LineCompatibilityCertificate {
    std::string line_point = "origin";
    int plane_degree = -1;       ///< deg_z r, r = f(x, 0, z)
    bool leading_constant = false;
    int restricted_degree = -1;  ///< deg u, u = f(0, 0, z); -1 when u = 0
    int distinct_roots = 0;
    bool certified() const;
};

struct Condition1Result {
    Status status = Status::skipped;
    LineCompatibilityCertificate certificate;
    std::vector<std::string> failed_clauses;  ///< "leading-coefficient", "simple-fiber"
};

struct Condition2Result {
    Status status = Status::skipped;
    bool finite = false;
    int sheet_count = 0;
    int plane_degree = -1;
    bool plane_leading_constant = false;
    bool plane_fibers_separable = false;
    std::string separability_method;  ///< "modular-evaluation" or "symbolic-resultant"
    std::optional<Rational> witness_x;  ///< x0 with Res_z(r, r_z)(x0) != 0, for the modular method
    std::uint64_t witness_prime = 0;
    std::vector<std::string> failed_clauses;  ///< "finite", "plane-degree", "separable"
};

struct Condition3Result {
    Status status = Status::skipped;
    std::optional<UniPoly> g;
    std::string route;  ///< "explicit-discriminant", "sheared-resultant" or "no-branching"
    int trace_degree_at_zero = 0;
    int count_at_zero = 0;
    int generic_degree = 0;
    std::optional<int> generic_count;
    std::optional<int> gcd_degree;   ///< explicit route
    std::optional<int> upper_bound;  ///< sheared route
    std::vector<CountSample> samples;
    std::string note;
};

struct ConditionOptions {
    std::uint64_t seed = 0;
    int samples = 2;                 ///< agreeing samples for generic counts
    int explicit_degree_limit = 8;   ///< deg_z above which a known structure is used instead of Res_z(f, f_z)
};

/// Everything condition 3 needs to know about the discriminant locus along L0.
class PencilAnalysis {
public:
    /// Explicit route. Throws ComponentError when L0 lies in Gamma.
    static PencilAnalysis from_curve(const DiscriminantCurve& Gamma, const ConditionOptions& options);
    /// Chooses the route for a finite hypersurface; `structure` records how H arose, if known.
    static PencilAnalysis for_hypersurface(const Hypersurface& H, const std::optional<PencilStructure>& structure,
                                           const ConditionOptions& options);

    const std::string& route() const { return route_; }
    const std::string& x_name() const { return x_name_; }
    int trace_degree_at_zero() const { return trace_degree0_; }
    int count_at_zero() const { return count0_; }
    /// Multiple factors of psi_0 (empty when psi_0 is squarefree).
    const std::vector<SquarefreeFactor>& multiple_factors_at_zero() const { return multiple_; }
    /// prod q_j^j over the multiple factors, times x unless one of them vanishes at 0.
    UniPoly omega(const std::string& var) const;
    /// g must be nonzero with g(0) = 0.
    Condition3Result evaluate(const UniPoly& g) const;

private:
    std::string route_;
    std::string x_name_;
    ConditionOptions options_;
    std::optional<DiscriminantCurve> curve_;
    std::optional<PencilStructure> structure_;
    std::optional<MultiPoly> surface_;
    std::optional<StructuredZeroCount> zero_;
    int trace_degree0_ = 0;
    int count0_ = 0;
    std::vector<SquarefreeFactor> multiple_;
};

Condition1Result check_condition_1(const Hypersurface& H);
Condition2Result check_condition_2(const Hypersurface& H);
Condition3Result check_condition_3(const DiscriminantCurve& Gamma, const UniPoly& g, const ConditionOptions& options = {});

struct PencilAttempt {
    UniPoly g;
    std::string source;  ///< "omega", "omega-times-random", "monomial"
    std::vector<Condition3Result> results;  ///< one per analysed member
    bool success = false;
};

struct PencilSearch {
    std::optional<UniPoly> g;
    std::vector<PencilAttempt> attempts;
};

/// Candidates in order: the shared omega, omega times random monic polynomials of
/// increasing degree, then x, x^2, ...; every candidate must certify all members and
/// the later routes stay within `degree_budget`.
PencilSearch find_shared_pencil(std::span<const PencilAnalysis> members, int degree_budget, std::uint64_t seed);
PencilSearch find_pencil_polynomial(const PencilAnalysis& analysis, int degree_budget, std::uint64_t seed);
PencilSearch find_pencil_polynomial(const DiscriminantCurve& Gamma, int degree_budget, std::uint64_t seed);

struct ConditionReport {
    Condition2Result cond2;
    Condition1Result cond1;
    Condition3Result cond3;
    std::optional<UniPoly> g;
    std::optional<PencilSearch> search;
    std::vector<std::string> diagnostics;
    bool all_certified() const;
};

/// Conditions 2 and 1 plus the pencil analysis, when it exists. Structural
/// impossibilities are recorded in the report rather than thrown.
struct PreparedReport {
    ConditionReport report;
    std::optional<PencilAnalysis> analysis;
};
PreparedReport prepare_report(const Hypersurface& H, const std::optional<PencilStructure>& structure,
                              const ConditionOptions& options);

ConditionReport assemble_report(const Hypersurface& H, int degree_budget, const ConditionOptions& options,
                                const std::optional<PencilStructure>& structure = std::nullopt);
ConditionReport assemble_report_with_pencil(const Hypersurface& H, const UniPoly& g, const ConditionOptions& options,
                                            const std::optional<PencilStructure>& structure = std::nullopt);

}  // namespace hypersect
