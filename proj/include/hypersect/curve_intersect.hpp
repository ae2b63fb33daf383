#pragma once

#include "hypersect/multipoly.hpp"
#include "hypersect/projection.hpp"
#include "hypersect/unipoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hypersect {

/// psi(c, x) = F(x, c * g(x)) over the tuple (c, x).
struct PencilTrace {
    MultiPoly psi;
    UniPoly g;
    DiscriminantCurve source;
};

/// A variable name for the pencil parameter that does not clash with `taken`.
std::string fresh_parameter_name(const VarList& taken, const std::string& preferred = "c");

/// Throws PreconditionError for g = 0 and ComponentError if psi vanishes identically.
PencilTrace pencil_trace(const DiscriminantCurve& Gamma, const UniPoly& g);

struct TangencyProfile {
    int trace_degree = 0;
    SquarefreeFactorization factors;
    int defect = 0;  ///< sum over j >= 2 of j * deg q_j
    std::vector<SquarefreeFactor> multiple_factors;
    int distinct_count = 0;
};

/// Profile of a nonzero univariate trace; checks the defect identities (InternalDisagreement).
TangencyProfile tangency_profile(const UniPoly& trace);

/// Profile of F(x, h(x)); ComponentError if it vanishes identically.
TangencyProfile distinct_count_at(const DiscriminantCurve& Gamma, const UniPoly& h);

/// F(x, h(x)) as a univariate polynomial in the curve's first variable.
UniPoly restrict_curve(const DiscriminantCurve& Gamma, const UniPoly& h);

struct CountSample {
    Rational c;
    int trace_degree = 0;
    int count = 0;
    bool exceptional = false;
};

struct GenericCountCertificate {
    int generic_count = 0;
    int generic_degree = 0;  ///< deg_x psi over Q(c)
    int gcd_degree = 0;      ///< deg_x gcd(psi, psi_x) over Q(c)
    bool symbolic = true;
    std::string method;
    std::vector<CountSample> samples;
    bool agreement = false;
};

struct SamplingOptions {
    std::uint64_t seed = 0;
    int samples = 2;  ///< agreeing non-exceptional samples required
};

/// Distinct-root count of psi(c, .) over Q(c) by a subresultant sequence with
/// coefficients in Q[c], cross-checked at random rational c. A sample is
/// non-exceptional when lc_x(psi) and the principal subresultant coefficient of
/// (psi, psi_x) at the generic gcd degree do not vanish there.
/// Throws InternalDisagreement when a non-exceptional sample disagrees.
GenericCountCertificate generic_distinct_count(const PencilTrace& trace, const SamplingOptions& options);

/// x^e * prod_{j >= 2} q_j^j with e = 1 only when the origin is required and no
/// multiple factor vanishes at 0.
UniPoly build_omega(const TangencyProfile& profile, bool require_zero_at_origin, const std::string& var);

/// True iff the top x-coefficient of F(x, h0(x) + sum_{i <= m} b_i x^i) is a nonzero
/// constant in the formal b_i. Requires deg h0 > m.
bool constancy_check(const DiscriminantCurve& Gamma, const UniPoly& h0, int m);

}  // namespace hypersect
