#pragma once

// Exact pencil counts for surfaces produced by a coordinate substitution, computed
// from small resultants and prime-field images instead of an explicit discriminant.
//
// For P(x, z) = f_sigma(x, c*g(x), z), the degree of psi = Res_z(P, P_z) in x is the
// affine intersection number of {P = 0} and {P_z = 0}. Under u = x + phi(z) the same
// number is deg_z Res_u(P', G) with P'(u, z) = f(u, h(u) + (s + c*g)(u - phi(z)), z) and
// G = P'_z + phi'(z) P'_u, which involves only the small original polynomial.

#include "hypersect/curve_intersect.hpp"
#include "hypersect/modular.hpp"
#include "hypersect/multipoly.hpp"
#include "hypersect/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypersect {

/// The surface normalize(f(x + phi(z), y + s(x) + h(x + phi(z)), z)) together with its origin.
struct PencilStructure {
    MultiPoly original;  ///< f over (x, y, z)
    UniPoly phi;         ///< in the third variable
    UniPoly h;           ///< in the first variable
    UniPoly shift;       ///< s, in the first variable; may be zero
};

/// normalize(f(x + phi(z), y + s(x) + h(x + phi(z)), z)).
MultiPoly surface_of(const PencilStructure& s);

/// Integer-coefficient polynomial reduced modulo p, evaluated at all variables but one.
class ModularImage {
public:
    ModularImage(const MultiPoly& integral, const modp::Field& F, std::size_t main_var);
    /// Dense polynomial in the main variable; `values` has one entry per variable.
    modp::Poly at(std::span<const modp::u64> values) const;
    const modp::Field& field() const { return F_; }

private:
    modp::Field F_;
    std::size_t main_;
    std::size_t nvars_;
    int main_degree_;
    std::vector<int> max_exp_;
    std::vector<modp::u64> coeff_;
    std::vector<Exponent> exps_;  // row-major, nvars_ per term
};

/// log2 of a bound on every coefficient of Res_v(a, b) for integer a, b over two
/// variables (Hadamard bound on the unit circle of the other variable).
double resultant_coefficient_bits(const MultiPoly& a, const MultiPoly& b, std::size_t v);

/// Bound on deg_o Res_v(a, b) from the growth of the roots of a in v as |o| -> infinity;
/// lc_v(a) must not involve o. Other variables of the tuple are ignored.
int puiseux_degree_bound(const MultiPoly& a, const MultiPoly& b, std::size_t v, std::size_t o);

/// Exact deg_other Res_v(a, b) for a, b over exactly two variables with integer
/// coefficients, where lc_v(a) is a nonzero constant. -1 when the resultant vanishes.
int exact_resultant_degree(const MultiPoly& a, const MultiPoly& b, std::size_t v);

struct StructuredZeroCount {
    int trace_degree = -1;  ///< deg psi_0
    int count = 0;          ///< distinct roots of psi_0
    bool exact_profile = false;  ///< psi_0 reconstructed exactly (not certified squarefree modulo p)
    std::vector<SquarefreeFactor> multiple_factors;
    std::uint64_t prime = 0;
};

struct StructuredPencilCount {
    bool available = false;
    std::string note;
    int c_degree_bound = 0;      ///< distinct parameter values examined for the generic degree, minus one
    int growth_bound = -1;       ///< root-growth bound on the generic degree
    int generic_degree = -1;     ///< deg_x psi over Q(c)
    int upper_bound = 0;         ///< generic count cannot exceed this
    std::optional<int> generic_count;
    std::vector<CountSample> samples;
    std::uint64_t prime = 0;
};

/// Builds P' and G for the pencil polynomial g; both are over (u, z, c), with u named like x.
struct UzPencil {
    MultiPoly P;  ///< integer coefficients
    MultiPoly G;  ///< integer coefficients
};
UzPencil uz_pencil(const PencilStructure& s, const UniPoly& g);

/// Distinct count of psi_0 = Res_z(r, r_z), r = f_sigma(x, 0, z). Throws ComponentError
/// when psi_0 vanishes identically; nullopt when the structure does not apply.
std::optional<StructuredZeroCount> structured_count_at_zero(const PencilStructure& s, const MultiPoly& f_sigma);

/// Generic distinct count of psi(c, .) = Res_z of f_sigma(x, c*g(x), z) with its z-derivative.
/// `zero` supplies the multiple factors of psi_0 used for the upper bound.
StructuredPencilCount structured_generic_count(const PencilStructure& s, const MultiPoly& f_sigma, const UniPoly& g,
                                               const StructuredZeroCount& zero, std::uint64_t seed, int samples);

/// psi_0 reconstructed exactly over Q from prime-field images.
UniPoly exact_trace_at_zero(const MultiPoly& f_sigma, int degree);

}  // namespace hypersect
