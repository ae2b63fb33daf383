#pragma once

#include "hypersect/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypersect {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;
using VarList = std::vector<std::string>;

/// Graded lexicographic comparison; variables earlier in the tuple weigh more on ties.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Sparse polynomial with rational coefficients over a named variable tuple.
///
/// Terms are kept sorted by descending grlex order with no zero coefficients,
/// so structurally equal polynomials compare equal.
class MultiPoly {
public:
    struct Term {
        Monomial exps;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    MultiPoly();
    explicit MultiPoly(VarList vars);
    /// Combines repeated monomials and drops zeros.
    MultiPoly(VarList vars, std::vector<Term> terms);

    static MultiPoly constant(VarList vars, const Rational& c);
    static MultiPoly variable(VarList vars, std::string_view name);

    const VarList& vars() const { return *vars_; }
    std::size_t nvars() const { return vars_->size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Like index_of but throws PreconditionError when absent.
    std::size_t require_index(std::string_view name) const;

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the zero monomial.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    const Term& leading_term() const;

    /// -1 for the zero polynomial.
    int degree_in(std::size_t var) const;
    int total_degree() const;
    bool uses(std::size_t var) const { return degree_in(var) > 0; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly scaled(const Rational& s) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Re-expresses the polynomial over `target`; every variable actually used must occur there.
    MultiPoly with_vars(const VarList& target) const;

    /// Canonical text: descending grlex, explicit "*".
    std::string to_string() const;

private:
    void check_same_vars(const MultiPoly& o) const;
    static MultiPoly from_sorted(std::shared_ptr<const VarList> vars, std::vector<Term> terms);

    std::shared_ptr<const VarList> vars_;
    std::vector<Term> terms_;

    friend class MultiPolyBuilder;
};

/// Accumulates terms in any order and produces a canonical MultiPoly.
class MultiPolyBuilder {
public:
    explicit MultiPolyBuilder(VarList vars);
    void add(const Monomial& m, const Rational& c);
    MultiPoly build();

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

/// Replaces `var` by q. The result tuple keeps p's variables in order (dropping `var`
/// unless q uses it) followed by the variables q uses that are not already present.
MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& q);

/// p(images[0], ..., images[k-1]); all images share one tuple, which the result uses.
MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);
MultiPoly derivative(const MultiPoly& p, std::size_t var);

/// Sets `var` to a value; the variable stays in the tuple.
MultiPoly evaluate(const MultiPoly& p, std::size_t var, const Rational& value);
/// Sets `var` to a value and removes it from the tuple.
MultiPoly specialize(const MultiPoly& p, std::string_view var, const Rational& value);
/// Value at a full point (one rational per variable).
Rational evaluate_all(const MultiPoly& p, std::span<const Rational> point);

/// Coefficients of p viewed as a polynomial in `var`: result[i] multiplies var^i.
/// The coefficients stay over p's tuple with `var` absent.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var);
MultiPoly from_coefficients(const VarList& vars, std::size_t var, const std::vector<MultiPoly>& coeffs);
/// Leading coefficient with respect to `var`.
MultiPoly leading_coefficient_in(const MultiPoly& p, std::size_t var);

/// Exact quotient a / b; nullopt when b does not divide a. b must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
/// Like divide_exact but throws InternalDisagreement when the division is not exact.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);

/// Least common multiple of all coefficient denominators.
Integer denominator_lcm(const MultiPoly& p);
/// Largest variable index (in tuple order) used by p, or nullopt for constants.
std::optional<std::size_t> main_variable(const MultiPoly& p);

/// p scaled by a positive rational to a primitive integer polynomial.
MultiPoly integer_scaled(const MultiPoly& p);

/// Scales p so that its leading coefficient is 1 in the lexicographic order that ranks
/// the last variable highest. Zero maps to zero.
MultiPoly normalize_lex_monic(const MultiPoly& p);

}  // namespace hypersect
