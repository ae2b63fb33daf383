#pragma once

#include "hypersect/multipoly.hpp"
#include "hypersect/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hypersect {

/// Dense univariate polynomial with rational coefficients; coeffs[i] multiplies var^i.
class UniPoly {
public:
    UniPoly() : var_("x") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> coeffs);

    static UniPoly constant(std::string var, const Rational& c);
    static UniPoly monomial(std::string var, unsigned degree, const Rational& c = 1);

    const std::string& var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// -1 for zero.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading_coefficient() const;
    Rational operator()(const Rational& x) const;

    UniPoly monic() const;
    UniPoly scaled(const Rational& s) const;
    UniPoly operator-() const { return scaled(-1); }
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// Embeds into a multivariate polynomial over `vars`, which must contain var().
    MultiPoly to_multipoly(const VarList& vars) const;
    /// p must use no variable other than `var`.
    static UniPoly from_multipoly(const MultiPoly& p, const std::string& var);

    std::string to_string() const;

private:
    void trim();
    void check_var(const UniPoly& o) const;

    std::string var_;
    std::vector<Rational> coeffs_;
};

UniPoly derivative(const UniPoly& p);
UniPoly pow(const UniPoly& p, unsigned e);
/// p(q(var)).
UniPoly compose(const UniPoly& p, const UniPoly& q);
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Throws InternalDisagreement when b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(a, 0) = monic(a). Throws PreconditionError if both are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);

/// Primitive integer polynomial proportional to p (positive leading coefficient).
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p);

struct SquarefreeFactor {
    UniPoly q;
    int multiplicity;
    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// u = unit * prod q_j^j with each q_j monic, squarefree and pairwise coprime.
/// Factors appear in increasing multiplicity.
struct SquarefreeFactorization {
    Rational unit;
    std::vector<SquarefreeFactor> factors;

    UniPoly expand(const std::string& var) const;
    int distinct_root_count() const;
};

SquarefreeFactorization squarefree_factorization(const UniPoly& u);
/// Monic squarefree part.
UniPoly squarefree_part(const UniPoly& u);

}  // namespace hypersect
