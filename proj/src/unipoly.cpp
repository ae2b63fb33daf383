#include "hypersect/unipoly.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/modular.hpp"

#include <algorithm>

namespace hypersect {

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(std::string var, const Rational& c) { return UniPoly(std::move(var), {c}); }

UniPoly UniPoly::monomial(std::string var, unsigned degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(var), std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && hypersect::is_zero(coeffs_.back())) coeffs_.pop_back();
}

void UniPoly::check_var(const UniPoly& o) const {
    if (var_ != o.var_ && !is_zero() && !o.is_zero() && (degree() > 0 || o.degree() > 0))
        throw VariableMismatch("univariate operands in '" + var_ + "' and '" + o.var_ + "'");
}

const Rational& UniPoly::leading_coefficient() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coefficient());
}

UniPoly UniPoly::scaled(const Rational& s) const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    check_var(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    check_var(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (is_zero(a.coeffs_[i])) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.var_, std::move(c));
}

MultiPoly UniPoly::to_multipoly(const VarList& vars) const {
    MultiPoly x = MultiPoly::variable(vars, var_);
    const auto vi = x.require_index(var_);
    std::vector<MultiPoly::Term> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (hypersect::is_zero(coeffs_[i])) continue;
        Monomial m(vars.size(), 0);
        m[vi] = static_cast<Exponent>(i);
        terms.push_back({std::move(m), coeffs_[i]});
    }
    return MultiPoly(vars, std::move(terms));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, const std::string& var) {
    const auto vi = p.index_of(var);
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
        for (std::size_t k = 0; k < p.nvars(); ++k)
            if ((!vi || k != *vi) && t.exps[k] != 0)
                throw PreconditionError("polynomial is not univariate in '" + var + "'");
        const std::size_t d = vi ? t.exps[*vi] : 0;
        if (c.size() <= d) c.resize(d + 1, Rational(0));
        c[d] = t.coeff;
    }
    return UniPoly(var, std::move(c));
}

std::string UniPoly::to_string() const { return to_multipoly({var_}).to_string(); }

UniPoly derivative(const UniPoly& p) {
    if (p.degree() <= 0) return UniPoly(p.var());
    std::vector<Rational> d(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return UniPoly(p.var(), std::move(d));
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r = UniPoly::constant(p.var(), 1);
    UniPoly base = p;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
    UniPoly acc(q.var());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * q + UniPoly::constant(q.var(), p.coeffs()[i]);
    return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by zero polynomial");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly(a.var()), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    const Rational inv_lc = 1 / b.leading_coefficient();
    for (int i = a.degree(); i >= db; --i) {
        const Rational c = r[static_cast<std::size_t>(i)] * inv_lc;
        if (is_zero(c)) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(a.var(), std::move(q)), UniPoly(a.var(), std::move(r))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalDisagreement("expected exact univariate division");
    return q;
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer n = c.get_num() * (den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        v.push_back(std::move(n));
    }
    if (g == 0) return v;
    if (sgn(v.back()) < 0) g = -g;
    for (auto& n : v) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    return v;
}

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void make_primitive(ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder up to a power of lc(b).
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() > db) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        ztrim(a);
    }
    return a;
}

UniPoly to_rational(const std::string& var, const ZPoly& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& n : a) c.emplace_back(n);
    return UniPoly(var, std::move(c)).monic();
}

// True when the reductions modulo a prime prove gcd(a, b) = 1.
bool modular_coprime_probe(const ZPoly& a, const ZPoly& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        const modp::Field F{modp::large_prime(i)};
        if (F.reduce(a.back()) == 0 || F.reduce(b.back()) == 0) continue;
        modp::Poly pa(a.size()), pb(b.size());
        for (std::size_t k = 0; k < a.size(); ++k) pa[k] = F.reduce(a[k]);
        for (std::size_t k = 0; k < b.size(); ++k) pb[k] = F.reduce(b[k]);
        return modp::degree(modp::gcd(F, pa, pb)) == 0;
    }
    return false;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of two zero polynomials");
    const std::string& var = a.is_zero() ? b.var() : a.var();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(var, 1);
    ZPoly A = primitive_integer_coeffs(a), B = primitive_integer_coeffs(b);
    if (modular_coprime_probe(A, B)) return UniPoly::constant(var, 1);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        ZPoly R = zprem(std::move(A), B);
        A = std::move(B);
        make_primitive(R);
        B = std::move(R);
    }
    return to_rational(var, A);
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var());
    return exact_quotient(a * b, gcd(a, b)).monic();
}

UniPoly SquarefreeFactorization::expand(const std::string& var) const {
    UniPoly r = UniPoly::constant(var, unit);
    for (const auto& f : factors) r = r * pow(f.q, static_cast<unsigned>(f.multiplicity));
    return r;
}

int SquarefreeFactorization::distinct_root_count() const {
    int n = 0;
    for (const auto& f : factors) n += f.q.degree();
    return n;
}

SquarefreeFactorization squarefree_factorization(const UniPoly& u) {
    if (u.is_zero()) throw PreconditionError("squarefree factorization of zero");
    SquarefreeFactorization out{u.leading_coefficient(), {}};
    if (u.degree() == 0) return out;
    // Yun's algorithm.
    const UniPoly f = u.monic();
    const UniPoly fp = derivative(f);
    UniPoly a = gcd(f, fp);
    UniPoly b = exact_quotient(f, a);
    UniPoly c = exact_quotient(fp, a);
    UniPoly d = c - derivative(b);
    for (int j = 1; b.degree() > 0; ++j) {
        UniPoly q = gcd(b, d);
        b = exact_quotient(b, q);
        c = exact_quotient(d, q);
        d = c - derivative(b);
        if (q.degree() > 0) out.factors.push_back({q.monic(), j});
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero()) throw PreconditionError("squarefree part of zero");
    if (u.degree() == 0) return UniPoly::constant(u.var(), 1);
    return exact_quotient(u, gcd(u, derivative(u))).monic();
}

}  // namespace hypersect
