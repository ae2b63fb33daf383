#include "hypersect/polyalg.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/modular.hpp"

#include <algorithm>

namespace hypersect {

Integer IntegerRing::exact_div(const Integer& a, const Integer& b) const {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

prs::Dense<MultiPolyRing> to_dense(const MultiPoly& p, std::size_t var) { return coefficients_in(p, var); }

MultiPoly resultant_in(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    if (f.vars() != g.vars()) throw VariableMismatch("resultant operands use different variable tuples");
    if (f.degree_in(var) <= 0 || g.degree_in(var) <= 0)
        throw PreconditionError("resultant needs positive degree in '" + f.vars()[var] + "'");
    const MultiPolyRing R{f.vars()};
    return prs::resultant(R, to_dense(f, var), to_dense(g, var));
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    const auto vi = f.require_index(var);
    VarList rest = f.vars();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(vi));
    return resultant_in(f, g, vi).with_vars(rest);
}

Integer resultant(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    return prs::resultant(IntegerRing{}, a, b);
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    // a = A / alpha with A integral: Res(a, b) = Res(A, B) / (alpha^deg b * beta^deg a).
    auto scale_of = [](const UniPoly& p, std::vector<Integer>& out) {
        Integer den = 1;
        for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        out.clear();
        for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
        return den;
    };
    std::vector<Integer> A, B;
    const Integer alpha = scale_of(a, A), beta = scale_of(b, B);
    Rational r(resultant(A, B));
    r /= Rational(ipow(alpha, static_cast<unsigned long>(b.degree())) * ipow(beta, static_cast<unsigned long>(a.degree())));
    return r;
}

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.vars(), 1); }

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

modp::Poly image_at(const MultiPoly& integral, std::size_t v, const modp::Field& F, const std::vector<modp::u64>& point) {
    modp::Poly out(static_cast<std::size_t>(integral.degree_in(v)) + 1, 0);
    for (const auto& [mono, c] : integral.terms()) {
        modp::u64 t = F.reduce(c.get_num());
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (i != v && mono[i] != 0) t = F.mul(t, F.pow(point[i], mono[i]));
        out[mono[v]] = F.add(out[mono[v]], t);
    }
    return out;
}

// For a, b primitive in v: coprime images with both leading coefficients surviving
// prove deg_v gcd(a, b) = 0, since over Z the gcd's leading coefficient divides both.
bool coprime_by_image(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
    const MultiPoly A = integer_scaled(a), B = integer_scaled(b);
    int inconclusive = 0;
    for (std::size_t k = 0; k < 6 && inconclusive < 2; ++k) {
        const modp::Field F{modp::large_prime(k)};
        std::vector<modp::u64> point(a.nvars());
        for (std::size_t i = 0; i < point.size(); ++i) point[i] = (k * 7919 + i * 104729 + 12345) % F.p;
        const modp::Poly ia = image_at(A, v, F, point), ib = image_at(B, v, F, point);
        if (ia.back() == 0 || ib.back() == 0) continue;
        if (modp::degree(modp::gcd(F, ia, ib)) == 0) return true;
        ++inconclusive;
    }
    return false;
}

MultiPoly content_impl(const MultiPoly& p, std::size_t var) {
    auto coeffs = coefficients_in(p, var);
    std::sort(coeffs.begin(), coeffs.end(),
              [](const MultiPoly& x, const MultiPoly& y) { return x.size() < y.size(); });
    MultiPoly g(p.vars());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_constant()) return one_like(p);
    }
    return g;
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_lex_monic(b);
    if (b.is_zero()) return normalize_lex_monic(a);
    if (a.is_constant() || b.is_constant()) return one_like(a);
    const auto va = main_variable(a), vb = main_variable(b);
    const std::size_t v = std::max(*va, *vb);
    if (a.degree_in(v) == 0) return gcd_impl(a, content_impl(b, v));
    if (b.degree_in(v) == 0) return gcd_impl(content_impl(a, v), b);
    const MultiPoly ca = content_impl(a, v), cb = content_impl(b, v);
    const MultiPoly c = gcd_impl(ca, cb);
    MultiPoly A = integer_scaled(exact_quotient(a, ca)), B = integer_scaled(exact_quotient(b, cb));
    if (coprime_by_image(A, B, v)) return normalize_lex_monic(c);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    const MultiPolyRing R{a.vars()};
    auto da = to_dense(A, v), db = to_dense(B, v);
    for (;;) {
        auto r = prs::prem(R, std::move(da), db);
        if (r.empty()) break;
        if (r.size() == 1) {
            db = {R.one()};
            break;
        }
        da = std::move(db);
        MultiPoly rp = from_coefficients(a.vars(), v, r);
        rp = integer_scaled(exact_quotient(rp, content_impl(rp, v)));
        db = to_dense(rp, v);
    }
    MultiPoly g = from_coefficients(a.vars(), v, db);
    g = exact_quotient(g, content_impl(g, v));
    return normalize_lex_monic(c * g);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars()) throw VariableMismatch("gcd operands use different variable tuples");
    return gcd_impl(a, b);
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    return normalize_lex_monic(content_impl(p, var));
}

MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    return exact_quotient(p, content_in(p, var));
}

MultiPoly squarefree_part(const MultiPoly& p) {
    if (p.is_zero()) throw PreconditionError("squarefree part of zero");
    const auto v = main_variable(p);
    if (!v) return one_like(p);
    const MultiPoly c = content_in(p, *v);
    const MultiPoly q = exact_quotient(p, c);
    const MultiPoly s = exact_quotient(q, gcd(q, derivative(q, *v)));
    return normalize_lex_monic(squarefree_part(c) * s);
}

bool is_squarefree(const MultiPoly& p) {
    return squarefree_part(p).total_degree() == p.total_degree();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    // Clear denominators row by row, then Bareiss over Z.
    Rational scale = 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw PreconditionError("determinant of a non-square matrix");
        Integer den = 1;
        for (const auto& q : m[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (den / m[i][j].get_den());
        scale *= den;
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1]);
    if (sign < 0) det = -det;
    return det / scale;
}

Rational principal_subresultant(const UniPoly& a, const UniPoly& b, int j) {
    const int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) throw PreconditionError("principal subresultant of zero polynomial");
    if (j < 0 || j > std::min(m, n)) throw PreconditionError("subresultant index out of range");
    const int size = m + n - 2 * j;
    if (size == 0) return 1;
    std::vector<std::vector<Rational>> mat;
    // Column c holds the coefficient of x^(m + n - j - 1 - c).
    auto push_shifted = [&](const UniPoly& p, int shift) {
        std::vector<Rational> row(static_cast<std::size_t>(size), Rational(0));
        for (int c = 0; c < size; ++c) {
            const int power = m + n - j - 1 - c - shift;
            if (power >= 0 && power <= p.degree()) row[static_cast<std::size_t>(c)] = p.coeffs()[static_cast<std::size_t>(power)];
        }
        mat.push_back(std::move(row));
    };
    for (int s = n - j - 1; s >= 0; --s) push_shifted(a, s);
    for (int s = m - j - 1; s >= 0; --s) push_shifted(b, s);
    return determinant(std::move(mat));
}

}  // namespace hypersect
