#include "hypersect/multipoly.hpp"

#include "hypersect/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

namespace hypersect {

namespace {

std::uint64_t total(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Exponent e : m) {
            h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

Exponent add_exponents(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) throw std::overflow_error("exponent overflow");
    return a + b;
}

const std::shared_ptr<const VarList>& empty_vars() {
    static const auto v = std::make_shared<const VarList>();
    return v;
}

}  // namespace

bool grlex_greater(const Monomial& a, const Monomial& b) {
    const auto ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

struct MultiPolyBuilder::Impl {
    VarList vars;
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
};

MultiPolyBuilder::MultiPolyBuilder(VarList vars) : impl_(std::make_shared<Impl>()) {
    impl_->vars = std::move(vars);
}

void MultiPolyBuilder::add(const Monomial& m, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = impl_->acc.try_emplace(m, c);
    if (!inserted) it->second += c;
}

MultiPoly MultiPolyBuilder::build() {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(impl_->acc.size());
    for (auto& [m, c] : impl_->acc)
        if (!is_zero(c)) terms.push_back({m, std::move(c)});
    impl_->acc.clear();
    std::sort(terms.begin(), terms.end(),
              [](const MultiPoly::Term& a, const MultiPoly::Term& b) { return grlex_greater(a.exps, b.exps); });
    return MultiPoly::from_sorted(std::make_shared<const VarList>(impl_->vars), std::move(terms));
}

MultiPoly::MultiPoly() : vars_(empty_vars()) {}

MultiPoly::MultiPoly(VarList vars) : vars_(std::make_shared<const VarList>(std::move(vars))) {}

MultiPoly::MultiPoly(VarList vars, std::vector<Term> terms) {
    MultiPolyBuilder b(vars);
    for (auto& t : terms) {
        if (t.exps.size() != vars.size()) throw PreconditionError("exponent vector length does not match variables");
        b.add(t.exps, t.coeff);
    }
    *this = b.build();
}

MultiPoly MultiPoly::from_sorted(std::shared_ptr<const VarList> vars, std::vector<Term> terms) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    p.terms_ = std::move(terms);
    return p;
}

MultiPoly MultiPoly::constant(VarList vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (!hypersect::is_zero(c)) p.terms_.push_back({Monomial(p.nvars(), 0), c});
    return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::string_view name) {
    MultiPoly p(std::move(vars));
    const auto i = p.require_index(name);
    Monomial m(p.nvars(), 0);
    m[i] = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return i;
    return std::nullopt;
}

std::size_t MultiPoly::require_index(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw PreconditionError("unknown variable '" + std::string(name) + "'");
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_[0].exps) == 0);
}

Rational MultiPoly::constant_term() const {
    if (!terms_.empty() && total(terms_.back().exps) == 0) return terms_.back().coeff;
    return Rational(0);
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_greater(t.exps, key); });
    if (it != terms_.end() && it->exps == m) return it->coeff;
    return Rational(0);
}

const MultiPoly::Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
    return terms_.front();
}

int MultiPoly::degree_in(std::size_t var) const {
    if (terms_.empty()) return -1;
    Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.exps[var]);
    return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total(terms_.front().exps));
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_ && *vars_ != *o.vars_) throw VariableMismatch("operands use different variable tuples");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

template <bool Subtract>
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, std::span<const MultiPoly::Term> b) {
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
            out.push_back({b[j].exps, Subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (!is_zero(c)) out.push_back({a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(o);
    terms_ = merge<false>(terms_, o.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(o);
    terms_ = merge<true>(terms_, o.terms_);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    if (a.is_zero() || b.is_zero()) return MultiPoly::from_sorted(a.vars_, {});
    if (b.terms_.size() == 1 && total(b.terms_[0].exps) == 0) return a.scaled(b.terms_[0].coeff);
    if (a.terms_.size() == 1 && total(a.terms_[0].exps) == 0) return b.scaled(a.terms_[0].coeff);
    const std::size_t n = a.nvars();
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Monomial m(n);
    Rational prod;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            for (std::size_t k = 0; k < n; ++k) m[k] = add_exponents(s.exps[k], t.exps[k]);
            mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(m, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::vector<MultiPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [mono, c] : acc)
        if (!is_zero(c)) terms.push_back({mono, std::move(c)});
    std::sort(terms.begin(), terms.end(),
              [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return grlex_greater(x.exps, y.exps); });
    return MultiPoly::from_sorted(a.vars_, std::move(terms));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Rational& s) const {
    if (hypersect::is_zero(s)) return from_sorted(vars_, {});
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= s;
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::with_vars(const VarList& target) const {
    if (target == *vars_) return *this;
    std::vector<std::optional<std::size_t>> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        for (std::size_t j = 0; j < target.size(); ++j)
            if (target[j] == (*vars_)[i]) map[i] = j;
        if (!map[i] && degree_in(i) > 0)
            throw VariableMismatch("variable '" + (*vars_)[i] + "' is not in the target tuple");
    }
    MultiPolyBuilder b(target);
    Monomial m(target.size());
    for (const auto& t : terms_) {
        std::fill(m.begin(), m.end(), 0);
        for (std::size_t i = 0; i < nvars(); ++i)
            if (map[i]) m[*map[i]] = t.exps[i];
        b.add(m, t.coeff);
    }
    return b.build();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        const bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (*vars_)[i];
            if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
        }
        if (mono.empty()) {
            out += hypersect::to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += hypersect::to_string(c) + "*" + mono;
        }
    }
    return out;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly result = MultiPoly::constant(p.vars(), 1);
    MultiPoly base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

namespace {

MultiPoly compose_prefix(const MultiPoly& q, std::size_t k, const std::vector<MultiPoly>& images) {
    const VarList& target = images.front().vars();
    if (k == 0 || q.is_constant()) return MultiPoly::constant(target, q.constant_term());
    const std::vector<MultiPoly> cs = coefficients_in(q, k - 1);
    MultiPoly acc = MultiPoly::constant(target, 0);
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * images[k - 1] + compose_prefix(cs[i], k - 1, images);
    return acc;
}

}  // namespace

MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& images) {
    if (images.empty() || images.size() != p.vars().size()) throw PreconditionError("compose needs one image per variable");
    for (const MultiPoly& q : images)
        if (q.vars() != images.front().vars()) throw VariableMismatch("compose images must share a tuple");
    return compose_prefix(p, images.size(), images);
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
    const int d = p.degree_in(var);
    if (d < 0) return {};
    std::vector<MultiPolyBuilder> builders;
    builders.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) builders.emplace_back(p.vars());
    Monomial m;
    for (const auto& t : p.terms()) {
        m = t.exps;
        m[var] = 0;
        builders[t.exps[var]].add(m, t.coeff);
    }
    std::vector<MultiPoly> out;
    out.reserve(builders.size());
    for (auto& b : builders) out.push_back(b.build());
    return out;
}

MultiPoly from_coefficients(const VarList& vars, std::size_t var, const std::vector<MultiPoly>& coeffs) {
    MultiPolyBuilder b(vars);
    Monomial m;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].vars() != vars) throw VariableMismatch("coefficient over a different tuple");
        for (const auto& t : coeffs[i].terms()) {
            if (t.exps[var] != 0) throw PreconditionError("coefficient depends on the main variable");
            m = t.exps;
            m[var] = static_cast<Exponent>(i);
            b.add(m, t.coeff);
        }
    }
    return b.build();
}

MultiPoly leading_coefficient_in(const MultiPoly& p, std::size_t var) {
    const int d = p.degree_in(var);
    if (d < 0) return p;
    MultiPolyBuilder b(p.vars());
    Monomial m;
    for (const auto& t : p.terms()) {
        if (t.exps[var] != static_cast<Exponent>(d)) continue;
        m = t.exps;
        m[var] = 0;
        b.add(m, t.coeff);
    }
    return b.build();
}

MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& q) {
    const std::size_t vi = p.require_index(var);
    const bool q_uses_var = q.index_of(var) && q.uses(*q.index_of(var));
    VarList out;
    for (std::size_t i = 0; i < p.nvars(); ++i)
        if (i != vi || q_uses_var) out.push_back(p.vars()[i]);
    for (std::size_t i = 0; i < q.nvars(); ++i)
        if (q.uses(i) && std::find(out.begin(), out.end(), q.vars()[i]) == out.end()) out.push_back(q.vars()[i]);

    const auto coeffs = coefficients_in(p, vi);
    const MultiPoly qq = q.with_vars(out);
    MultiPoly acc(out);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * qq;
        acc += coeffs[i].with_vars(out);
    }
    return acc;
}

MultiPoly derivative(const MultiPoly& p, std::size_t var) {
    MultiPolyBuilder b(p.vars());
    Monomial m;
    for (const auto& t : p.terms()) {
        if (t.exps[var] == 0) continue;
        m = t.exps;
        m[var] -= 1;
        b.add(m, t.coeff * t.exps[var]);
    }
    return b.build();
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) {
    return derivative(p, p.require_index(var));
}

MultiPoly evaluate(const MultiPoly& p, std::size_t var, const Rational& value) {
    const auto coeffs = coefficients_in(p, var);
    MultiPoly acc(p.vars());
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc.scaled(value);
        acc += coeffs[i];
    }
    return acc;
}

MultiPoly specialize(const MultiPoly& p, std::string_view var, const Rational& value) {
    const auto vi = p.require_index(var);
    VarList out = p.vars();
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(vi));
    return evaluate(p, vi, value).with_vars(out);
}

Rational evaluate_all(const MultiPoly& p, std::span<const Rational> point) {
    if (point.size() != p.nvars()) throw PreconditionError("point dimension does not match variables");
    Rational sum = 0;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (t.exps[i] > 0) v *= rpow(point[i], t.exps[i]);
        sum += v;
    }
    return sum;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by zero polynomial");
    if (a.vars() != b.vars()) throw VariableMismatch("operands use different variable tuples");
    if (a.is_zero()) return a;
    if (b.is_constant()) return a.scaled(1 / b.constant_term());
    const std::size_t n = a.nvars();
    std::map<Monomial, Rational, GrlexGreater> rem;
    for (const auto& t : a.terms()) rem.emplace(t.exps, t.coeff);
    const auto& lt = b.leading_term();
    const Rational inv_lc = 1 / lt.coeff;
    MultiPolyBuilder quotient(a.vars());
    Monomial qm(n), m(n);
    while (!rem.empty()) {
        auto top = rem.begin();
        for (std::size_t k = 0; k < n; ++k) {
            if (top->first[k] < lt.exps[k]) return std::nullopt;
            qm[k] = top->first[k] - lt.exps[k];
        }
        const Rational qc = top->second * inv_lc;
        quotient.add(qm, qc);
        for (const auto& t : b.terms()) {
            for (std::size_t k = 0; k < n; ++k) m[k] = t.exps[k] + qm[k];
            auto it = rem.find(m);
            const Rational delta = qc * t.coeff;
            if (it == rem.end()) {
                rem.emplace(m, -delta);
            } else {
                it->second -= delta;
                if (is_zero(it->second)) rem.erase(it);
            }
        }
    }
    return quotient.build();
}

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw InternalDisagreement("expected exact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
    return *std::move(q);
}

Integer denominator_lcm(const MultiPoly& p) {
    Integer l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
}

std::optional<std::size_t> main_variable(const MultiPoly& p) {
    for (std::size_t i = p.nvars(); i-- > 0;)
        if (p.uses(i)) return i;
    return std::nullopt;
}

MultiPoly normalize_lex_monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const auto* best = &p.terms().front();
    for (const auto& t : p.terms()) {
        for (std::size_t i = p.nvars(); i-- > 0;) {
            if (t.exps[i] != best->exps[i]) {
                if (t.exps[i] > best->exps[i]) best = &t;
                break;
            }
        }
    }
    if (best->coeff == 1) return p;
    return p.scaled(1 / best->coeff);
}

MultiPoly integer_scaled(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const Integer den = denominator_lcm(p);
    Integer content = 0;
    for (const auto& t : p.terms()) {
        const Rational v = t.coeff * den;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num().get_mpz_t());
    }
    return p.scaled(Rational(den) / Rational(content));
}

}  // namespace hypersect
