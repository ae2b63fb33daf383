#include "hypersect/structured.hpp"

#include "hypersect/errors.hpp"
#include "hypersect/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hypersect {

namespace {

constexpr std::int64_t kSampleBound = 10000;
constexpr int kZeroPrimeAttempts = 3;
constexpr int kGrowthProbes = 3;

double log2_of(const Integer& n) {
    if (n == 0) return 0.0;
    long exp = 0;
    const double m = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log2(std::fabs(m)) + static_cast<double>(exp);
}

// Primes (indices into large_prime) whose product exceeds 2^(bits + 1) and that avoid `bad`.
std::vector<modp::u64> primes_for_bits(double bits, const std::vector<Integer>& bad) {
    std::vector<modp::u64> out;
    double have = 0.0;
    for (std::size_t i = 0; have <= bits + 1.0; ++i) {
        const modp::u64 p = modp::large_prime(i);
        const modp::Field F{p};
        if (std::any_of(bad.begin(), bad.end(), [&](const Integer& b) { return F.reduce(b) == 0; })) continue;
        out.push_back(p);
        have += std::log2(static_cast<double>(p));
    }
    return out;
}

std::vector<modp::u64> consecutive_nodes(int count) {
    std::vector<modp::u64> xs(static_cast<std::size_t>(count));
    std::iota(xs.begin(), xs.end(), modp::u64{0});
    return xs;
}

Integer integer_constant(const MultiPoly& p) {
    const Rational c = p.constant_term();
    if (c.get_den() != 1) throw InternalDisagreement("expected an integer constant");
    return c.get_num();
}

modp::Poly reduce_uni(const modp::Field& F, const UniPoly& u, bool& ok) {
    modp::Poly out;
    ok = true;
    for (const Rational& c : u.coeffs()) {
        const auto r = F.reduce(c);
        if (!r) {
            ok = false;
            return {};
        }
        out.push_back(*r);
    }
    modp::trim(out);
    return out;
}

// Images modulo F of Res_z(P, P_z) at x0 = 0..count-1, where P(z) = image at (x0, y(x0), .).
template <class YAt>
modp::Poly trace_image(const ModularImage& img, int z_degree, int count, YAt&& y_at) {
    const modp::Field& F = img.field();
    std::vector<modp::u64> ys;
    ys.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const modp::u64 x0 = static_cast<modp::u64>(i);
        const std::vector<modp::u64> point{x0, y_at(x0), 0};
        const modp::Poly P = img.at(point);
        ys.push_back(modp::resultant_formal(F, P, modp::derivative(F, P), z_degree - 1));
    }
    return modp::interpolate(F, consecutive_nodes(count), ys);
}

struct SigmaData {
    MultiPoly scaled;  // integer f_sigma over (x, y, z)
    int n = 0;         // deg_z
    Integer lc;        // lc_z, an integer constant
};

std::optional<SigmaData> sigma_data(const MultiPoly& f_sigma) {
    if (f_sigma.vars().size() != 3) throw PreconditionError("expected a polynomial in three variables");
    SigmaData d;
    d.scaled = integer_scaled(f_sigma);
    d.n = d.scaled.degree_in(2);
    const MultiPoly lc = leading_coefficient_in(d.scaled, 2);
    if (d.n < 1 || !lc.is_constant()) return std::nullopt;
    d.lc = integer_constant(lc);
    return d;
}

// deg_o of Res_v(a, b) modulo F, for a, b over two variables with lc_v(a) a unit mod p,
// from `points` >= deg + 1 evaluations.
int image_degree(const MultiPoly& a, const MultiPoly& b, std::size_t v, const modp::Field& F, int points) {
    const std::size_t o = 1 - v;
    const int nb = b.degree_in(v);
    const ModularImage A(a, F, v), B(b, F, v);
    std::vector<modp::u64> ys;
    ys.reserve(static_cast<std::size_t>(points));
    std::vector<modp::u64> point(2, 0);
    for (int i = 0; i < points; ++i) {
        point[o] = static_cast<modp::u64>(i);
        ys.push_back(modp::resultant_formal(F, A.at(point), B.at(point), nb));
    }
    return modp::interpolated_degree(F, std::move(ys));
}

}  // namespace

MultiPoly surface_of(const PencilStructure& s) {
    const MultiPoly& f = s.original;
    if (f.vars().size() != 3) throw PreconditionError("expected a polynomial in three variables");
    const VarList& v = f.vars();
    const MultiPoly X = MultiPoly::variable(v, v[0]) + UniPoly(v[2], s.phi.coeffs()).to_multipoly(v);
    MultiPoly hX = MultiPoly::constant(v, 0);
    const auto& hc = s.h.coeffs();
    for (std::size_t i = hc.size(); i-- > 0;) hX = hX * X + MultiPoly::constant(v, hc[i]);
    MultiPoly kx = MultiPoly::constant(v, 0);
    const MultiPoly x = MultiPoly::variable(v, v[0]);
    const auto& kc = s.shift.coeffs();
    for (std::size_t i = kc.size(); i-- > 0;) kx = kx * x + MultiPoly::constant(v, kc[i]);
    const MultiPoly Y = MultiPoly::variable(v, v[1]) + kx + hX;
    return normalize_lex_monic(compose(f, {X, Y, MultiPoly::variable(v, v[2])}));
}

ModularImage::ModularImage(const MultiPoly& integral, const modp::Field& F, std::size_t main_var)
    : F_(F), main_(main_var), nvars_(integral.vars().size()) {
    main_degree_ = std::max(integral.degree_in(main_var), 0);
    max_exp_.assign(nvars_, 0);
    for (const auto& [mono, c] : integral.terms()) {
        if (c.get_den() != 1) throw PreconditionError("modular image needs integer coefficients");
        const modp::u64 r = F.reduce(c.get_num());
        if (r == 0) continue;
        coeff_.push_back(r);
        for (std::size_t v = 0; v < nvars_; ++v) {
            exps_.push_back(mono[v]);
            max_exp_[v] = std::max(max_exp_[v], static_cast<int>(mono[v]));
        }
    }
}

modp::Poly ModularImage::at(std::span<const modp::u64> values) const {
    std::vector<std::vector<modp::u64>> powers(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) {
        if (v == main_) continue;
        auto& pw = powers[v];
        pw.resize(static_cast<std::size_t>(max_exp_[v]) + 1);
        pw[0] = 1;
        for (std::size_t e = 1; e < pw.size(); ++e) pw[e] = F_.mul(pw[e - 1], values[v] % F_.p);
    }
    modp::Poly out(static_cast<std::size_t>(main_degree_) + 1, 0);
    for (std::size_t t = 0; t < coeff_.size(); ++t) {
        const Exponent* e = &exps_[t * nvars_];
        modp::u64 term = coeff_[t];
        for (std::size_t v = 0; v < nvars_; ++v)
            if (v != main_ && e[v] != 0) term = F_.mul(term, powers[v][e[v]]);
        out[e[main_]] = F_.add(out[e[main_]], term);
    }
    modp::trim(out);
    return out;
}

double resultant_coefficient_bits(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
    auto row_bits = [&](const MultiPoly& p) {
        Integer sum_sq = 0;
        for (const MultiPoly& coeff : coefficients_in(p, v)) {
            Integer norm1 = 0;
            for (const auto& t : coeff.terms()) norm1 += abs(t.coeff.get_num());
            sum_sq += norm1 * norm1;
        }
        return 0.5 * log2_of(sum_sq);
    };
    const int na = std::max(a.degree_in(v), 0), nb = std::max(b.degree_in(v), 0);
    return nb * row_bits(a) + na * row_bits(b);
}

int puiseux_degree_bound(const MultiPoly& a, const MultiPoly& b, std::size_t v, std::size_t o) {
    const int na = a.degree_in(v);
    const auto ac = coefficients_in(a, v), bc = coefficients_in(b, v);
    // e = max_j deg_o(a_j) / (na - j) as a fraction num / den
    long num = 0, den = 1;
    for (int j = 0; j < na; ++j) {
        const int dj = ac[static_cast<std::size_t>(j)].degree_in(o);
        if (dj < 0) continue;
        if (static_cast<long>(dj) * den > num * (na - j)) {
            num = dj;
            den = na - j;
        }
    }
    long best = -1;  // max_b (deg_o b_b * den + b * num)
    for (std::size_t i = 0; i < bc.size(); ++i) {
        const int db = bc[i].degree_in(o);
        if (db < 0) continue;
        best = std::max(best, static_cast<long>(db) * den + static_cast<long>(i) * num);
    }
    if (best < 0) return -1;
    return static_cast<int>(na * best / den);
}

int exact_resultant_degree(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
    if (a.vars().size() != 2 || b.vars() != a.vars()) throw PreconditionError("expected two polynomials in the same two variables");
    if (a.is_zero() || b.is_zero()) return -1;
    const std::size_t o = 1 - v;
    const MultiPoly lc = leading_coefficient_in(a, v);
    if (!lc.is_constant()) throw PreconditionError("leading coefficient must be constant");
    const int na = a.degree_in(v), nb = b.degree_in(v);
    const int da = std::max(a.degree_in(o), 0), db = std::max(b.degree_in(o), 0);
    const int growth = puiseux_degree_bound(a, b, v, o);
    const int bound = std::min(nb * da + na * db, growth);
    const int points = bound + 1;
    int best = -1;
    // One prime reaching the bound settles the degree; otherwise enough primes that
    // every nonzero coefficient survives modulo one of them.
    std::vector<modp::u64> primes = primes_for_bits(0.0, {integer_constant(lc)});
    primes.resize(1);
    bool full = false;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const modp::u64 p = primes[k];
        best = std::max(best, image_degree(a, b, v, modp::Field{p}, points));
        if (best == bound) break;
        if (!full) {
            primes = primes_for_bits(resultant_coefficient_bits(a, b, v), {integer_constant(lc)});
            full = true;
            k = 0;  // the first prime is already done
        }
    }
    return best;
}

UzPencil uz_pencil(const PencilStructure& s, const UniPoly& g) {
    const MultiPoly& f = s.original;
    if (f.vars().size() != 3) throw PreconditionError("expected a polynomial in three variables");
    const std::string& x = f.vars()[0];
    const std::string& y = f.vars()[1];
    const std::string& z = f.vars()[2];
    const std::string c = fresh_parameter_name(f.vars());
    const VarList xzc{x, z, c};
    const MultiPoly X = MultiPoly::variable(xzc, x);
    const MultiPoly phi = UniPoly(z, s.phi.coeffs()).to_multipoly(xzc);
    const MultiPoly shifted = X - phi;
    auto at_shifted = [&](const UniPoly& q) {
        MultiPoly acc = MultiPoly::constant(xzc, 0);
        const auto& qc = q.coeffs();
        for (std::size_t i = qc.size(); i-- > 0;) acc = acc * shifted + MultiPoly::constant(xzc, qc[i]);
        return acc;
    };
    const MultiPoly Y = UniPoly(x, s.h.coeffs()).to_multipoly(xzc) + at_shifted(s.shift) +
                        MultiPoly::variable(xzc, c) * at_shifted(g);
    const MultiPoly P = substitute(f, y, Y).with_vars(xzc);
    const MultiPoly dphi = UniPoly(z, derivative(s.phi).coeffs()).to_multipoly(xzc);
    const MultiPoly G = derivative(P, 1) + dphi * derivative(P, 0);
    return {integer_scaled(P), integer_scaled(G)};
}

UniPoly exact_trace_at_zero(const MultiPoly& f_sigma, int degree) {
    const auto d = sigma_data(f_sigma);
    if (!d) throw PreconditionError("the surface is not finite over the plane");
    const MultiPoly r = specialize(d->scaled, f_sigma.vars()[1], 0);  // over (x, z)
    if (r.degree_in(1) != d->n) throw PreconditionError("the plane section drops degree");
    const double bits = resultant_coefficient_bits(r, derivative(r, 1), 1);
    const auto primes = primes_for_bits(bits, {d->lc, Integer(d->n)});
    const std::size_t len = static_cast<std::size_t>(degree) + 1;
    std::vector<Integer> value(len, 0);
    Integer modulus = 1;
    for (const modp::u64 p : primes) {
        const modp::Field F{p};
        const ModularImage img(d->scaled, F, 2);
        modp::Poly image = trace_image(img, d->n, degree + 1, [](modp::u64) { return modp::u64{0}; });
        image.resize(len, 0);
        // Garner step: value += modulus * ((image - value) / modulus mod p)
        const modp::u64 m_inv = F.inv(F.reduce(modulus));
        for (std::size_t i = 0; i < len; ++i) {
            const modp::u64 diff = F.sub(image[i], F.reduce(value[i]));
            value[i] += modulus * Integer(std::to_string(F.mul(diff, m_inv)));
        }
        modulus *= Integer(std::to_string(p));
    }
    const Integer half = modulus / 2;
    std::vector<Rational> coeffs;
    coeffs.reserve(len);
    for (Integer& v : value) {
        if (v > half) v -= modulus;
        coeffs.emplace_back(v);
    }
    return UniPoly(f_sigma.vars()[0], std::move(coeffs));
}

std::optional<StructuredZeroCount> structured_count_at_zero(const PencilStructure& s, const MultiPoly& f_sigma) {
    const auto d = sigma_data(f_sigma);
    if (!d) return std::nullopt;
    if (specialize(d->scaled, f_sigma.vars()[1], 0).degree_in(1) != d->n) return std::nullopt;
    const UzPencil uz = uz_pencil(s, UniPoly(s.h.var()));
    if (!leading_coefficient_in(uz.P, 0).is_constant()) return std::nullopt;
    const MultiPoly P0 = specialize(uz.P, uz.P.vars()[2], 0);
    const MultiPoly G0 = specialize(uz.G, uz.G.vars()[2], 0);
    StructuredZeroCount out;
    out.trace_degree = exact_resultant_degree(P0, G0, 0);
    if (out.trace_degree < 0) throw ComponentError("the plane section lies in the discriminant locus");

    int attempts = 0;
    for (std::size_t i = 0; attempts < kZeroPrimeAttempts; ++i) {
        const modp::Field F{modp::large_prime(i)};
        if (F.reduce(d->lc) == 0 || F.reduce(Integer(d->n)) == 0) continue;
        ++attempts;
        const ModularImage img(d->scaled, F, 2);
        const modp::Poly psi0 = trace_image(img, d->n, out.trace_degree + 1, [](modp::u64) { return modp::u64{0}; });
        if (modp::degree(psi0) != out.trace_degree) continue;
        if (modp::distinct_root_count(F, psi0) == out.trace_degree) {
            out.count = out.trace_degree;
            out.prime = F.p;
            return out;
        }
        break;
    }
    const TangencyProfile profile = tangency_profile(exact_trace_at_zero(f_sigma, out.trace_degree));
    if (profile.trace_degree != out.trace_degree)
        throw InternalDisagreement("reconstructed trace degree differs from the intersection count");
    out.count = profile.distinct_count;
    out.exact_profile = true;
    out.multiple_factors = profile.multiple_factors;
    return out;
}

StructuredPencilCount structured_generic_count(const PencilStructure& s, const MultiPoly& f_sigma, const UniPoly& g,
                                               const StructuredZeroCount& zero, std::uint64_t seed, int samples) {
    StructuredPencilCount out;
    if (g.is_zero()) throw PreconditionError("pencil polynomial must be nonzero");
    const auto d = sigma_data(f_sigma);
    if (!d) {
        out.note = "surface is not finite over the plane";
        return out;
    }
    const UzPencil uz = uz_pencil(s, g);
    // lc_u may depend on c but not on z; parameter values where it vanishes are skipped.
    const MultiPoly lc_u = leading_coefficient_in(uz.P, 0);
    if (lc_u.degree_in(1) > 0) {
        out.note = "leading coefficient in the sheared coordinates depends on z";
        return out;
    }
    out.available = true;
    out.c_degree_bound = uz.G.degree_in(0) * uz.P.degree_in(2) + uz.P.degree_in(0) * uz.G.degree_in(2);
    out.generic_degree = -1;
    const std::string& c = uz.P.vars()[2];
    const auto lc_at = [&](int i) { return specialize(lc_u, c, i).constant_term(); };
    // Growth bound for generic c, reached modulo one prime at a few small parameter values.
    const int growth = puiseux_degree_bound(uz.P, uz.G, 0, 1);
    out.growth_bound = growth;
    for (int i = 1, tried = 0; i <= out.c_degree_bound + 1 && tried < kGrowthProbes; ++i) {
        const Rational lc = lc_at(i);
        if (hypersect::is_zero(lc)) continue;
        ++tried;
        const modp::Field F{primes_for_bits(0.0, {lc.get_num()}).front()};
        if (image_degree(specialize(uz.P, c, i), specialize(uz.G, c, i), 0, F, growth + 1) == growth) {
            out.generic_degree = growth;
            break;
        }
    }
    const bool settled = out.generic_degree >= 0;
    int used = 0;
    for (int i = 0; !settled && used <= out.c_degree_bound; ++i) {
        if (hypersect::is_zero(lc_at(i))) continue;
        ++used;
        const int deg = i == 0 ? zero.trace_degree
                               : exact_resultant_degree(specialize(uz.P, c, i), specialize(uz.G, c, i), 0);
        out.generic_degree = std::max(out.generic_degree, deg);
    }
    if (out.generic_degree < 0) throw ComponentError("the pencil curves lie in the discriminant locus");

    out.upper_bound = out.generic_degree;
    for (const SquarefreeFactor& m : zero.multiple_factors) {
        const UniPoly qj = pow(UniPoly(g.var(), m.q.coeffs()), static_cast<unsigned>(m.multiplicity));
        if (divmod(g, qj).second.is_zero()) out.upper_bound -= (m.multiplicity - 1) * m.q.degree();
    }

    const int max_draws = std::max(16, 4 * samples);
    int agreeing = 0;
    std::size_t prime_index = 0;
    for (int draw = 0; draw < max_draws && agreeing < samples; ++draw) {
        RandomStream rng(derive_seed(seed, {tag(Stream::structured_sample), static_cast<std::uint64_t>(draw)}));
        const Rational c0 = rng.rational(kSampleBound);
        CountSample sample{c0, -1, 0, true};
        for (;; ++prime_index) {
            const modp::Field F{modp::large_prime(prime_index)};
            bool ok = true;
            const modp::Poly gp = reduce_uni(F, g, ok);
            const auto cp = F.reduce(c0);
            if (!ok || !cp || F.reduce(d->lc) == 0 || F.reduce(Integer(d->n)) == 0) continue;
            const ModularImage img(d->scaled, F, 2);
            const modp::Poly psi = trace_image(img, d->n, out.generic_degree + 1,
                                               [&](modp::u64 x0) { return F.mul(*cp, modp::eval(F, gp, x0)); });
            sample.trace_degree = modp::degree(psi);
            if (sample.trace_degree == out.generic_degree) {
                sample.exceptional = false;
                sample.count = modp::distinct_root_count(F, psi);
                out.prime = F.p;
            }
            break;
        }
        if (!sample.exceptional && sample.count > out.upper_bound)
            throw InternalDisagreement("sampled count exceeds the certified upper bound");
        if (!sample.exceptional && sample.count == out.upper_bound) ++agreeing;
        out.samples.push_back(sample);
    }
    if (agreeing >= samples) {
        out.generic_count = out.upper_bound;
    } else {
        out.note = "samples did not reach the upper bound";
    }
    return out;
}

}  // namespace hypersect
