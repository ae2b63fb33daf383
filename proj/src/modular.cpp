#include "hypersect/modular.hpp"

#include "hypersect/errors.hpp"

#include <mutex>
#include <utility>

namespace hypersect::modp {

u64 Field::pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Field::inv(u64 a) const {
    a %= p;
    if (a == 0) throw PreconditionError("inverse of zero in F_p");
    if (p >= (u64{1} << 63)) return pow(a, p - 2);
    std::int64_t t = 0, nt = 1;
    u64 r = p, nr = a;
    while (nr != 0) {
        const u64 q = r / nr;
        t = std::exchange(nt, t - static_cast<std::int64_t>(q) * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(p)) : static_cast<u64>(t);
}

u64 Field::reduce(const Integer& n) const { return mpz_fdiv_ui(n.get_mpz_t(), p); }

std::optional<u64> Field::reduce(const Rational& q) const {
    const u64 den = reduce(q.get_den());
    if (den == 0) return std::nullopt;
    return mul(reduce(q.get_num()), inv(den));
}

u64 Field::from_int(std::int64_t v) const {
    const u64 m = static_cast<u64>(v < 0 ? -(v + 1) : v) % p;
    if (v >= 0) return m;
    return sub(neg(m), 1 % p);
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic base set for all 64-bit integers.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        a %= n;
        if (a == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 large_prime(std::size_t i) {
    static std::mutex mu;
    static std::vector<u64> table;
    std::lock_guard<std::mutex> lock(mu);
    u64 candidate = table.empty() ? (1ULL << 62) - 1 : table.back() - 2;
    while (table.size() <= i) {
        while (!is_prime(candidate)) candidate -= 2;
        table.push_back(candidate);
        candidate -= 2;
    }
    return table[i];
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 eval(const Field& F, const Poly& a, u64 x) {
    u64 acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

Poly derivative(const Field& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.p);
    trim(d);
    return d;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

Poly rem(const Field& F, Poly a, const Poly& b) {
    if (b.empty()) throw PreconditionError("remainder by zero polynomial");
    trim(a);
    const u64 inv_lc = F.inv(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const u64 q = F.mul(a.back(), inv_lc);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(q, b[j]));
        trim(a);
    }
    return a;
}

Poly gcd(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = rem(F, std::move(a), b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv_lc = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, inv_lc);
    }
    return a;
}

u64 resultant(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    u64 acc = 1;
    for (;;) {
        const int da = degree(a), db = degree(b);
        if (db == 0) return F.mul(acc, F.pow(b[0], static_cast<u64>(da)));
        if (da == 0) return F.mul(acc, F.pow(a[0], static_cast<u64>(db)));
        if (da < db) {
            if ((da & 1) && (db & 1)) acc = F.neg(acc);
            std::swap(a, b);
            continue;
        }
        Poly r = rem(F, a, b);
        if (r.empty()) return 0;
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if ((da & 1) && (db & 1)) acc = F.neg(acc);
        acc = F.mul(acc, F.pow(b.back(), static_cast<u64>(da - degree(r))));
        a = std::move(b);
        b = std::move(r);
    }
}

u64 resultant_formal(const Field& F, const Poly& a, const Poly& b, int b_formal_degree) {
    if (b.empty()) return 0;
    const int drop = b_formal_degree - degree(b);
    if (drop < 0) throw PreconditionError("formal degree below actual degree");
    return F.mul(F.pow(a.back(), static_cast<u64>(drop)), resultant(F, a, b));
}

Poly interpolate(const Field& F, const std::vector<u64>& xs, const std::vector<u64>& ys) {
    const std::size_t n = xs.size();
    // Nodes 0, 1, ..., n-1 make every divided difference denominator equal to k.
    bool consecutive = true;
    for (std::size_t i = 0; i < n && consecutive; ++i) consecutive = xs[i] == i;
    std::vector<u64> inv_k;
    if (consecutive) {
        inv_k.assign(n, 0);
        for (std::size_t k = 1; k < n; ++k) inv_k[k] = F.inv(k);
    }
    std::vector<u64> dd(ys);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n - 1; i >= k; --i) {
            const u64 num = F.sub(dd[i], dd[i - 1]);
            const u64 den_inv = consecutive ? inv_k[k] : F.inv(F.sub(xs[i], xs[i - k]));
            dd[i] = F.mul(num, den_inv);
            if (i == k) break;
        }
    }
    Poly out(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        // out = out * (x - xs[k]) + dd[k]
        for (std::size_t i = n - 1; i > 0; --i) out[i] = F.sub(out[i - 1], F.mul(out[i], xs[k]));
        out[0] = F.sub(dd[k], F.mul(out[0], xs[k]));
    }
    trim(out);
    return out;
}

int interpolated_degree(const Field& F, std::vector<u64> ys) {
    const std::size_t n = ys.size();
    std::vector<u64> inv_k(n, 0);
    for (std::size_t k = 1; k < n; ++k) inv_k[k] = F.inv(k);
    // Newton form over the nodes 0, ..., n-1: the degree is the last nonzero divided difference.
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            ys[i] = F.mul(F.sub(ys[i], ys[i - 1]), inv_k[k]);
            if (i == k) break;
        }
    for (std::size_t k = n; k-- > 0;)
        if (ys[k] != 0) return static_cast<int>(k);
    return -1;
}

int distinct_root_count(const Field& F, const Poly& a) {
    if (a.empty()) throw PreconditionError("root count of zero polynomial");
    return degree(a) - degree(gcd(F, a, derivative(F, a)));
}

}  // namespace hypersect::modp
