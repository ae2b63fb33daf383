#pragma once

#include <cstddef>
#include <utility>
#include <vector>

/// Subresultant polynomial remainder sequences over an integral domain.
///
/// `Ring` supplies the coefficient arithmetic:
///   using value_type;
///   value_type zero() const; value_type one() const;
///   bool is_zero(const value_type&) const;
///   value_type add/sub/mul(const value_type&, const value_type&) const;
///   value_type neg(const value_type&) const;
///   value_type exact_div(const value_type&, const value_type&) const;
/// Polynomials are dense coefficient vectors, lowest degree first, with no trailing zeros.
namespace hypersect::prs {

template <class Ring>
using Dense = std::vector<typename Ring::value_type>;

template <class Ring>
void trim(const Ring& R, Dense<Ring>& a) {
    while (!a.empty() && R.is_zero(a.back())) a.pop_back();
}

template <class Ring>
int degree(const Dense<Ring>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class Ring>
typename Ring::value_type power(const Ring& R, typename Ring::value_type base, long e) {
    auto r = R.one();
    while (e > 0) {
        if (e & 1) r = R.mul(r, base);
        e >>= 1;
        if (e > 0) base = R.mul(base, base);
    }
    return r;
}

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b. Requires deg b >= 0.
template <class Ring>
Dense<Ring> prem(const Ring& R, Dense<Ring> a, const Dense<Ring>& b) {
    const int db = degree<Ring>(b);
    int e = degree<Ring>(a) - db + 1;
    if (e <= 0) return a;
    const auto& lb = b.back();
    while (degree<Ring>(a) >= db && !a.empty()) {
        const auto la = a.back();
        const std::size_t shift = a.size() - 1 - static_cast<std::size_t>(db);
        for (auto& c : a) c = R.mul(c, lb);
        for (std::size_t j = 0; j + 1 < b.size(); ++j) a[shift + j] = R.sub(a[shift + j], R.mul(la, b[j]));
        a.pop_back();
        trim(R, a);
        --e;
    }
    if (e > 0 && !a.empty()) {
        const auto f = power(R, lb, e);
        for (auto& c : a) c = R.mul(c, f);
    }
    return a;
}

/// Resultant of a and b with respect to their actual degrees; both must be nonzero.
template <class Ring>
typename Ring::value_type resultant(const Ring& R, Dense<Ring> a, Dense<Ring> b) {
    if (a.empty() || b.empty()) return R.zero();
    int da = degree<Ring>(a), db = degree<Ring>(b);
    bool negate = false;
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        negate = (da & 1) && (db & 1);
    }
    if (db == 0) {
        auto r = power(R, b[0], da);
        return negate ? R.neg(r) : r;
    }
    auto g = R.one(), h = R.one();
    for (;;) {
        da = degree<Ring>(a);
        db = degree<Ring>(b);
        const int delta = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        Dense<Ring> r = prem(R, std::move(a), b);
        if (r.empty()) return R.zero();
        a = std::move(b);
        const auto divisor = R.mul(g, power(R, h, delta));
        for (auto& c : r) c = R.exact_div(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
        } else if (delta == 1) {
            h = g;
        } else {
            h = R.exact_div(power(R, g, delta), power(R, h, delta - 1));
        }
        if (degree<Ring>(b) == 0) break;
    }
    da = degree<Ring>(a);
    auto res = R.exact_div(power(R, b[0], da), power(R, h, da - 1));
    return negate ? R.neg(res) : res;
}

/// Last nonzero element of the subresultant sequence of a and b (deg a >= deg b >= 0);
/// proportional to gcd(a, b) over the fraction field of the ring.
template <class Ring>
Dense<Ring> last_subresultant(const Ring& R, Dense<Ring> a, Dense<Ring> b) {
    if (degree<Ring>(a) < degree<Ring>(b)) std::swap(a, b);
    if (b.empty()) return a;
    auto g = R.one(), h = R.one();
    for (;;) {
        const int delta = degree<Ring>(a) - degree<Ring>(b);
        Dense<Ring> r = prem(R, std::move(a), b);
        if (r.empty()) return b;
        if (degree<Ring>(r) == 0) return r;
        a = std::move(b);
        const auto divisor = R.mul(g, power(R, h, delta));
        for (auto& c : r) c = R.exact_div(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = R.exact_div(power(R, g, delta), power(R, h, delta - 1));
        }
    }
}

}  // namespace hypersect::prs
