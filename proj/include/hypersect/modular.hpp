#pragma once

#include "hypersect/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

/// Arithmetic in prime fields F_p with p < 2^62, used for fast exact certificates.
namespace hypersect::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  ///< dense, index = power, no trailing zeros

struct Field {
    u64 p;

    u64 add(u64 a, u64 b) const {
        const u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
    u64 mul(u64 a, u64 b) const {
        return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
    }
    u64 pow(u64 a, u64 e) const;
    /// a must be nonzero.
    u64 inv(u64 a) const;

    u64 reduce(const Integer& n) const;
    /// nullopt when p divides the denominator.
    std::optional<u64> reduce(const Rational& q) const;
    u64 from_int(std::int64_t v) const;
};

bool is_prime(u64 n);

/// The i-th prime below 2^62, counting downward from the largest.
u64 large_prime(std::size_t i);

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

u64 eval(const Field& F, const Poly& a, u64 x);
Poly derivative(const Field& F, const Poly& a);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, Poly a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& F, Poly a, Poly b);
/// Resultant for the actual degrees of a and b; zero if either is zero.
u64 resultant(const Field& F, Poly a, Poly b);
/// Resultant with b regarded as having formal degree `b_formal_degree` >= deg b,
/// for a whose actual degree is the formal one.
u64 resultant_formal(const Field& F, const Poly& a, const Poly& b, int b_formal_degree);
/// Interpolating polynomial through (xs[i], ys[i]); xs distinct.
Poly interpolate(const Field& F, const std::vector<u64>& xs, const std::vector<u64>& ys);
/// Number of distinct roots in the algebraic closure: deg a - deg gcd(a, a').
/// Degree of the polynomial through (k, ys[k]) for k = 0, ..., n-1; -1 for all zeros.
int interpolated_degree(const Field& F, std::vector<u64> ys);

int distinct_root_count(const Field& F, const Poly& a);

}  // namespace hypersect::modp
