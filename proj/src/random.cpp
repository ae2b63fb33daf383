#include "hypersect/random.hpp"

#include "hypersect/errors.hpp"

namespace hypersect {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(seed);
    for (auto t : path) s = mix64(s ^ mix64(t + 0x632be59bd9b4e019ULL));
    return s;
}

std::int64_t RandomStream::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw PreconditionError("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
    const std::uint64_t n = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % n);
}

std::int64_t RandomStream::nonzero(std::int64_t bound) {
    if (bound < 1) throw PreconditionError("nonzero sample needs bound >= 1");
    const std::int64_t v = uniform(1, 2 * bound);
    return v <= bound ? v : bound - v;
}

Rational RandomStream::rational(std::int64_t bound) {
    const std::int64_t num = uniform(-bound, bound);
    const std::int64_t den = uniform(1, bound);
    Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

}  // namespace hypersect
