#pragma once

#include "hypersect/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace hypersect {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a base seed and a path of tags, so that
/// every random decision is addressed by (seed, purpose, index) rather than call order.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// Platform-independent random stream: mt19937_64 plus rejection sampling
/// (the standard distributions are not reproducible across library vendors).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Uniform nonzero integer in [-bound, bound].
    std::int64_t nonzero(std::int64_t bound);
    /// num/den with |num| <= bound and 1 <= den <= bound, canonicalized.
    Rational rational(std::int64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Stream tags; values are part of the reproducibility contract.
enum class Stream : std::uint64_t {
    substitution = 1,
    pencil_candidate = 2,
    count_sample = 3,
    structured_sample = 4,
};

inline std::uint64_t tag(Stream s) { return static_cast<std::uint64_t>(s); }

}  // namespace hypersect
