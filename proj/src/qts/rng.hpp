#pragma once

#include <cstdint>

#include "rational.hpp"

namespace qts {

/// splitmix64 stream. Hand-rolled so that seeded runs are byte-identical
/// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough in [0, n): n stays tiny against 2^64 in every sweep.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    Rational positive_rational(int max_num = 9, int max_den = 9) {
        return Rational(range(1, max_num), range(1, max_den));
    }

private:
    std::uint64_t state_;
};

} // namespace qts
