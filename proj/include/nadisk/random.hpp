#pragma once

#include <cstdint>
#include <random>

#include "nadisk/rational.hpp"
#include "nadisk/scalar.hpp"

namespace nadisk {

// Deterministic generator for randomized suites. Only mt19937_64 output is
// used (its sequence is fixed by the standard); ranges are reduced by
// rejection so results do not depend on the library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (eng_() >> 63) != 0; }

    // p/q with |p| <= max_num, 1 <= q <= max_den, restricted to [lo, hi].
    Rational exponent(const Rational& lo, const Rational& hi, std::int64_t max_den = 6);
    // Small nonzero integer coefficient in [-bound, bound].
    std::int64_t coeff(std::int64_t bound = 5);

private:
    std::mt19937_64 eng_;
};

} // namespace nadisk
