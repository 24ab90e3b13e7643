#include "nadisk/random.hpp"

#include "nadisk/error.hpp"

namespace nadisk {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x > limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::exponent(const Rational& lo, const Rational& hi, std::int64_t max_den) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::int64_t q = uniform(1, max_den);
        std::int64_t plo = (lo * Rational(q)).ceil();
        std::int64_t phi = (hi * Rational(q)).floor();
        if (plo > phi) continue;
        return Rational(uniform(plo, phi), q);
    }
    throw Error(ErrorKind::InvalidArgument, "no exponent with small denominator in " + lo.str() + ".." + hi.str());
}

std::int64_t Rng::coeff(std::int64_t bound) {
    std::int64_t c = uniform(1, bound);
    return coin() ? -c : c;
}

} // namespace nadisk
