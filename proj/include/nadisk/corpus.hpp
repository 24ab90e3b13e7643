#pragma once

#include <vector>

#include "nadisk/random.hpp"
#include "nadisk/scalar.hpp"
#include "nadisk/series.hpp"

namespace nadisk::corpus {

// Replayable random instances. Exponents are p/q with q <= 6 and |p| <= 12;
// coefficients are small integers.

// t^rho * (c0 + c1 t^e1 + ...) with up to `extra` correction terms.
Scalar point_on_circle(Rng& rng, const Rational& rho, int extra = 2);

// Profile with `factors` linear factors (counted with multiplicity) spread
// over at most `circles` circles with exponents in (0, 2].
ZeroProfile random_profile(Rng& rng, int factors, int circles = 4);

// Distinct circle exponents of a profile, ascending in radius (descending exponent).
std::vector<Rational> profile_circles(const ZeroProfile& p);

// A point on one of the profile's circles (often close to one of its zeros)
// or strictly between/outside them, inside the unit disk.
Scalar random_point(Rng& rng, const ZeroProfile& p);

// A point at distance exactly 2^(-d) from w, on the same circle when d > v(w).
Scalar point_near(Rng& rng, const Scalar& w, const Rational& d);

} // namespace nadisk::corpus

#include "nadisk/prescribe.hpp"

namespace nadisk::corpus {

// Up to `max_circles` circles (the first one deep, so that multi-stage plans
// exist) and up to `max_per_circle` targets per circle; tolerances 2^(-q)
// with q <= 6.
std::vector<Target> random_targets(Rng& rng, int max_circles = 4, int max_per_circle = 3);

} // namespace nadisk::corpus
