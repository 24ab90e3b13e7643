#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "nadisk/rational.hpp"

namespace nadisk {

// An absolute value 2^(-q), or zero. q is the valuation, so larger q means a
// smaller magnitude. Finite mags form a group isomorphic to (Q, +).
class Mag {
public:
    static Mag zero() { return Mag(); }
    static Mag from_exponent(Rational q) { return Mag(q); }
    static Mag one() { return Mag(Rational(0)); }

    bool is_zero() const { return !q_.has_value(); }
    bool is_finite() const { return q_.has_value(); }

    // Valuation; only meaningful for finite mags.
    const Rational& exponent() const;

    Mag operator*(const Mag& o) const;
    Mag operator/(const Mag& o) const; // o must be finite
    Mag& operator*=(const Mag& o) { return *this = *this * o; }

    // m^k for an integer k >= 0 (zero^0 = 1).
    Mag pow(std::int64_t k) const;

    friend bool operator==(const Mag& a, const Mag& b) = default;
    friend std::strong_ordering operator<=>(const Mag& a, const Mag& b);

    double to_double() const;
    std::string str() const; // "0" or "2^(-q)"

private:
    Mag() = default;
    explicit Mag(Rational q) : q_(q) {}

    std::optional<Rational> q_;
};

inline std::ostream& operator<<(std::ostream& os, const Mag& m) { return os << m.str(); }

// m^e for rational e; zero^e requires e > 0.
Mag mag_pow(const Mag& m, const Rational& e);

// Convenience: 2^(-q).
inline Mag mag2(Rational q) { return Mag::from_exponent(q); }

} // namespace nadisk
