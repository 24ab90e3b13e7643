#include "nadisk/mag.hpp"

#include <cmath>

#include "nadisk/error.hpp"

namespace nadisk {

const Rational& Mag::exponent() const {
    if (!q_) throw Error(ErrorKind::InvalidArgument, "exponent of the zero mag");
    return *q_;
}

Mag Mag::operator*(const Mag& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return Mag(*q_ + *o.q_);
}

Mag Mag::operator/(const Mag& o) const {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero mag");
    if (is_zero()) return zero();
    return Mag(*q_ - *o.q_);
}

Mag Mag::pow(std::int64_t k) const {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative integer power");
    if (k == 0) return one();
    if (is_zero()) return zero();
    return Mag(*q_ * Rational(k));
}

std::strong_ordering operator<=>(const Mag& a, const Mag& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
        return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // reversed: bigger valuation is a smaller magnitude
    return *b.q_ <=> *a.q_;
}

double Mag::to_double() const {
    if (is_zero()) return 0.0;
    return std::exp2(-q_->to_double());
}

std::string Mag::str() const {
    if (is_zero()) return "0";
    return "2^(" + (-*q_).str() + ")";
}

Mag mag_pow(const Mag& m, const Rational& e) {
    if (m.is_zero()) {
        if (e.sign() <= 0) throw Error(ErrorKind::ZeroToNonpositivePower, "zero mag raised to " + e.str());
        return Mag::zero();
    }
    return Mag::from_exponent(m.exponent() * e);
}

} // namespace nadisk
