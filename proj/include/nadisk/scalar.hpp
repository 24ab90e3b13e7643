#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nadisk/mag.hpp"
#include "nadisk/rational.hpp"

namespace nadisk {

struct Term {
    Rational exp;
    mpq_class coeff;
};

// An element of the model field: a generalized power series sum a_i t^(q_i)
// over Q with rational exponents, known exactly below `trunc` and unknown at
// and above it. trunc == nullopt means the stored terms are the whole element.
// |x| = 2^(-v(x)) where v is the least exponent.
class Scalar {
public:
    using Trunc = std::optional<Rational>;

    Scalar() = default; // exact zero
    Scalar(long n);     // NOLINT(implicit): exact integer constant
    explicit Scalar(const mpq_class& a);

    static Scalar monomial(const mpq_class& a, const Rational& q);
    // Normalizes: sorts, merges equal exponents, drops zeros and terms >= trunc.
    static Scalar from_terms(std::vector<Term> terms, Trunc trunc = std::nullopt);
    // A scalar known to be O(t^trunc) with nothing known below.
    static Scalar big_o(const Rational& trunc);

    const std::vector<Term>& terms() const { return terms_; }
    const Trunc& trunc() const { return trunc_; }

    bool is_exact() const { return !trunc_.has_value(); }
    bool is_exact_zero() const { return terms_.empty() && !trunc_; }
    // The leading term is known (or the element is exactly zero).
    bool is_determinate() const { return !terms_.empty() || !trunc_; }

    // Least exponent of a known term.
    std::optional<Rational> valuation() const;
    // Lower bound for v(x); nullopt stands for +infinity (exact zero).
    std::optional<Rational> valuation_lower_bound() const;

    // Throws IndeterminateMag when all known terms vanish and trunc is finite.
    Mag mag() const;
    // |x| when determinate, 2^(-trunc) otherwise.
    Mag mag_upper_bound() const;

    Scalar truncated(const Rational& order) const;
    Scalar truncated(const Trunc& order) const { return order ? truncated(*order) : *this; }
    // Like truncated, but an exact scalar with no terms at or above `order` stays exact.
    Scalar capped(const Rational& order) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar scaled(const mpq_class& c) const;
    // Multiply by t^q.
    Scalar shifted(const Rational& q) const;
    Scalar pow(unsigned k) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    std::vector<Term> terms_;
    Trunc trunc_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

Mag mag(const Scalar& x);

// x / y with the result certified below min(order, what the inputs allow).
// A single-term divisor is applied termwise and `order` is not imposed.
Scalar divide(const Scalar& x, const Scalar& y, const Scalar::Trunc& order);

// 1 / x expanded as a geometric series and truncated at `order`.
Scalar inv(const Scalar& x, const Scalar::Trunc& order);

// Canonical witness of a magnitude: t^q for 2^(-q), exact zero for the zero mag.
Scalar sample_point(const Mag& m);

} // namespace nadisk
