#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nadisk/mag.hpp"
#include "nadisk/rational.hpp"

namespace nadisk {

// A real number sum c_i * 2^(x_i) with rational c_i and x_i. Sums of
// magnitudes are not magnitudes, so comparisons between them go through
// this type. The sign is decided exactly: a zero test by grouping terms on the
// fractional part of x_i (the numbers 2^(r/D), 0 <= r < D, are linearly
// independent over Q), then MPFR interval evaluation refined until decided.
class MagSum {
public:
    struct Term {
        mpq_class coeff;
        Rational exp; // the term is coeff * 2^exp
    };

    MagSum() = default;
    explicit MagSum(const mpq_class& c) { add_rational(c); }
    static MagSum of(const Mag& m) { return MagSum().add(m); }

    // += c * m; the zero mag contributes nothing.
    MagSum& add(const Mag& m, const mpq_class& c = 1);
    MagSum& add_pow2(const Rational& x, const mpq_class& c);
    MagSum& add_rational(const mpq_class& c) { return add_pow2(Rational(0), c); }
    MagSum& add(const MagSum& o, const mpq_class& c = 1);

    MagSum operator-() const;
    friend MagSum operator+(MagSum a, const MagSum& b) { return a.add(b); }
    friend MagSum operator-(MagSum a, const MagSum& b) { return a.add(b, -1); }
    MagSum scaled(const mpq_class& c) const;

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const;
    int sign() const;
    double to_double() const;
    std::string str() const;

private:
    std::vector<Term> terms_;
};

// -1, 0, +1 for a < b, a == b, a > b.
int compare(const MagSum& a, const MagSum& b);

} // namespace nadisk
