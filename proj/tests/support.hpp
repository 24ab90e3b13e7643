#pragma once

#include "doctest.h"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nadisk/error.hpp"
#include "nadisk/random.hpp"
#include "nadisk/scalar.hpp"

namespace testsupport {

using nadisk::Rational;
using nadisk::Scalar;

inline Rational R(const char* s) { return Rational::parse(s); }

// Exact scalar from (exponent, coefficient) string pairs.
inline Scalar S(std::vector<std::pair<const char*, const char*>> terms, const char* trunc = nullptr) {
    std::vector<nadisk::Term> ts;
    for (auto& [q, a] : terms) ts.push_back({Rational::parse(q), mpq_class(a)});
    Scalar::Trunc tr;
    if (trunc) tr = Rational::parse(trunc);
    return Scalar::from_terms(std::move(ts), tr);
}

inline Scalar T(const char* q) { return Scalar::monomial(1, Rational::parse(q)); }

// Random scalar: up to `n` terms with exponents in [lo, lo + 4], small coefficients.
inline Scalar random_scalar(nadisk::Rng& rng, const Rational& lo, int n = 3) {
    std::vector<nadisk::Term> ts;
    int k = static_cast<int>(rng.uniform(1, n));
    for (int i = 0; i < k; ++i) ts.push_back({rng.exponent(lo, lo + Rational(4)), mpq_class(rng.coeff())});
    return Scalar::from_terms(std::move(ts));
}

// Kind of the nadisk::Error thrown by fn; fails the test when nothing is thrown.
inline nadisk::ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const nadisk::Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return nadisk::ErrorKind::InvalidArgument;
}

} // namespace testsupport
