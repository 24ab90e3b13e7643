#include "nadisk/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "nadisk/error.hpp"

namespace nadisk {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > kMax || n < -kMax || d > kMax) throw std::overflow_error("Rational: exponent overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) return *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
    auto parse_int = [&](std::string_view part) {
        if (!part.empty() && part.front() == '+') part.remove_prefix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw Error(ErrorKind::SchemaError, "malformed rational '" + std::string(s) + "'");
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    std::int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::SchemaError, "zero denominator in '" + std::string(s) + "'");
    return Rational(parse_int(s.substr(0, slash)), d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::int64_t lcm_den(const Rational& a, const Rational& b) { return std::lcm(a.den(), b.den()); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::domain_error("simplest_between: empty interval");
    for (std::int64_t q = 1;; ++q) {
        Rational p = Rational((lo * Rational(q)).floor() + 1);
        Rational cand = p / Rational(q);
        if (cand < hi) return cand;
    }
}

} // namespace nadisk
