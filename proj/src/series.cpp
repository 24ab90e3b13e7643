#include "nadisk/series.hpp"

#include <algorithm>
#include <sstream>

#include "nadisk/error.hpp"

namespace nadisk {

namespace {

// 2^(-q) as a bound on an unknown scalar: O(t^q).
Scalar unknown_bounded_by(const Mag& m) {
    if (m.is_zero()) return Scalar();
    return Scalar::big_o(m.exponent());
}

Mag norm_upper_bound(const PowerSeries& f) {
    Mag best = Mag::zero();
    for (const auto& a : f.coeffs()) best = std::max(best, a.mag_upper_bound());
    if (f.tail()) best = std::max(best, *f.tail());
    return best;
}

// Indeterminate coefficients (nothing known below trunc) with their index.
std::vector<std::pair<std::int64_t, Rational>> unknown_points(const PowerSeries& f) {
    std::vector<std::pair<std::int64_t, Rational>> out;
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        const Scalar& a = f[n];
        if (!a.is_determinate()) out.emplace_back(static_cast<std::int64_t>(n), *a.trunc());
    }
    return out;
}

bool has_tail(const PowerSeries& f) { return f.tail() && !f.tail()->is_zero(); }

// Exponent of the largest possible |a_n| r^n over the tail, or nullopt when the
// tail is absent. For rho < 0 the tail is unbounded at r and `unbounded` is set.
std::optional<Rational> tail_exponent(const PowerSeries& f, const Rational& rho, bool& unbounded) {
    unbounded = false;
    if (!has_tail(f)) return std::nullopt;
    if (rho.sign() < 0) {
        unbounded = true;
        return std::nullopt;
    }
    return f.tail()->exponent() + Rational(f.last_index() + 1) * rho;
}

struct SupData {
    Mag value;
    bool certified;
};

// max |a_n| r^n with certification that no unknown part can exceed it.
SupData sup_at_radius(const PowerSeries& f, const Mag& r) {
    const Rational rho = r.exponent();
    std::optional<Rational> best;
    for (const auto& [n, q] : coefficient_points(f)) {
        Rational v = q + Rational(n) * rho;
        if (!best || v < *best) best = v;
    }
    bool unbounded = false;
    auto te = tail_exponent(f, rho, unbounded);
    if (!best) {
        if (unknown_points(f).empty() && !has_tail(f)) return {Mag::zero(), true};
        return {Mag::zero(), false};
    }
    bool ok = !unbounded;
    for (const auto& [n, b] : unknown_points(f))
        if (b + Rational(n) * rho < *best) ok = false;
    if (te && *te < *best) ok = false;
    return {Mag::from_exponent(*best), ok};
}

} // namespace

PowerSeries::PowerSeries(std::vector<Scalar> coeffs, std::optional<Mag> tail)
    : coeffs_(std::move(coeffs)), tail_(std::move(tail)) {
    normalize();
}

void PowerSeries::normalize() {
    if (tail_ && tail_->is_zero()) tail_.reset();
    if (!tail_) {
        while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
    }
}

PowerSeries PowerSeries::monomial(const Scalar& a, std::size_t n) {
    std::vector<Scalar> c(n + 1);
    c[n] = a;
    return PowerSeries(std::move(c));
}

Scalar PowerSeries::coeff(std::size_t n) const {
    if (n < coeffs_.size()) return coeffs_[n];
    if (!tail_) return Scalar();
    return unknown_bounded_by(*tail_);
}

bool PowerSeries::is_exact_zero() const { return coeffs_.empty() && !tail_; }

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    std::vector<Scalar> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = f.coeff(i) + g.coeff(i);
    std::optional<Mag> tail;
    if (f.tail_ || g.tail_) tail = std::max(f.tail_.value_or(Mag::zero()), g.tail_.value_or(Mag::zero()));
    return PowerSeries(std::move(c), tail);
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + g.scaled(Scalar(-1L)); }

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    if (f.is_exact_zero() || g.is_exact_zero()) return PowerSeries();
    std::size_t len = f.coeffs_.size() + g.coeffs_.size() - 1;
    if (f.tail_) len = std::min(len, f.coeffs_.size());
    if (g.tail_) len = std::min(len, g.coeffs_.size());
    std::vector<Scalar> c(len);
    for (std::size_t i = 0; i < f.coeffs_.size() && i < len; ++i) {
        if (f.coeffs_[i].is_exact_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size() && i + j < len; ++j) {
            if (g.coeffs_[j].is_exact_zero()) continue;
            c[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
    }
    std::optional<Mag> tail;
    if (f.tail_ || g.tail_) tail = norm_upper_bound(f) * norm_upper_bound(g);
    return PowerSeries(std::move(c), tail);
}

PowerSeries PowerSeries::scaled(const Scalar& c) const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    std::optional<Mag> tail;
    if (tail_) tail = *tail_ * c.mag_upper_bound();
    return PowerSeries(std::move(out), tail);
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
    if (is_exact_zero()) return *this;
    std::vector<Scalar> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return PowerSeries(std::move(out), tail_);
}

PowerSeries PowerSeries::truncated_coeffs(const Rational& order) const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a.capped(order));
    return PowerSeries(std::move(out), tail_);
}

bool operator==(const PowerSeries& f, const PowerSeries& g) {
    if (f.tail_ != g.tail_ || f.coeffs_.size() != g.coeffs_.size()) return false;
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        if (!(f.coeffs_[i] == g.coeffs_[i])) return false;
    return true;
}

std::string PowerSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n].is_exact_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[n].str() << ")";
        if (n == 1) os << "*z";
        if (n > 1) os << "*z^" << n;
    }
    if (tail_) {
        if (!first) os << " + ";
        os << "[|a_n| <= " << tail_->str() << " for n > " << last_index() << "]";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

std::vector<std::pair<std::int64_t, Rational>> coefficient_points(const PowerSeries& f) {
    std::vector<std::pair<std::int64_t, Rational>> out;
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        auto v = f[n].valuation();
        if (v) out.emplace_back(static_cast<std::int64_t>(n), *v);
    }
    return out;
}

GaussNorm gauss_norm(const PowerSeries& f) {
    auto pts = coefficient_points(f);
    auto unknown = unknown_points(f);
    if (pts.empty()) {
        if (unknown.empty() && !has_tail(f)) return {Mag::zero(), true};
        throw Error(ErrorKind::IndeterminateMag, "no coefficient has a determinate magnitude");
    }
    Rational best = pts.front().second;
    for (const auto& p : pts) best = min(best, p.second);
    bool ok = true;
    for (const auto& u : unknown)
        if (u.second < best) ok = false;
    if (has_tail(f) && f.tail()->exponent() < best) ok = false;
    return {Mag::from_exponent(best), ok};
}

RadiusData at_radius(const PowerSeries& f, const Mag& r) {
    if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
    if (f.is_exact_zero()) throw Error(ErrorKind::ZeroSeries, "the zero series has no Newton data");
    const Rational rho = r.exponent();
    auto pts = coefficient_points(f);
    if (pts.empty()) throw Error(ErrorKind::IndeterminateMag, "no coefficient has a determinate magnitude");
    RadiusData d;
    d.rho = rho;
    std::optional<Rational> best;
    for (const auto& [n, q] : pts) {
        Rational v = q + Rational(n) * rho;
        if (!best || v < *best) {
            best = v;
            d.mu = d.nu = n;
        } else if (v == *best) {
            d.nu = n;
        }
    }
    d.max_term = Mag::from_exponent(*best);
    bool ok = true;
    for (const auto& [n, b] : unknown_points(f)) {
        Rational v = b + Rational(n) * rho;
        bool strict = n < d.mu || n > d.nu;
        if (strict ? !(v > *best) : v < *best) ok = false;
    }
    bool unbounded = false;
    auto te = tail_exponent(f, rho, unbounded);
    if (unbounded || (te && !(*te > *best))) ok = false;
    d.certified = ok;
    return d;
}

NewtonData newton(const PowerSeries& f) {
    if (f.is_exact_zero()) throw Error(ErrorKind::ZeroSeries, "the zero series has no Newton polygon");
    auto pts = coefficient_points(f);
    if (pts.empty()) throw Error(ErrorKind::IndeterminateMag, "no coefficient has a determinate magnitude");
    NewtonData nd;
    // lower convex hull, dropping collinear interior points
    auto& h = nd.vertices;
    for (const auto& p : pts) {
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h.back();
            // remove b unless it lies strictly below segment a-p
            Rational lhs = (b.second - a.second) * Rational(p.first - a.first);
            Rational rhs = (p.second - a.second) * Rational(b.first - a.first);
            if (lhs >= rhs) h.pop_back();
            else break;
        }
        h.push_back(p);
    }
    for (const auto& u : unknown_points(f))
        if (u.first < pts.front().first) nd.complete_below = false;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        Rational slope = (h[i + 1].second - h[i].second) / Rational(h[i + 1].first - h[i].first);
        if (slope.sign() >= 0) continue; // radius >= 1
        Mag radius = Mag::from_exponent(-slope);
        RadiusData d = at_radius(f, radius);
        nd.radii.push_back({radius, d.mu, d.nu, d.certified});
    }
    return nd;
}

std::int64_t count_zeros(const PowerSeries& f, Region region, const Mag& r) {
    if (!(r < Mag::one())) throw Error(ErrorKind::InvalidArgument, "zero counts are for radii below 1");
    if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "radius must be positive");
    if (f.is_exact_zero()) throw Error(ErrorKind::ZeroSeries, "the zero series has no zero count");
    RadiusData d = at_radius(f, r);
    if (!d.certified) throw Error(ErrorKind::UncertifiedRadius, "zero count at " + r.str() + " depends on unknown terms");
    switch (region) {
    case Region::Circle: return d.nu - d.mu;
    case Region::ClosedDisk: return d.nu;
    case Region::OpenDisk: return d.mu;
    }
    return 0;
}

namespace {

template <class Cap>
PowerSeries shift(const PowerSeries& f, const Scalar& z0, Cap cap) {
    if (z0.is_exact_zero()) {
        std::vector<Scalar> c;
        for (std::size_t m = 0; m < f.coeffs().size(); ++m) c.push_back(cap(f[m], m));
        return PowerSeries(std::move(c), f.tail());
    }
    auto lb = z0.valuation_lower_bound();
    if (!(lb->sign() > 0)) throw Error(ErrorKind::CenterOutsideDisk, "center " + z0.str() + " is not in the unit disk");
    std::vector<Scalar> b;
    for (std::size_t m = 0; m < f.coeffs().size(); ++m) b.push_back(cap(f[m], m));
    const std::size_t n = b.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            if (b[j + 1].is_exact_zero()) continue;
            b[j] = cap(b[j] + b[j + 1] * z0, j);
        }
    }
    if (has_tail(f)) {
        const Rational g = f.tail()->exponent();
        for (std::size_t m = 0; m < n; ++m) {
            Rational bound = g + Rational(static_cast<std::int64_t>(n - m)) * *lb;
            b[m] = cap(b[m] + Scalar::big_o(bound), m);
        }
    }
    return PowerSeries(std::move(b), f.tail());
}

} // namespace

PowerSeries translate(const PowerSeries& f, const Scalar& z0, const std::optional<Rational>& order) {
    return shift(f, z0, [&](const Scalar& a, std::size_t) { return order ? a.capped(*order) : a; });
}

PowerSeries translate_at(const PowerSeries& f, const Scalar& z0, const Rational& level, const Mag& r) {
    if (r.is_zero()) return translate(f, z0, level);
    const Rational q = r.exponent();
    return shift(f, z0, [&](const Scalar& a, std::size_t m) {
        return a.capped(level - Rational(static_cast<std::int64_t>(m)) * q);
    });
}

Scalar evaluate(const PowerSeries& f, const Scalar& z0) {
    Scalar acc;
    for (std::size_t n = f.coeffs().size(); n-- > 0;) acc = acc * z0 + f[n];
    if (has_tail(f)) {
        auto lb = z0.valuation_lower_bound();
        if (lb && !(lb->sign() > 0)) throw Error(ErrorKind::CenterOutsideDisk, "series tail needs |z0| < 1");
        if (lb) acc += Scalar::big_o(f.tail()->exponent() + Rational(f.last_index() + 1) * *lb);
        // z0 == 0: the tail does not reach the constant term
    }
    return acc;
}

Mag point_mag(const PowerSeries& f, const Scalar& z0) {
    if (!z0.is_exact_zero() && !(z0.valuation_lower_bound()->sign() > 0))
        throw Error(ErrorKind::CenterOutsideDisk, "point " + z0.str() + " is not in the unit disk");
    return mag(evaluate(f, z0));
}

Mag disk_norm(const PowerSeries& f, const Scalar& center, const Mag& r) {
    if (r.is_zero()) return point_mag(f, center);
    if (!(r < Mag::one())) throw Error(ErrorKind::InvalidArgument, "disk radius must be below 1");
    PowerSeries h = translate(f, center);
    SupData s = sup_at_radius(h, r);
    if (!s.certified) throw Error(ErrorKind::UncertifiedRadius, "disk norm at " + r.str() + " depends on unknown terms");
    return s.value;
}

Mag xi_prefactor(const PowerSeries& f, const Scalar& center) {
    Mag big_r = mag(center);
    if (big_r.is_zero() || !(big_r < Mag::one()))
        throw Error(ErrorKind::InvalidArgument, "center must satisfy 0 < |center| < 1");
    RadiusData d = at_radius(f, big_r);
    if (!d.certified) throw Error(ErrorKind::UncertifiedRadius, "Newton data at " + big_r.str() + " is not certified");
    return d.max_term / big_r.pow(d.count());
}

Mag xi(const PowerSeries& f, const Scalar& center, const Mag& r) {
    Mag big_r = mag(center);
    if (big_r.is_zero() || !(big_r < Mag::one()))
        throw Error(ErrorKind::InvalidArgument, "center must satisfy 0 < |center| < 1");
    if (!(r < big_r)) throw Error(ErrorKind::InvalidArgument, "disk must lie inside C(0, |center|)");
    RadiusData d = at_radius(f, big_r);
    if (!d.certified) throw Error(ErrorKind::UncertifiedRadius, "Newton data at " + big_r.str() + " is not certified");
    if (d.count() == 0) return Mag::one();
    return disk_norm(f, center, r) * big_r.pow(d.count()) / d.max_term;
}

namespace {

void check_profile(const ZeroProfile& p) {
    if (p.unit_mag.is_zero()) throw Error(ErrorKind::InvalidArgument, "unit value must be nonzero");
    if (p.origin_order < 0) throw Error(ErrorKind::InvalidArgument, "negative origin order");
    for (const auto& [w, m] : p.zeros) {
        if (m <= 0) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
        if (!w.is_exact() || w.is_exact_zero()) throw Error(ErrorKind::InvalidArgument, "zeros must be exact and nonzero");
        if (!(mag(w) < Mag::one())) throw Error(ErrorKind::InvalidArgument, "zeros must lie in the unit disk");
    }
}

} // namespace

PowerSeries zp_to_series(const ZeroProfile& p) {
    check_profile(p);
    // unit_mag / prod |w|^m, realized as a monomial so that |f(0)| = unit_mag
    Mag lead = p.unit_mag;
    for (const auto& [w, m] : p.zeros) lead = lead / mag(w).pow(m);
    PowerSeries f = PowerSeries::constant(sample_point(lead)).shifted(static_cast<std::size_t>(p.origin_order));
    for (const auto& [w, m] : p.zeros) {
        PowerSeries factor({w, Scalar(-1L)});
        for (std::int64_t i = 0; i < m; ++i) f = f * factor;
    }
    return f;
}

Mag zp_circle_value(const ZeroProfile& p, const Scalar& z) {
    check_profile(p);
    Mag az = mag(z);
    Mag v = p.unit_mag * az.pow(p.origin_order);
    for (const auto& [w, m] : p.zeros) {
        Mag aw = mag(w);
        if (aw < az) v *= (az / aw).pow(m);
        else if (aw == az) v *= (mag(z - w) / aw).pow(m);
    }
    return v;
}

Mag zp_xi(const ZeroProfile& p, const Scalar& center, const Mag& r) {
    check_profile(p);
    Mag big_r = mag(center);
    std::int64_t inside = 0;
    Mag far = Mag::one();
    for (const auto& [w, m] : p.zeros) {
        if (mag(w) != big_r) continue;
        Mag d = mag(center - w);
        if (d <= r) inside += m;
        else far *= d.pow(m);
    }
    return r.pow(inside) * far;
}

Mag zp_gauss_norm(const ZeroProfile& p) {
    check_profile(p);
    Mag v = p.unit_mag;
    for (const auto& [w, m] : p.zeros) v = v / mag(w).pow(m);
    return v;
}

} // namespace nadisk
