#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nadisk/mag.hpp"
#include "nadisk/scalar.hpp"

namespace nadisk {

// f(z) = sum a_n z^n with a_0..a_N known (each possibly truncated) and
// |a_n| <= tail for n > N. An absent or zero tail means f is a polynomial.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Scalar> coeffs, std::optional<Mag> tail = std::nullopt);

    static PowerSeries constant(const Scalar& a) { return PowerSeries({a}); }
    // The monomial a z^n.
    static PowerSeries monomial(const Scalar& a, std::size_t n);

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const std::optional<Mag>& tail() const { return tail_; }
    bool is_polynomial() const { return !tail_; }
    // Index of the last stored coefficient (-1 when none are stored).
    std::int64_t last_index() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }
    // a_n, or exact zero beyond the stored range of a polynomial.
    Scalar coeff(std::size_t n) const;

    bool is_exact_zero() const;

    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
    PowerSeries scaled(const Scalar& c) const;
    // z^k f
    PowerSeries shifted(std::size_t k) const;
    // Every coefficient capped at `order` (see Scalar::capped).
    PowerSeries truncated_coeffs(const Rational& order) const;

    friend bool operator==(const PowerSeries& f, const PowerSeries& g);

    std::string str() const;

private:
    void normalize();

    std::vector<Scalar> coeffs_;
    std::optional<Mag> tail_;
};

// Known coefficient mags: (index, valuation) for every determinate nonzero a_n.
std::vector<std::pair<std::int64_t, Rational>> coefficient_points(const PowerSeries& f);

struct GaussNorm {
    Mag value;
    bool certified; // false: `value` is only a lower bound
};

GaussNorm gauss_norm(const PowerSeries& f);

// Data of f at one radius r = 2^(-rho): M_r(f) = max |a_n| r^n and the least
// and greatest indices attaining it.
struct RadiusData {
    Rational rho;
    Mag max_term = Mag::one();
    std::int64_t mu = 0;
    std::int64_t nu = 0;
    bool certified = false;
    std::int64_t count() const { return nu - mu; }
};

RadiusData at_radius(const PowerSeries& f, const Mag& r);

struct CriticalRadius {
    Mag radius = Mag::one();
    std::int64_t mu = 0;
    std::int64_t nu = 0;
    bool certified = false;
    std::int64_t count() const { return nu - mu; }
};

struct NewtonData {
    std::vector<std::pair<std::int64_t, Rational>> vertices;
    std::vector<CriticalRadius> radii; // increasing, all < 1
    // false when an indeterminate coefficient left of the first vertex could
    // add radii below the first listed one
    bool complete_below = true;
};

NewtonData newton(const PowerSeries& f);

enum class Region { Circle, ClosedDisk, OpenDisk };

std::int64_t count_zeros(const PowerSeries& f, Region region, const Mag& r);

// Taylor shift: the series in w = z - z0. Coefficients are capped at `order`
// when given; the tail bound is carried over.
PowerSeries translate(const PowerSeries& f, const Scalar& z0, const std::optional<Rational>& order = std::nullopt);
// Taylor shift tuned for reading Newton data at radius r: the m-th coefficient
// is kept below level - m*v(r), so every b_m r^m is known below t^level.
PowerSeries translate_at(const PowerSeries& f, const Scalar& z0, const Rational& level, const Mag& r);

// f(z0) by Horner's rule.
Scalar evaluate(const PowerSeries& f, const Scalar& z0);

// sup of |f| over the closed disk D+(center, r).
Mag disk_norm(const PowerSeries& f, const Scalar& center, const Mag& r);
Mag point_mag(const PowerSeries& f, const Scalar& z0);

// M_R(f) / R^m with R = |center| and m the zero count on C(0, R).
Mag xi_prefactor(const PowerSeries& f, const Scalar& center);
Mag xi(const PowerSeries& f, const Scalar& center, const Mag& r);

// Unit value |f(0)| after removing z^origin_order, and zeros in the punctured disk.
struct ZeroProfile {
    Mag unit_mag = Mag::one();
    std::int64_t origin_order = 0;
    std::vector<std::pair<Scalar, std::int64_t>> zeros;
};

PowerSeries zp_to_series(const ZeroProfile& p);
Mag zp_circle_value(const ZeroProfile& p, const Scalar& z);
// Definition-side xi: r^(zeros within r of center) times the distances to the
// other zeros on the circle C(0, |center|).
Mag zp_xi(const ZeroProfile& p, const Scalar& center, const Mag& r);
Mag zp_gauss_norm(const ZeroProfile& p);

} // namespace nadisk
