#include "doctest.h"

#include <map>

#include "nadisk/corpus.hpp"
#include "nadisk/error.hpp"
#include "nadisk/mag_sum.hpp"
#include "nadisk/series.hpp"
#include "support.hpp"

using namespace nadisk;
using namespace testsupport;

namespace {

PowerSeries poly(std::vector<Scalar> c) { return PowerSeries(std::move(c)); }

// (1 - z/t)(1 - z/t^(1/2))
PowerSeries two_zero_fixture() {
    PowerSeries a = poly({Scalar(1L), -T("-1")});
    PowerSeries b = poly({Scalar(1L), -T("-1/2")});
    return a * b;
}

mpz_class binom(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Oracle: sum a_n z^n with explicit powers.
Scalar naive_eval(const PowerSeries& f, const Scalar& z) {
    Scalar s;
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) s += f[n] * z.pow(static_cast<unsigned>(n));
    return s;
}

// Oracle: critical radii by brute force over index pairs and a max over all terms.
std::map<Rational, std::int64_t> brute_newton(const PowerSeries& f) {
    auto pts = coefficient_points(f);
    std::map<Rational, std::int64_t> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rational rho = (pts[i].second - pts[j].second) / Rational(pts[j].first - pts[i].first);
            if (rho.sign() <= 0 || out.count(rho)) continue;
            std::optional<Rational> best;
            std::int64_t mu = 0, nu = 0;
            for (const auto& [n, q] : pts) {
                Rational v = q + Rational(n) * rho;
                if (!best || v < *best) { best = v; mu = nu = n; }
                else if (v == *best) nu = n;
            }
            if (nu > mu) out[rho] = nu - mu;
        }
    }
    return out;
}

} // namespace

TEST_CASE("gauss norm examples") {
    CHECK(gauss_norm(poly({Scalar(1L), Scalar(1L)})).value == Mag::one());
    CHECK(gauss_norm(two_zero_fixture()).value == mag2(Rational(-3, 2)));
    CHECK(gauss_norm(PowerSeries()).value == Mag::zero());
    auto g = gauss_norm(PowerSeries({Scalar(1L)}, mag2(-1)));
    CHECK(g.value == Mag::one());
    CHECK_FALSE(g.certified);
}

TEST_CASE("newton examples") {
    NewtonData a = newton(poly({Scalar(1L), -T("-1/2")}));
    REQUIRE(a.radii.size() == 1);
    CHECK(a.radii[0].radius == mag2(Rational(1, 2)));
    CHECK(a.radii[0].mu == 0);
    CHECK(a.radii[0].nu == 1);
    CHECK(newton(poly({Scalar(1L), Scalar(1L)})).radii.empty());
    NewtonData b = newton(two_zero_fixture());
    REQUIRE(b.radii.size() == 2);
    CHECK(b.radii[0].radius == mag2(1));
    CHECK(b.radii[1].radius == mag2(Rational(1, 2)));
    CHECK(b.radii[0].count() == 1);
    CHECK(b.radii[1].count() == 1);
    CHECK(b.radii[0].nu == b.radii[1].mu);
    CHECK_THROWS_AS(newton(PowerSeries()), Error);
}

TEST_CASE("newton certification with a tail") {
    // 1 - z/t^(1/2) plus unknown terms |a_n| <= 1 for n >= 2
    PowerSeries f({Scalar(1L), -T("-1/2")}, Mag::one());
    NewtonData nd = newton(f);
    REQUIRE(nd.radii.size() == 1);
    // tail at 2^(-1/2): 2^(-1) < M = 1, certified
    CHECK(nd.radii[0].certified);
    CHECK(count_zeros(f, Region::Circle, mag2(Rational(1, 2))) == 1);
    // near 1 the tail can compete
    PowerSeries g({Scalar(1L), -T("-1/2")}, mag2(-3));
    CHECK_FALSE(newton(g).radii[0].certified);
    CHECK_THROWS_AS(count_zeros(g, Region::Circle, mag2(Rational(1, 2))), Error);
    // an unknown constant term leaves small radii open
    PowerSeries h({Scalar::big_o(5), T("1")});
    CHECK_FALSE(newton(h).complete_below);
}

TEST_CASE("count zeros regions") {
    PowerSeries f = poly({Scalar(1L), -T("-1/2")});
    CHECK(count_zeros(f, Region::Circle, mag2(Rational(1, 2))) == 1);
    CHECK(count_zeros(f, Region::OpenDisk, mag2(Rational(1, 2))) == 0);
    CHECK(count_zeros(f, Region::ClosedDisk, mag2(Rational(1, 2))) == 1);
    CHECK(count_zeros(poly({Scalar(1L)}), Region::ClosedDisk, mag2(1)) == 0);
}

TEST_CASE("translate examples") {
    PowerSeries z = poly({Scalar(), Scalar(1L)});
    CHECK(translate(z, T("1/2")) == poly({T("1/2"), Scalar(1L)}));
    PowerSeries z2 = poly({Scalar(), Scalar(), Scalar(1L)});
    CHECK(translate(z2, T("1")) == poly({T("2"), T("1").scaled(2), Scalar(1L)}));
    PowerSeries f = poly({Scalar(1L), -T("-1/2")});
    PowerSeries h = translate(f, T("1/2"));
    CHECK(h[0].is_exact_zero());
    CHECK(h == poly({Scalar(), -T("-1/2")}));
    CHECK_THROWS_AS(translate(f, Scalar(1L)), Error);
}

TEST_CASE("disk norm, point mag and xi examples") {
    PowerSeries z = poly({Scalar(), Scalar(1L)});
    CHECK(disk_norm(z, Scalar(), mag2(3)) == mag2(3));
    CHECK(disk_norm(two_zero_fixture(), Scalar(), mag2(Rational(1, 4))) == mag2(-1));
    PowerSeries f = poly({Scalar(1L), -T("-1/2")});
    CHECK(disk_norm(f, T("1/2"), mag2(2)) == mag2(Rational(3, 2)));
    CHECK(point_mag(f, T("1/2")) == Mag::zero());
    CHECK(point_mag(poly({Scalar(1L), Scalar(1L)}), Scalar()) == Mag::one());
    CHECK(point_mag(two_zero_fixture(), T("1/3")) == mag2(Rational(-5, 6)));
    CHECK(xi(poly({Scalar(1L)}), T("1/2"), mag2(3)) == Mag::one());
    // center t^(1/2)(1+t): the zero t^(1/2) is at distance 2^(-3/2)
    Scalar c = T("1/2") * (Scalar(1L) + T("1"));
    CHECK(xi(f, c, mag2(3)) == mag2(Rational(3, 2)));
    ZeroProfile p{Mag::one(), 0, {{T("1/2"), 1}}};
    CHECK(zp_xi(p, c, mag2(3)) == mag2(Rational(3, 2)));
    // one zero at distance 2^(-2) > r
    Scalar w = T("1/2") + T("2");
    PowerSeries g = zp_to_series({Mag::one(), 0, {{w, 1}}});
    CHECK(xi(g, T("1/2"), mag2(3)) == mag2(2));
}

TEST_CASE("zero profile examples") {
    ZeroProfile p{Mag::one(), 0, {{T("1/2"), 1}}};
    CHECK(zp_to_series(p) == poly({Scalar(1L), -T("-1/2")}));
    ZeroProfile q{Mag::one(), 0, {{T("1"), 1}, {T("1/2"), 1}}};
    CHECK(zp_to_series(q) == two_zero_fixture());
    ZeroProfile d{Mag::one(), 0, {{T("1"), 2}}};
    NewtonData nd = newton(zp_to_series(d));
    REQUIRE(nd.radii.size() == 1);
    CHECK(nd.radii[0].radius == mag2(1));
    CHECK(nd.radii[0].count() == 2);
    CHECK(zp_circle_value(p, T("1/3")) == mag2(Rational(-1, 6)));
    CHECK(zp_circle_value(ZeroProfile{}, T("1/3")) == Mag::one());
    Scalar z = T("1/2") + T("1");
    CHECK(zp_circle_value(q, z) == Mag::one());
    CHECK(point_mag(zp_to_series(q), z) == Mag::one());
}

TEST_CASE("origin zeros") {
    ZeroProfile p{mag2(1), 2, {{T("1/2"), 1}}};
    PowerSeries f = zp_to_series(p);
    CHECK(f[0].is_exact_zero());
    CHECK(count_zeros(f, Region::ClosedDisk, mag2(1)) == 2);
    CHECK(count_zeros(f, Region::ClosedDisk, mag2(Rational(1, 2))) == 3);
    Scalar c = T("1/2") + T("3/2");
    CHECK(xi(f, c, mag2(2)) == zp_xi(p, c, mag2(2)));
    CHECK(point_mag(f, c) == zp_circle_value(p, c));
}

TEST_CASE("random profiles: newton, gauss norm, evaluation, translation") {
    Rng rng(21);
    for (int it = 0; it < 120; ++it) {
        ZeroProfile p = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 6)));
        PowerSeries f = zp_to_series(p);
        // Newton against brute force and against the profile
        NewtonData nd = newton(f);
        auto brute = brute_newton(f);
        std::map<Rational, std::int64_t> from_profile;
        for (const auto& [w, m] : p.zeros) from_profile[*w.valuation()] += m;
        std::map<Rational, std::int64_t> got;
        for (const auto& c : nd.radii) {
            CHECK(c.certified);
            got[c.radius.exponent()] = c.count();
        }
        CHECK(got == brute);
        CHECK(got == from_profile);
        for (std::size_t i = 0; i + 1 < nd.radii.size(); ++i) CHECK(nd.radii[i].nu == nd.radii[i + 1].mu);
        CHECK(gauss_norm(f).value == zp_gauss_norm(p));
        // evaluation and translation against explicit sums
        Scalar z0 = corpus::random_point(rng, p);
        CHECK(evaluate(f, z0) == naive_eval(f, z0));
        PowerSeries h = translate(f, z0);
        for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
            Scalar b;
            for (std::size_t n = m; n < f.coeffs().size(); ++n)
                b += f[n].scaled(mpq_class(binom(static_cast<long>(n), static_cast<long>(m)))) *
                     z0.pow(static_cast<unsigned>(n - m));
            CHECK(h.coeff(m) == b);
        }
        CHECK(point_mag(f, z0) == zp_circle_value(p, z0));
    }
}

TEST_CASE("translated tail bound covers the truncated part") {
    Rng rng(22);
    for (int it = 0; it < 40; ++it) {
        ZeroProfile p = corpus::random_profile(rng, 5);
        PowerSeries full = zp_to_series(p);
        std::size_t keep = static_cast<std::size_t>(rng.uniform(1, full.last_index()));
        std::vector<Scalar> head(full.coeffs().begin(), full.coeffs().begin() + static_cast<long>(keep));
        Mag tail = Mag::zero();
        for (std::size_t n = keep; n < full.coeffs().size(); ++n) tail = std::max(tail, mag(full[n]));
        PowerSeries trunc(head, tail);
        Scalar z0 = corpus::random_point(rng, p);
        PowerSeries ht = translate(trunc, z0);
        PowerSeries hf = translate(full, z0);
        for (std::size_t m = 0; m < ht.coeffs().size(); ++m) {
            // the known part of the truncated translate must agree with the full one
            Scalar diff = hf.coeff(m) - ht[m];
            REQUIRE(ht[m].trunc());
            CHECK(diff.is_determinate() == false);
        }
    }
}

TEST_CASE("disk norm multiplicativity on random pairs") {
    Rng rng(23);
    for (int it = 0; it < 60; ++it) {
        ZeroProfile p = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 4)));
        ZeroProfile q = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 4)));
        PowerSeries f = zp_to_series(p), g = zp_to_series(q);
        Scalar c = corpus::random_point(rng, p);
        Mag r = mag2(*c.valuation() + rng.exponent(0, 2));
        CHECK(disk_norm(f * g, c, r) == disk_norm(f, c, r) * disk_norm(g, c, r));
    }
}

TEST_CASE("xi: coefficient side equals definition side") {
    Rng rng(24);
    for (int it = 0; it < 150; ++it) {
        ZeroProfile p = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 6)));
        PowerSeries f = zp_to_series(p);
        Scalar c = corpus::random_point(rng, p);
        if (c.is_exact_zero()) continue;
        Mag r = mag2(*c.valuation() + rng.exponent(Rational(1, 6), 3));
        Mag x = xi(f, c, r);
        CHECK(x == zp_xi(p, c, r));
        CHECK(disk_norm(f, c, r) == xi_prefactor(f, c) * x);
    }
}

TEST_CASE("mag sums decide signs exactly") {
    MagSum a;
    a.add_pow2(Rational(1, 2), 2).add_pow2(Rational(3, 2), -1);
    CHECK(a.is_zero());
    CHECK(a.sign() == 0);
    MagSum b;
    b.add_pow2(Rational(1, 2), 1).add_rational(mpq_class(-1414213, 1000000));
    CHECK(b.sign() == 1);
    MagSum c;
    c.add_pow2(Rational(1, 2), 1).add_rational(mpq_class(-1414214, 1000000));
    CHECK(c.sign() == -1);
    MagSum d;
    d.add_pow2(Rational(1, 3), 1).add_pow2(Rational(1, 2), 1).add_pow2(Rational(5, 6), -1);
    CHECK(d.sign() == 1);
    CHECK(compare(MagSum::of(mag2(1)), MagSum(mpq_class(1, 2))) == 0);
}

TEST_CASE("no zeros in the open disk means constant norm") {
    Rng rng(25);
    for (int it = 0; it < 80; ++it) {
        ZeroProfile p = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 5)));
        PowerSeries f = zp_to_series(p);
        Scalar c = corpus::random_point(rng, p);
        Mag r = mag2(*c.valuation() + rng.exponent(0, 2));
        if (count_zeros(translate(f, c), Region::OpenDisk, r) != 0) continue;
        Mag s = mag2(r.exponent() + rng.exponent(Rational(1, 6), 2));
        CHECK(disk_norm(f, c, s) == point_mag(f, c));
    }
}
