#include "doctest.h"

#include "nadisk/corpus.hpp"
#include "nadisk/semlab.hpp"
#include "support.hpp"

using namespace nadisk;
using namespace testsupport;

namespace {

// Definition-side xi for a function whose zeros are exactly `zeros`:
// s^(zeros within s) times the distances to the other zeros on the circle.
Mag xi_oracle(const std::vector<Scalar>& zeros, const Scalar& c, const Mag& s) {
    Mag out = Mag::one();
    for (const auto& w : zeros) {
        if (mag(w) != mag(c)) continue;
        Mag d = mag(c - w);
        out *= d <= s ? s : d;
    }
    return out;
}

std::vector<Scalar> zeros_of(const ZeroProfile& p) {
    std::vector<Scalar> out;
    for (const auto& [w, m] : p.zeros)
        for (std::int64_t i = 0; i < m; ++i) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("regularity product examples") {
    Regularity a = regularity_products({T("1"), T("1") + T("2")}, {1, 1}, 2);
    CHECK(a.products == std::vector<Mag>{mag2(2), mag2(2)});
    // distance t^2 between the centers: both products 2^-2 with unit weights
    Regularity half = regularity_products({T("1/2"), T("1/2") + T("1")}, {1, 1}, 2);
    CHECK(half.products == std::vector<Mag>{mag2(1), mag2(1)});
    Regularity w = regularity_products({T("1/2"), T("1/2") + T("1")}, {1, 2}, 2);
    CHECK(w.products == std::vector<Mag>{mag2(2), mag2(1)});
    std::vector<Scalar> eight;
    for (int c = 1; c <= 8; ++c) eight.push_back(T("1/7").scaled(c));
    Regularity e = regularity_products(eight, std::vector<std::int64_t>(8, 1), 8);
    for (const auto& m : e.products) CHECK(m == mag2(1));
    CHECK(e.running_inf.back() == mag2(1));
    Regularity h = regularity_products(eight, std::vector<std::int64_t>(8, 1), 3);
    CHECK(h.products.size() == 3);
    CHECK(h.products[0] == mag2(Rational(2, 7)));
    CHECK(kind_of([] { regularity_products({T("1"), T("1")}, {1, 1}, 2); }) == ErrorKind::DuplicateCenters);
}

TEST_CASE("stage values") {
    DiskFamily fam({T("2"), T("1"), T("1/2")}, {1, 2, 3}, mag2(3));
    CHECK(fam.radius(1) == mag2(Rational(3, 2)));
    CHECK(fam.radius(2) == mag2(1));
    CHECK(fam.disjoint());
    StageReport one = stage_values(PowerSeries::constant(Scalar(1L)), fam);
    for (const auto& r : one.records) {
        CHECK(r.zeta == Mag::one());
        CHECK(r.xi == Mag::one());
        CHECK(r.count == 0);
    }
    // one zero inside each stage disk: xi_n = r_n
    std::vector<Scalar> zeros{T("2") + T("6"), T("1") + T("2"), T("1/2") + T("3/2")};
    ZeroProfile zp{Mag::one(), 0, {{zeros[0], 1}, {zeros[1], 1}, {zeros[2], 1}}};
    StageReport rep = stage_values(zp_to_series(zp), fam);
    for (std::size_t n = 0; n < 3; ++n) {
        CHECK(rep.records[n].xi == fam.radius(n));
        CHECK(rep.records[n].xi == xi_oracle(zeros, fam.centers()[n], fam.radius(n)));
        CHECK(rep.records[n].count == 1);
        CHECK(rep.records[n].zeta == rep.records[n].prefactor * rep.records[n].xi);
    }
    CHECK(rep.xi_min == mag2(3));
    CHECK(rep.xi_max == mag2(1));
    CHECK(rep.xi_nondecreasing);
    CHECK(kind_of([] { DiskFamily({T("1")}, {1}, mag2(Rational(1, 2))); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { DiskFamily({T("1"), T("2")}, {1, 1}, mag2(3)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("solve radius examples") {
    // zeros at distances 2^-1 and 2^-2 from the center t^(1/2)
    Scalar c = T("1/2");
    ZeroProfile zp{Mag::one(), 0, {{c + T("1"), 1}, {c + T("2"), 1}}};
    PowerSeries f = zp_to_series(zp);
    Mag s = solve_radius(f, c, mag2(Rational(5, 2)));
    CHECK(s == mag2(Rational(3, 2)));
    CHECK(xi(f, c, s) == mag2(Rational(5, 2)));
    ZeroProfile single{Mag::one(), 0, {{c + T("2"), 1}}};
    CHECK(solve_radius(zp_to_series(single), c, mag2(2)) == mag2(2));
    CHECK(kind_of([&] { solve_radius(f, c, mag2(Rational(1, 3))); }) == ErrorKind::TargetOutOfRange);
    CHECK(kind_of([&] { solve_radius(f, c, mag2(4)); }) == ErrorKind::TargetOutOfRange);
    CHECK(kind_of([&] { solve_radius(PowerSeries::constant(Scalar(1L)), c, Mag::one()); }) ==
          ErrorKind::TargetOutOfRange);
}

TEST_CASE("solve radius round trip on random profiles") {
    Rng rng(61);
    int solved = 0;
    for (int it = 0; it < 120; ++it) {
        ZeroProfile p = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 6)));
        PowerSeries f = zp_to_series(p);
        std::vector<Scalar> zs = zeros_of(p);
        const Scalar& w = zs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(zs.size()) - 1))];
        Scalar c = corpus::point_near(rng, w, *w.valuation() + rng.exponent(Rational(1, 6), 2));
        Rational R = *c.valuation();
        Mag s0 = mag2(R + rng.exponent(Rational(1, 6), 3));
        Mag tau = xi_oracle(zs, c, s0);
        Mag s = solve_radius(f, c, tau);
        CHECK(s < mag(c));
        CHECK(s >= s0);
        CHECK(xi(f, c, s) == tau);
        CHECK(xi_oracle(zs, c, s) == tau);
        // largest such radius: anything bigger overshoots
        Mag bigger = mag2(s.exponent() - Rational(1, 12));
        if (bigger < mag(c)) CHECK(xi_oracle(zs, c, bigger) > tau);
        ++solved;
    }
    CHECK(solved == 120);
}

TEST_CASE("curve is monotone and strictly increasing where counts change") {
    std::vector<Scalar> centers{T("2"), T("1")};
    Curve one = curve(PowerSeries::constant(Scalar(1L)), centers, {1, 1}, {mag2(5), mag2(4), mag2(3)});
    for (const auto& row : one.zeta)
        for (const auto& z : row) CHECK(z == Mag::one());
    TestFunction tf = build_test_function(centers, {2, 3}, {mag2(4), mag2(3)});
    std::vector<Mag> grid;
    for (int q = 26; q >= 9; --q) grid.push_back(mag2(Rational(q, 2)));
    Curve c = curve(tf.f, centers, {2, 3}, grid);
    CHECK(c.nondecreasing);
    int changes = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        for (std::size_t n = 0; n < centers.size(); ++n) {
            auto count = [&](const Mag& r) {
                return count_zeros(translate(tf.f, centers[n]), Region::ClosedDisk, mag_pow(r, Rational(1, n == 0 ? 2 : 3)));
            };
            if (count(grid[i - 1]) == count(grid[i])) continue;
            ++changes;
            CHECK(c.zeta[i - 1][n] < c.zeta[i][n]);
        }
    }
    CHECK(changes >= 2);
    Curve single = curve(tf.f, centers, {2, 3}, {mag2(6)});
    CHECK(single.zeta.size() == 1);
    CHECK(kind_of([&] { curve(tf.f, centers, {2, 3}, {mag2(6), mag2(7)}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("test function examples") {
    // two separated centers with unit weights: xi_n = r_n
    std::vector<Scalar> centers{T("2"), T("1")};
    TestFunction tf = build_test_function(centers, {1, 1}, {mag2(4), mag2(3)});
    CHECK(tf.construction.report.all_pass());
    for (int q : {4, 3}) {
        Mag r = mag2(Rational(q) - Rational(1, 2));
        StageReport rep = stage_values(tf.f, DiskFamily(centers, {1, 1}, r));
        for (const auto& rec : rep.records) CHECK(rec.xi == r);
    }
    // weights (2, 1) on one circle: xi_n = r_n^(k_n) times the far factor
    std::vector<Scalar> same{T("1"), T("1").scaled(2)};
    TestFunction w = build_test_function(same, {2, 1}, {mag2(3), mag2(3)});
    CHECK(w.M == mag2(2));
    Mag r = mag2(3);
    StageReport rep = stage_values(w.f, DiskFamily(same, {2, 1}, r));
    CHECK(rep.records[0].xi == r * mag2(1));
    CHECK(rep.records[1].xi == r * mag2(2));
    for (const auto& rec : rep.records) CHECK(rec.xi <= r);
    // a single center reduces to one prescribed zero
    TestFunction s = build_test_function({T("1/2")}, {1}, {mag2(2)});
    CHECK(s.f.last_index() == 1);
    CHECK(evaluate(s.f, T("1/2")).is_exact_zero());
    CHECK(kind_of([] { build_test_function({T("1"), T("1") + T("2")}, {1, 1}, {mag2(2), mag2(2)}); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("test functions satisfy M T <= xi <= r") {
    Rng rng(62);
    for (int it = 0; it < 6; ++it) {
        std::vector<Scalar> centers;
        std::vector<std::int64_t> weights;
        std::vector<Mag> delta;
        int n = static_cast<int>(rng.uniform(2, 4));
        Rational rho = 3;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && rng.coin()) rho = rho - rng.exponent(Rational(1, 2), 1, 2);
            Scalar z = Scalar::monomial(static_cast<long>(i + 1), rho);
            centers.push_back(z);
            weights.push_back(rng.uniform(1, 2));
            delta.push_back(mag2(rho + Rational(3)));
        }
        TestFunction tf = build_test_function(centers, weights, delta);
        REQUIRE(tf.construction.report.all_pass());
        Regularity reg = regularity_products(centers, weights, centers.size());
        CHECK(tf.M == reg.running_inf.back());
        for (int k = 0; k < 4; ++k) {
            // r_n >= delta_n keeps every prescribed zero inside its stage disk
            Rational lo = 0;
            for (std::size_t i = 0; i < centers.size(); ++i)
                lo = max(lo, Rational(weights[i]) * *centers[i].valuation());
            Rational hi = 0;
            for (std::size_t i = 0; i < centers.size(); ++i)
                hi = i == 0 ? Rational(weights[i]) * delta[i].exponent()
                            : min(hi, Rational(weights[i]) * delta[i].exponent());
            if (!(lo < hi)) continue;
            Mag r = mag2(lo + (hi - lo) * Rational(k + 1, 5));
            StageReport rep = stage_values(tf.f, DiskFamily(centers, weights, r));
            Mag bound = tf.M * test_bound_T(centers, weights, r);
            for (const auto& rec : rep.records) {
                CHECK(bound <= rec.xi);
                CHECK(rec.xi <= r);
            }
        }
    }
}

TEST_CASE("disjointify examples") {
    std::vector<Scalar> apart{T("1"), T("1").scaled(2)};
    Disjointified a = disjointify(apart, {mag2(2), mag2(2)});
    CHECK_FALSE(a.changed);
    CHECK(a.centers == apart);
    Disjointified two = disjointify({T("1"), T("1")}, {mag2(2), mag2(2)});
    CHECK(two.changed);
    CHECK(mag(two.centers[0] - two.centers[1]) == mag2(2));
    Disjointified three = disjointify({T("1"), T("1"), T("1")}, {mag2(2), mag2(2), mag2(2)});
    REQUIRE(three.checks.size() == 3);
    for (const auto& pc : three.checks) {
        CHECK(pc.distance == mag2(2));
        CHECK(pc.distance == pc.required);
        CHECK(pc.disjoint());
    }
    for (const auto& w : three.centers) CHECK(mag(w - T("1")) == mag2(2));
}

TEST_CASE("disjointify keeps zeta on random families") {
    Rng rng(63);
    for (int it = 0; it < 25; ++it) {
        ZeroProfile p = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 5)));
        PowerSeries f = zp_to_series(p);
        Rational rho = corpus::profile_circles(p)[0];
        std::vector<Scalar> centers;
        std::vector<Mag> radii;
        Scalar base = corpus::point_on_circle(rng, rho, 1);
        for (int i = 0; i < 3; ++i) {
            centers.push_back(rng.coin() ? base : corpus::point_near(rng, base, rho + rng.exponent(Rational(1, 6), 1)));
            radii.push_back(mag2(rho + rng.exponent(Rational(1, 6), 1)));
        }
        Disjointified d = disjointify(centers, radii);
        for (const auto& pc : d.checks) {
            CHECK(pc.disjoint());
            if (d.changed) CHECK(pc.distance == pc.required);
        }
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (d.changed) CHECK(mag(d.centers[i] - centers[i]) == radii[i]);
            CHECK(disk_norm(f, d.centers[i], radii[i]) == disk_norm(f, centers[i], radii[i]));
        }
    }
}

TEST_CASE("schedules with equal r_n^k_n give equal stage tables") {
    std::vector<Scalar> centers{T("3"), T("2"), T("1")};
    ZeroProfile zp{Mag::one(), 0, {{T("3") + T("5"), 1}, {T("2") + T("3"), 2}, {T("1"), 1}, {T("1").scaled(2), 1}}};
    PowerSeries f = zp_to_series(zp);
    StageReport a = stage_values(f, DiskFamily(centers, {1, 2, 3}, mag2(7)));
    StageReport b = stage_values(f, DiskFamily(centers, {2, 4, 6}, mag2(14)));
    for (std::size_t n = 0; n < 3; ++n) {
        CHECK(a.records[n].zeta == b.records[n].zeta);
        CHECK(a.records[n].xi == b.records[n].xi);
    }
}

TEST_CASE("norm gap and xi sandwich on random instances") {
    Rng rng(64);
    for (int it = 0; it < 80; ++it) {
        ZeroProfile p = corpus::random_profile(rng, static_cast<int>(rng.uniform(1, 6)));
        PowerSeries f = zp_to_series(p);
        Scalar c = corpus::random_point(rng, p);
        if (c.is_exact_zero()) continue;
        Rational R = *c.valuation();
        Mag r = mag2(R + rng.exponent(Rational(1, 6), 2));
        Mag s = mag2(r.exponent() + rng.exponent(Rational(1, 6), 2));
        NormGap g = norm_gap(f, c, r, s);
        CHECK(g.holds());
        XiSandwich x = xi_sandwich(f, c, r, s);
        CHECK(x.holds());
    }
}
