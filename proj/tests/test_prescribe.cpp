#include "doctest.h"

#include <chrono>
#include <map>

#include "nadisk/corpus.hpp"
#include "nadisk/error.hpp"
#include "nadisk/prescribe.hpp"
#include "support.hpp"

using namespace nadisk;
using namespace testsupport;

namespace {

std::vector<std::pair<Rational, std::int64_t>> radii_counts(const PowerSeries& f) {
    std::vector<std::pair<Rational, std::int64_t>> out;
    for (const auto& c : newton(f).radii) out.emplace_back(c.radius.exponent(), c.count());
    return out;
}

} // namespace

TEST_CASE("vandermonde examples") {
    CHECK(vandermonde_solve({Scalar(1L)}, {Scalar(5L)}, 10) == std::vector<Scalar>{Scalar(5L)});
    auto b = vandermonde_solve({Scalar(1L), Scalar(-1L)}, {Scalar(1L), Scalar(1L)}, 10);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Scalar(1L));
    CHECK(b[1].is_exact_zero());
    auto c = vandermonde_solve({Scalar(1L), Scalar(2L)}, {Scalar(1L), Scalar(2L)}, 10);
    CHECK(c[0].is_exact_zero());
    CHECK(c[1] == Scalar(1L));
    CHECK(kind_of([] { vandermonde_solve({T("1"), T("1")}, {Scalar(1L), Scalar(2L)}, 5); }) == ErrorKind::DuplicateNodes);
}

TEST_CASE("vandermonde residuals on random nodes") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        int n = static_cast<int>(rng.uniform(1, 6));
        std::vector<Scalar> nodes, values;
        while (static_cast<int>(nodes.size()) < n) {
            Scalar x = corpus::point_on_circle(rng, rng.exponent(Rational(1, 6), 2), 1);
            bool dup = false;
            for (const auto& y : nodes) dup = dup || y == x;
            if (dup) continue;
            nodes.push_back(x);
            values.push_back(Scalar(rng.coeff()) + T("1"));
        }
        Rational order = 30;
        auto b = vandermonde_solve(nodes, values, order);
        PowerSeries q(b);
        for (int i = 0; i < n; ++i) {
            // residual vanishes below the certified order
            Scalar r = evaluate(q, nodes[static_cast<std::size_t>(i)]) - values[static_cast<std::size_t>(i)];
            CHECK(r.terms().empty());
            CHECK((!r.trunc() || *r.trunc() >= Rational(10)));
        }
    }
}

TEST_CASE("extend stage example") {
    PowerSeries p1 = PowerSeries({Scalar(1L), -T("-1")}) * PowerSeries({Scalar(1L), -T("-1/2")});
    ExtendResult r = extend_stage(p1, {T("1/2")}, {T("1/3")}, mag2(Rational(5, 12)), 40);
    CHECK(r.p2.last_index() == 5);
    std::vector<std::pair<Rational, std::int64_t>> want{
        {1, 1}, {Rational(1, 2), 1}, {Rational(5, 12), 2}, {Rational(1, 3), 1}};
    CHECK(radii_counts(r.p2) == want);
    CHECK(r.audit.ok());
    CHECK(evaluate(r.p2, T("1/2")).terms().empty());
    CHECK(evaluate(r.p2, T("1/3")).terms().empty());
    // minimal instance: no outer zeros
    ExtendResult m = extend_stage(p1, {T("1/2")}, {}, mag2(Rational(1, 3)), 40);
    auto rc = radii_counts(m.p2);
    REQUIRE(rc.size() == 3);
    CHECK(rc.back() == std::make_pair(Rational(1, 3), std::int64_t{2}));
    CHECK(kind_of([&] { extend_stage(p1, {T("1/2")}, {}, mag2(Rational(1, 2)), 40); }) ==
          ErrorKind::SeparatorCollision);
}

TEST_CASE("prescription derived data") {
    Prescription p({{T("1"), mag2(3)}, {T("1/2"), mag2(Rational(5, 4))}, {T("1/2").scaled(2), mag2(2)}});
    REQUIRE(p.circles() == 2);
    CHECK(p.rho(0) == Rational(1));
    CHECK(p.k(1) == 2);
    CHECK(p.delta(1) == mag2(2));                 // min eps on the circle, already in 2^(-Z/6)
    CHECK(p.delta(0) == mag2(3));
    CHECK(p.c_exponent() == Rational(2));
    Prescription q({{T("1"), mag2(Rational(5, 4))}});
    CHECK(q.delta(0) == mag2(Rational(4, 3)));    // rounded up to a multiple of 1/6
    CHECK(kind_of([] { Prescription({{T("1"), mag2(2)}, {T("1") + T("3"), mag2(2)}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("make plan") {
    // three circles with one zero each can never satisfy the first strict inequality
    Prescription p3({{T("1"), mag2(2)}, {T("1/2"), mag2(1)}, {T("1/3"), mag2(1)}});
    CHECK(kind_of([&] { make_plan(p3, 2); }) == ErrorKind::InfeasibleHorizon);
    StagePlan auto3 = make_plan(p3, 0);
    CHECK(auto3.stages() == 1);
    // a deep first circle and a heavy second block make two stages feasible
    std::vector<Target> ts{{T("4"), mag2(Rational(9, 2))}};
    for (int c : {1, -1, 2, -2}) ts.push_back({T("1").scaled(c), mag2(2)});
    ts.push_back({T("1/2"), mag2(1)});
    Prescription p(ts);
    StagePlan plan = make_plan(p, 2);
    CHECK(plan.breakpoints == std::vector<std::size_t>{1, 2, 3});
    CHECK(plan.block_sizes == std::vector<std::int64_t>{1, 4, 1});
    REQUIRE(plan.separators.size() == 1);
    CHECK(plan.separators[0] == Rational(2, 3));
    // forbidding the natural separator moves it
    StagePlan moved = make_plan(p, 2, {mag2(Rational(2, 3))});
    CHECK(moved.separators[0] != Rational(2, 3));
    CHECK(Rational(1, 2) < moved.separators[0]);
    CHECK(moved.separators[0] < Rational(1));
    CHECK(kind_of([&] { make_plan(p, 2, {mag2(1)}); }) == ErrorKind::InvalidArgument);
    // too large a tolerance breaks the inequality
    std::vector<Target> loose = ts;
    loose[0].eps = mag2(Rational(25, 6));
    loose.push_back({T("1/3"), mag2(1)});
    loose.push_back({T("1/4"), mag2(1)});
    Prescription pl(loose);
    CHECK(kind_of([&] { make_plan(pl, 3); }) == ErrorKind::InfeasibleHorizon);
}

TEST_CASE("prescribe examples") {
    Prescription two({{T("1"), mag2(3)}, {T("1/2"), mag2(3)}});
    PrescribeResult r = prescribe(two, make_plan(two, 0));
    CHECK(r.report.all_pass());
    CHECK(r.f[0] == Scalar(1L));
    Prescription one({{T("1/2") + T("1"), mag2(2)}});
    PrescribeResult s = prescribe(one, make_plan(one, 1));
    // z_1 - z scaled by the inverse leading monomial of z_1
    CHECK(s.f.last_index() == 1);
    CHECK(s.f[0] == Scalar(1L) + T("1/2"));
    CHECK(s.f[1] == -T("-1/2"));
    CHECK(evaluate(s.f, T("1/2") + T("1")).is_exact_zero());
    CHECK(mag(s.f[0]) == Mag::one());
    CHECK(verify_prescription(PowerSeries::constant(Scalar(1L)), two).targets[0].pass == false);
    CHECK(verify_prescription(PowerSeries::constant(Scalar(1L)), two).targets[1].pass == false);
}

TEST_CASE("prescribe with two stages and a forbidden radius") {
    std::vector<Target> ts{{T("4"), mag2(Rational(9, 2))}};
    for (int c : {1, -1, 2, -2}) ts.push_back({T("1").scaled(c), mag2(2)});
    ts.push_back({T("1/2"), mag2(1)});
    Prescription p(ts);
    StagePlan plan = make_plan(p, 2, {mag2(Rational(2, 3))});
    PrescribeResult r = prescribe(p, plan);
    CHECK(r.report.all_pass());
    REQUIRE(r.audits.size() == 1);
    CHECK(r.audits[0].ok());
    for (const auto& c : newton(r.f).radii) CHECK(c.radius != mag2(Rational(2, 3)));
    CHECK(gauss_norm(r.f).value == r.expected_norm);
    // the first target zero was perturbed, yet stays within its tolerance
    CHECK_FALSE(evaluate(r.f, ts[0].center).is_exact_zero());
}

TEST_CASE("a displaced zero fails verification") {
    Prescription p({{T("1"), mag2(3)}, {T("1/2"), mag2(3)}});
    // zeros at t(1 + t^2) (distance 2^-3 from the target: not strictly inside) and t^(1/2)
    ZeroProfile zp{Mag::one(), 0, {{T("1") + T("3"), 1}, {T("1/2"), 1}}};
    VerifyReport rep = verify_prescription(zp_to_series(zp), p);
    CHECK_FALSE(rep.targets[0].pass);
    CHECK(rep.targets[1].pass);
    CHECK(rep.circles[0].pass);
}

TEST_CASE("random prescriptions end to end") {
    Rng rng(41);
    auto t0 = std::chrono::steady_clock::now();
    int multi = 0;
    for (int it = 0; it < 15; ++it) {
        Prescription p(corpus::random_targets(rng));
        StagePlan plan = make_plan(p, 0);
        if (plan.stages() > 1) ++multi;
        PrescribeResult r = prescribe(p, plan);
        CHECK(r.report.all_pass());
        for (const auto& a : r.audits) CHECK(a.ok());
        CHECK(gauss_norm(r.f).value == r.expected_norm);
        CHECK(gauss_norm(r.f).value <= mag2(Rational(-3) * p.c_exponent()));
    }
    MESSAGE("multi-stage plans: " << multi << ", seconds: "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}
