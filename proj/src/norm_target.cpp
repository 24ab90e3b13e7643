#include "nadisk/norm_target.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "nadisk/error.hpp"

namespace nadisk {

namespace {

mpq_class q_of(const Rational& r) { return mpq_class(r.num(), r.den()); }

// How many of the nearest grid points are checked exactly per step.
constexpr std::size_t kCandidates = 64;

struct GridOps {
    std::int64_t d;
    MagSum (*value)(const Rational&);
    double (*value_d)(const Rational&);
    double (*coord)(double); // grid coordinate of a real value
};

MagSum pow2_value(const Rational& e) { return MagSum().add_pow2(-e, 1); }
double pow2_value_d(const Rational& e) { return std::exp2(-e.to_double()); }
double pow2_coord(double y) { return -std::log2(y); }

MagSum rat_value(const Rational& r) { return MagSum(q_of(r)); }
double rat_value_d(const Rational& r) { return r.to_double(); }
double rat_coord(double y) { return y; }

std::vector<Rational> nearest(const GridOps& g, double target) {
    double x = g.coord(target);
    std::set<Rational> seen;
    for (std::int64_t q = 1; q <= g.d; ++q) {
        double xq = x * static_cast<double>(q);
        if (!std::isfinite(xq) || std::abs(xq) > 4e18) continue;
        auto f = static_cast<std::int64_t>(std::floor(xq));
        for (std::int64_t p : {f - 1, f, f + 1, f + 2}) seen.insert(Rational(p, q));
    }
    std::vector<std::pair<double, Rational>> ranked;
    for (const auto& r : seen) ranked.push_back({std::abs(g.value_d(r) - target), r});
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Rational> out;
    for (std::size_t i = 0; i < ranked.size() && i < kCandidates; ++i) out.push_back(ranked[i].second);
    return out;
}

NormTargetResult greedy(const std::vector<Bound>& bounds, const Rational& T, const GridOps& g, const Rational& eps,
                        const PickFilter& admissible) {
    if (g.d < 1) throw Error(ErrorKind::InvalidArgument, "grid denominator bound must be positive");
    if (!(eps.sign() > 0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
    const std::size_t N = bounds.size();
    std::vector<mpq_class> a_after(N + 1, 0), b_after(N + 1, 0);
    for (std::size_t n = N; n-- > 0;) {
        const auto& bd = bounds[n];
        if (!(bd.a.sign() > 0 && bd.a < bd.b)) throw Error(ErrorKind::InvalidArgument, "bounds need 0 < a < b");
        a_after[n] = a_after[n + 1] + q_of(bd.a);
        b_after[n] = b_after[n + 1] + q_of(bd.b);
    }
    const mpq_class t = q_of(T);
    if (t < a_after[0] || t > b_after[0])
        throw Error(ErrorKind::TargetOutOfRange, "target " + T.str() + " outside [sum a, sum b]");

    NormTargetResult res;
    MagSum acc;
    for (std::size_t n = 0; n < N; ++n) {
        const mpq_class an = q_of(bounds[n].a), bn = q_of(bounds[n].b);
        // remaining target R = T - acc; aim so that the rest sits at the same fraction s
        MagSum rem = MagSum(t) - acc;
        mpq_class c = (bn - an) / (b_after[n] - a_after[n]);
        MagSum aim = MagSum(bn - c * b_after[n]) + rem.scaled(c);
        if (compare(aim, MagSum(bn)) > 0) aim = MagSum(bn);
        if (compare(aim, MagSum(an)) < 0) aim = MagSum(an);
        const MagSum slack(q_of(eps) / static_cast<long>(n + 1));

        std::optional<Rational> pick;
        for (const Rational& r : nearest(g, aim.to_double())) {
            if (admissible && !admissible(n, r)) continue;
            MagSum v = g.value(r);
            if (compare(v, MagSum(an)) < 0 || compare(v, MagSum(bn)) > 0) continue;
            MagSum diff = v - aim;
            if (compare(diff, slack) > 0 || compare(-diff, slack) > 0) continue;
            if (n + 1 < N) {
                MagSum after = acc + v;
                if (compare(after + MagSum(a_after[n + 1]), MagSum(t)) > 0) continue;
                if (compare(after + MagSum(b_after[n + 1]), MagSum(t)) < 0) continue;
            }
            pick = r;
            acc = acc + v;
            break;
        }
        if (!pick)
            throw Error(ErrorKind::DenseSetTooCoarse, "no grid value within eps/" + std::to_string(n + 1) + " at step " +
                                                          std::to_string(n + 1));
        res.picks.push_back(*pick);
        res.t.push_back((bn.get_d() - g.value_d(*pick)) / mpq_class(bn - an).get_d());
    }
    res.total = acc;
    res.residual = acc - MagSum(t);
    if (compare(res.residual, MagSum(q_of(eps))) > 0 || compare(-res.residual, MagSum(q_of(eps))) > 0)
        throw Error(ErrorKind::DenseSetTooCoarse, "final sum misses the target by more than eps");
    return res;
}

} // namespace

NormTargetResult norm_target_select(const std::vector<Bound>& bounds, const Rational& T, const PowerOfTwoGrid& grid,
                                    const Rational& eps) {
    return greedy(bounds, T, {grid.d, pow2_value, pow2_value_d, pow2_coord}, eps, {});
}

NormTargetResult norm_target_select(const std::vector<Bound>& bounds, const Rational& T, const RationalGrid& grid,
                                    const Rational& eps, const PickFilter& admissible) {
    return greedy(bounds, T, {grid.d, rat_value, rat_value_d, rat_coord}, eps, admissible);
}

Rational planned_norm_exponent(const Prescription& p, const StagePlan& plan) {
    Rational e = 0;
    for (std::size_t i = 0; i < p.circles(); ++i) e += Rational(p.k(i)) * p.rho(i);
    for (std::size_t j = 0; j < plan.separators.size(); ++j)
        e += Rational(plan.block_sizes[j + 1] + 1) * plan.separators[j];
    return -e;
}

StagePlan plan_for_norm(const Prescription& p, const StagePlan& plan, const Mag& norm, std::int64_t d,
                        const Rational& eps, const std::vector<Mag>& forbidden) {
    if (norm.is_zero()) throw Error(ErrorKind::TargetOutOfRange, "the zero norm is not attainable");
    std::set<Rational> bad;
    for (const auto& f : forbidden) {
        if (f.is_zero()) continue;
        for (std::size_t i = 0; i < p.circles(); ++i)
            if (f.exponent() == p.rho(i))
                throw Error(ErrorKind::InvalidArgument, "forbidden radius " + f.str() + " is a target circle");
        bad.insert(f.exponent());
    }
    Rational target = -norm.exponent();
    for (std::size_t i = 0; i < p.circles(); ++i) target -= Rational(p.k(i)) * p.rho(i);

    const std::size_t J = plan.separators.size();
    if (J == 0) {
        if (!target.is_zero()) throw Error(ErrorKind::TargetOutOfRange, "plan has no separators to adjust");
        return plan;
    }
    std::vector<Bound> bounds;
    std::vector<Rational> weight;
    Rational lo_sum = 0, hi_sum = 0;
    for (std::size_t j = 0; j < J; ++j) {
        auto [lo, hi] = separator_range(p, plan, j);
        Rational w(plan.block_sizes[j + 1] + 1);
        weight.push_back(w);
        bounds.push_back({w * lo, w * hi});
        lo_sum += w * lo;
        hi_sum += w * hi;
    }
    // separators sit strictly between circles, so the attainable set is open
    if (!(lo_sum < target && target < hi_sum))
        throw Error(ErrorKind::TargetOutOfRange, "norm " + norm.str() + " outside the range of separator choices");
    auto admissible = [&](std::size_t j, const Rational& y) {
        return bounds[j].a < y && y < bounds[j].b && !bad.count(y / weight[j]);
    };
    NormTargetResult r = norm_target_select(bounds, target, RationalGrid{d}, eps, admissible);
    StagePlan out = plan;
    for (std::size_t j = 0; j < J; ++j) out.separators[j] = r.picks[j] / weight[j];
    return out;
}

} // namespace nadisk
