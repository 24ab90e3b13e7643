#include "nadisk/prescribe.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nadisk/error.hpp"

namespace nadisk {

std::vector<Scalar> vandermonde_solve(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values,
                                      const Rational& order) {
    if (nodes.size() != values.size()) throw Error(ErrorKind::InvalidArgument, "nodes and values differ in length");
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!nodes[i].is_exact()) throw Error(ErrorKind::InvalidArgument, "interpolation nodes must be exact");
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j]) throw Error(ErrorKind::DuplicateNodes, "node " + nodes[i].str() + " repeats");
    }
    // divided differences in place
    std::vector<Scalar> c = values;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            Scalar den = nodes[i] - nodes[i - j];
            Scalar num = c[i] - c[i - 1];
            if (num.is_exact_zero()) {
                c[i] = Scalar();
            } else {
                try {
                    c[i] = divide(num, den, order);
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::IndeterminateMag)
                        throw Error(ErrorKind::IndeterminatePivot, "pivot magnitude not certified at order " + order.str());
                    throw;
                }
            }
            if (i == j) break;
        }
    }
    // Newton form to monomial form
    std::vector<Scalar> poly;
    if (n == 0) return poly;
    poly.push_back(c[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly * (z - x_i) + c_i
        std::vector<Scalar> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= (poly[k] * nodes[i]).capped(order);
        }
        next[0] += c[i];
        poly = std::move(next);
    }
    for (auto& b : poly) b = b.capped(order);
    return poly;
}

Prescription::Prescription(std::vector<Target> targets) : targets_(std::move(targets)) {
    std::map<Rational, std::vector<std::size_t>, std::greater<>> by_circle; // largest exponent first
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        const Target& t = targets_[i];
        Mag m = mag(t.center);
        if (m.is_zero() || !(m < Mag::one()))
            throw Error(ErrorKind::InvalidArgument, "target centers must satisfy 0 < |z| < 1");
        if (t.eps.is_zero()) throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
        if (!(t.eps < m)) throw Error(ErrorKind::InvalidArgument, "tolerance must be below |z| for target " + std::to_string(i));
        by_circle[m.exponent()].push_back(i);
        gamma_ += m.exponent();
    }
    circle_of_.resize(targets_.size());
    for (auto& [rho, members] : by_circle) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const Target& x = targets_[members[a]];
                const Target& y = targets_[members[b]];
                if (!(mag(x.center - y.center) > std::max(x.eps, y.eps)))
                    throw Error(ErrorKind::InvalidArgument, "target disks " + std::to_string(members[a]) + " and " +
                                                                std::to_string(members[b]) + " overlap");
            }
        }
        Rational q = targets_[members.front()].eps.exponent();
        for (std::size_t m : members) q = max(q, targets_[m].eps.exponent());
        // largest 2^(-j/6) not above every tolerance on the circle
        Rational dq((q * Rational(6)).ceil(), 6);
        for (std::size_t m : members) circle_of_[m] = rho_.size();
        rho_.push_back(rho);
        delta_.push_back(Mag::from_exponent(dq));
        members_.push_back(members);
    }
}

Rational Prescription::max_exponent() const {
    Rational best(0);
    for (const auto& t : targets_) {
        for (const auto& term : t.center.terms()) best = max(best, term.exp);
        best = max(best, t.eps.exponent());
    }
    for (const auto& d : delta_) best = max(best, d.exponent());
    return best;
}

Rational pick_exponent(const Rational& lo, const Rational& hi, const std::vector<Rational>& forbidden) {
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "empty separator interval");
    std::set<Rational> bad(forbidden.begin(), forbidden.end());
    for (std::int64_t q = 1;; ++q) {
        std::int64_t p0 = (lo * Rational(q)).floor() + 1;
        std::int64_t p1 = (hi * Rational(q)).ceil() - 1;
        for (std::int64_t p = p0; p <= p1; ++p) {
            Rational r(p, q);
            if (r.den() != q || !(lo < r && r < hi)) continue;
            if (!bad.count(r)) return r;
        }
        if (q > 1000000) throw Error(ErrorKind::SeparatorCollision, "no admissible separator");
    }
}

std::pair<Rational, Rational> separator_range(const Prescription& p, const StagePlan& plan, std::size_t j) {
    std::size_t last = plan.breakpoints[j + 1] - 1; // last circle of the block before the separator
    return {p.rho(last + 1), p.rho(last)};
}

StagePlan make_plan(const Prescription& p, std::size_t stages, const std::vector<Mag>& forbidden) {
    const std::size_t K = p.circles();
    std::vector<Rational> bad;
    for (const auto& f : forbidden) {
        if (f.is_zero()) continue;
        for (std::size_t i = 0; i < K; ++i)
            if (f.exponent() == p.rho(i))
                throw Error(ErrorKind::InvalidArgument, "forbidden radius " + f.str() + " is a target circle");
        bad.push_back(f.exponent());
    }
    StagePlan plan;
    if (K == 0) return plan;

    std::vector<std::int64_t> pre(K + 1, 0);
    for (std::size_t i = 0; i < K; ++i) pre[i + 1] = pre[i] + p.k(i);
    auto size = [&](std::size_t a, std::size_t b) { return pre[b] - pre[a]; };
    // block [x, a) followed by a block of size `next`
    auto ok = [&](std::size_t x, std::size_t a, std::int64_t next) {
        Rational need = p.c_exponent();
        Rational worst = Rational(p.k(x)) * p.delta(x).exponent();
        for (std::size_t i = x; i < a; ++i) worst = max(worst, Rational(p.k(i)) * p.delta(i).exponent());
        need += worst;
        Rational have = Rational(next) * p.rho(a - 1);
        return x == 0 ? have > need : have >= need;
    };

    // reach[a][b][m]: prefix of m blocks ending with the non-final block [a, b)
    // is admissible; value is the start of the previous block (or K+1 for none).
    const std::size_t none = K + 1;
    std::vector<std::vector<std::map<std::size_t, std::size_t>>> reach(K + 1, std::vector<std::map<std::size_t, std::size_t>>(K + 1));
    for (std::size_t b = 1; b < K; ++b) reach[0][b][1] = none;
    for (std::size_t a = 1; a < K; ++a) {
        for (std::size_t b = a + 1; b < K; ++b) {
            for (std::size_t x = 0; x < a; ++x) {
                if (!ok(x, a, size(a, b))) continue;
                for (const auto& [m, prev] : reach[x][a]) reach[a][b].try_emplace(m + 1, x);
            }
        }
    }
    // final block [a, K) appended without a condition
    auto blocks_for = [&](std::size_t m) -> std::optional<std::vector<std::size_t>> {
        if (m == 1) return std::vector<std::size_t>{K};
        for (std::size_t a = 1; a < K; ++a) {
            for (std::size_t x = 0; x < a; ++x) {
                auto it = reach[x][a].find(m - 1);
                if (it == reach[x][a].end()) continue;
                std::vector<std::size_t> bps{K, a};
                std::size_t cur_a = x, cur_b = a, cnt = m - 1;
                while (cur_a != 0) {
                    std::size_t prev = reach[cur_a][cur_b].at(cnt);
                    bps.push_back(cur_a);
                    cur_b = cur_a;
                    cur_a = prev;
                    --cnt;
                }
                std::reverse(bps.begin(), bps.end());
                return bps;
            }
        }
        return std::nullopt;
    };

    std::optional<std::vector<std::size_t>> bps;
    if (stages == 0) {
        for (std::size_t m = K; m >= 1 && !bps; --m) bps = blocks_for(m);
    } else {
        std::size_t m = stages == 1 ? 1 : stages + 1;
        if (m > K) throw Error(ErrorKind::InfeasibleHorizon, "not enough circles for " + std::to_string(stages) + " stages");
        bps = blocks_for(m);
        if (!bps)
            throw Error(ErrorKind::InfeasibleHorizon,
                        "no breakpoints satisfy the stage inequalities for " + std::to_string(stages) + " stages");
    }
    plan.breakpoints = *bps;
    std::size_t prev = 0;
    for (std::size_t b : plan.breakpoints) {
        plan.block_sizes.push_back(size(prev, b));
        prev = b;
    }
    for (std::size_t j = 0; j + 2 < plan.blocks(); ++j) {
        auto [lo, hi] = separator_range(p, plan, j);
        plan.separators.push_back(pick_exponent(lo, hi, bad));
    }
    return plan;
}

namespace {

bool same_radius_data(const CriticalRadius& a, const CriticalRadius& b) {
    return a.radius == b.radius && a.mu == b.mu && a.nu == b.nu && a.certified && b.certified;
}

PowerSeries cap(const PowerSeries& f, const Rational& order) { return f.truncated_coeffs(order); }

} // namespace

ExtendResult extend_stage(const PowerSeries& p1, const std::vector<Scalar>& middle, const std::vector<Scalar>& outer,
                          const Mag& s, const Rational& order) {
    if (!p1.is_polynomial() || p1.last_index() < 1)
        throw Error(ErrorKind::InvalidArgument, "extension needs a polynomial of positive degree");
    if (s.is_zero() || !(s < Mag::one())) throw Error(ErrorKind::InvalidArgument, "separator must lie in (0, 1)");
    NewtonData before = newton(p1);
    for (const auto& c : before.radii)
        if (c.radius == s) throw Error(ErrorKind::SeparatorCollision, "separator " + s.str() + " is a critical radius");
    for (const auto& x : middle) {
        if (!(mag(x) < s)) throw Error(ErrorKind::InvalidArgument, "middle zeros must lie inside the separator circle");
    }
    for (const auto& x : outer) {
        if (mag(x) == s) throw Error(ErrorKind::SeparatorCollision, "separator " + s.str() + " is a target circle");
        if (!(mag(x) > s)) throw Error(ErrorKind::InvalidArgument, "outer zeros must lie outside the separator circle");
    }

    const std::size_t d = static_cast<std::size_t>(p1.last_index());
    std::vector<Scalar> nodes, values;
    for (const auto& x : middle) {
        nodes.push_back(x);
        values.emplace_back();
    }
    std::vector<Scalar> rest = outer;
    rest.push_back(sample_point(s));
    for (const auto& x : rest) {
        nodes.push_back(x);
        values.push_back(divide(-evaluate(p1, x), x.pow(static_cast<unsigned>(d + 1)), order));
    }
    ExtendResult out;
    out.q = PowerSeries(vandermonde_solve(nodes, values, order));
    out.p2 = cap(p1 + out.q.shifted(d + 1), order);

    StageAudit& au = out.audit;
    NewtonData after = newton(out.p2);
    for (const auto& c : after.radii)
        if (!c.certified) throw Error(ErrorKind::UncertifiedRadius, "extended polynomial has an uncertified radius");

    std::vector<CriticalRadius> low, high;
    for (const auto& c : after.radii) (c.radius < s ? low : high).push_back(c);
    au.preserved = low.size() == before.radii.size() &&
                   std::equal(low.begin(), low.end(), before.radii.begin(), same_radius_data);

    std::map<Mag, std::int64_t> expected_high;
    expected_high[s] = static_cast<std::int64_t>(middle.size()) + 1;
    std::map<Mag, std::int64_t> outer_expected;
    for (const auto& x : outer) ++outer_expected[mag(x)];
    std::map<Mag, std::int64_t> found_high;
    for (const auto& c : high) found_high[c.radius] = c.count();
    au.separator_count = found_high.count(s) && found_high[s] == expected_high[s];
    au.outer_counts = true;
    for (const auto& [r, k] : outer_expected)
        if (!found_high.count(r) || found_high[r] != k) au.outer_counts = false;
    if (found_high.size() != outer_expected.size() + 1) au.outer_counts = false;

    au.nodes_vanish = true;
    for (const auto* set : {&middle, &outer})
        for (const auto& x : *set)
            if (!evaluate(out.p2, x).terms().empty()) au.nodes_vanish = false;

    au.tail_counts = true;
    for (const auto& c : after.radii) {
        if (c.mu <= static_cast<std::int64_t>(d)) continue;
        RadiusData qd = at_radius(out.q, c.radius);
        if (!qd.certified) throw Error(ErrorKind::UncertifiedRadius, "interpolant radius data not certified");
        if (qd.count() != c.count()) au.tail_counts = false;
    }
    if (!au.ok()) throw Error(ErrorKind::VerificationFailed, "stage extension audit failed");
    return out;
}

bool VerifyReport::all_pass() const {
    for (const auto& t : targets)
        if (!t.pass) return false;
    for (const auto& c : circles)
        if (!c.pass) return false;
    return true;
}

VerifyReport verify_prescription(const PowerSeries& f, const Prescription& p) {
    VerifyReport rep;
    // beyond the largest exponent present a cap changes nothing
    Rational limit(1);
    for (const auto& a : f.coeffs()) {
        if (!a.terms().empty()) limit = max(limit, abs(a.terms().back().exp) + Rational(1));
        if (a.trunc()) limit = max(limit, abs(*a.trunc()) + Rational(1));
    }
    for (const auto& t : p.targets())
        for (const auto& term : t.center.terms()) limit = max(limit, abs(term.exp) * Rational(f.last_index() + 1));
    for (std::size_t i = 0; i < p.targets().size(); ++i) {
        TargetCheck tc;
        tc.index = i;
        const Mag& delta = p.delta(p.circle_of(i));
        const Scalar& center = p.targets()[i].center;
        tc.detail = "uncertified at radius " + delta.str();
        // Only leading terms of b_m delta^m matter: translate with a level that
        // grows until the decision is certified.
        for (std::optional<Rational> cap = Rational(1);; cap = *cap * Rational(2)) {
            if (cap && !(*cap < limit)) cap.reset();
            PowerSeries h = cap ? translate_at(f, center, *cap, delta) : translate(f, center);
            if (h.is_exact_zero() || (!h.coeffs().empty() && h[0].is_exact_zero())) {
                tc.pass = true;
                tc.detail = "zero at the center";
                break;
            }
            try {
                RadiusData d = at_radius(h, delta);
                if (d.certified) {
                    tc.pass = d.mu >= 1;
                    tc.detail = tc.pass ? std::to_string(d.mu) + " zero(s) within " + delta.str()
                                        : "no zero within " + delta.str();
                    break;
                }
            } catch (const Error& e) {
                if (!cap) tc.detail = e.what();
            }
            if (!cap) break;
        }
        rep.targets.push_back(tc);
    }
    for (std::size_t i = 0; i < p.circles(); ++i) {
        CircleCheck cc;
        cc.radius = p.radius(i);
        cc.expected = p.k(i);
        try {
            cc.found = count_zeros(f, Region::Circle, cc.radius);
        } catch (const Error&) {
            cc.found = -1;
        }
        cc.pass = cc.found == cc.expected;
        rep.circles.push_back(cc);
    }
    return rep;
}

namespace {

bool escalatable(ErrorKind k) {
    return k == ErrorKind::IndeterminatePivot || k == ErrorKind::IndeterminateMag ||
           k == ErrorKind::UncertifiedRadius || k == ErrorKind::VerificationFailed;
}

} // namespace

PrescribeResult prescribe(const Prescription& p, const StagePlan& plan) {
    PrescribeResult res;
    res.plan = plan;
    if (p.circles() == 0) {
        res.f = PowerSeries::constant(Scalar(1L));
        res.working_order = 0;
        return res;
    }
    if (plan.breakpoints.empty() || plan.breakpoints.back() != p.circles())
        throw Error(ErrorKind::InvalidArgument, "plan does not cover the prescription");
    if (plan.separators.size() + 2 != std::max<std::size_t>(plan.blocks(), 2))
        throw Error(ErrorKind::InvalidArgument, "plan has the wrong number of separators");

    std::vector<std::vector<Scalar>> blocks;
    std::size_t prev = 0;
    for (std::size_t b : plan.breakpoints) {
        std::vector<Scalar> pts;
        for (std::size_t i = prev; i < b; ++i)
            for (std::size_t m : p.members(i)) pts.push_back(p.targets()[m].center);
        blocks.push_back(std::move(pts));
        prev = b;
    }

    Mag norm = Mag::one();
    for (std::size_t i = 0; i < p.circles(); ++i) norm = norm / p.radius(i).pow(p.k(i));
    for (std::size_t j = 0; j < plan.separators.size(); ++j)
        norm = norm / plan.separator(j).pow(plan.block_sizes[j + 1] + 1);
    res.expected_norm = norm;

    Rational w(std::max<std::int64_t>(8, (Rational(4) * p.max_exponent()).ceil()));
    for (int attempt = 0;; ++attempt) {
        try {
            // P_1: product over the first two blocks, scaled by the exact monomial
            // inverse of the leading term of P_1(0), so P_1(0) = 1 + (higher terms)
            PowerSeries g = PowerSeries::constant(Scalar(1L));
            for (std::size_t b = 0; b < std::min<std::size_t>(2, blocks.size()); ++b)
                for (const auto& x : blocks[b]) g = g * PowerSeries({x, Scalar(-1L)});
            const Term& lead = g[0].terms().front();
            PowerSeries f = g.scaled(Scalar::monomial(1 / lead.coeff, -lead.exp));
            std::vector<StageAudit> audits;
            for (std::size_t j = 0; j < plan.separators.size(); ++j) {
                ExtendResult ext = extend_stage(f, blocks[j + 1], blocks[j + 2], plan.separator(j), w);
                ext.audit.stage = j + 2;
                audits.push_back(ext.audit);
                f = ext.p2;
            }
            VerifyReport rep = verify_prescription(f, p);
            if (!rep.all_pass()) throw Error(ErrorKind::VerificationFailed, "prescription check failed");
            res.f = std::move(f);
            res.audits = std::move(audits);
            res.report = std::move(rep);
            res.working_order = w;
            return res;
        } catch (const Error& e) {
            if (!escalatable(e.kind()) || attempt >= 6) throw;
            w = w * Rational(2);
        }
    }
}

} // namespace nadisk
