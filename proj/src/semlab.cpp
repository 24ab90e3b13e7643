#include "nadisk/semlab.hpp"

#include <algorithm>

#include "nadisk/error.hpp"

namespace nadisk {

namespace {

Mag root(const Mag& m, std::int64_t k) { return mag_pow(m, Rational(1, k)); }

void check_weights(const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights) {
    if (centers.size() != weights.size()) throw Error(ErrorKind::InvalidArgument, "one weight per center");
    for (auto k : weights)
        if (k <= 0) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
}

void check_center(const Scalar& z) {
    if (!z.is_exact() || z.is_exact_zero() || !(mag(z) < Mag::one()))
        throw Error(ErrorKind::InvalidArgument, "centers must be exact with 0 < |z| < 1");
}

std::int64_t zeros_in(const PowerSeries& f, const Scalar& z, Region region, const Mag& r) {
    return count_zeros(translate(f, z), region, r);
}

} // namespace

DiskFamily::DiskFamily(std::vector<Scalar> centers, std::vector<std::int64_t> weights, Mag base)
    : centers_(std::move(centers)), weights_(std::move(weights)), base_(base) {
    check_weights(centers_, weights_);
    if (base_.is_zero() || !(base_ < Mag::one())) throw Error(ErrorKind::InvalidArgument, "base radius must be in (0, 1)");
    for (std::size_t n = 0; n < centers_.size(); ++n) {
        check_center(centers_[n]);
        if (n > 0 && mag(centers_[n]) < mag(centers_[n - 1]))
            throw Error(ErrorKind::InvalidArgument, "center magnitudes must be nondecreasing");
        radii_.push_back(root(base_, weights_[n]));
        if (!(radii_[n] < mag(centers_[n])))
            throw Error(ErrorKind::InvalidArgument, "stage disk " + std::to_string(n + 1) + " leaves its circle");
    }
    for (std::size_t n = 0; n < centers_.size(); ++n)
        for (std::size_t m = n + 1; m < centers_.size(); ++m)
            if (!(mag(centers_[n] - centers_[m]) > std::max(radii_[n], radii_[m]))) disjoint_ = false;
}

Regularity regularity_products(const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights,
                               std::size_t horizon) {
    check_weights(centers, weights);
    const std::size_t N = std::min(horizon, centers.size());
    Regularity reg;
    for (std::size_t n = 0; n < N; ++n) {
        Mag p = Mag::one();
        for (std::size_t m = 0; m < N; ++m) {
            if (m == n) continue;
            Mag d = mag(centers[n] - centers[m]);
            if (d.is_zero()) throw Error(ErrorKind::DuplicateCenters, "centers " + std::to_string(n + 1) + " and " +
                                                                          std::to_string(m + 1) + " coincide");
            p *= d.pow(weights[m]);
        }
        reg.products.push_back(p);
        reg.running_inf.push_back(n == 0 ? p : std::min(reg.running_inf.back(), p));
    }
    return reg;
}

StageReport stage_values(const PowerSeries& f, const DiskFamily& fam) {
    StageReport rep;
    for (std::size_t n = 0; n < fam.size(); ++n) {
        const Scalar& z = fam.centers()[n];
        const Mag& r = fam.radius(n);
        StageRecord rec;
        rec.zeta = disk_norm(f, z, r);
        rec.xi = xi(f, z, r);
        rec.prefactor = xi_prefactor(f, z);
        rec.count = zeros_in(f, z, Region::ClosedDisk, r);
        if (rec.zeta != rec.prefactor * rec.xi)
            throw Error(ErrorKind::VerificationFailed, "zeta differs from prefactor * xi at stage " + std::to_string(n + 1));
        if (n == 0) {
            rep.zeta_min = rep.zeta_max = rec.zeta;
            rep.xi_min = rep.xi_max = rec.xi;
        } else {
            const StageRecord& prev = rep.records.back();
            rep.zeta_nondecreasing = rep.zeta_nondecreasing && prev.zeta <= rec.zeta;
            rep.xi_nondecreasing = rep.xi_nondecreasing && prev.xi <= rec.xi;
            rep.zeta_min = std::min(rep.zeta_min, rec.zeta);
            rep.zeta_max = std::max(rep.zeta_max, rec.zeta);
            rep.xi_min = std::min(rep.xi_min, rec.xi);
            rep.xi_max = std::max(rep.xi_max, rec.xi);
        }
        rep.records.push_back(rec);
    }
    return rep;
}

Curve curve(const PowerSeries& f, const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights,
            const std::vector<Mag>& grid) {
    Curve c;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (i > 0 && !(grid[i - 1] < grid[i])) throw Error(ErrorKind::InvalidArgument, "grid radii must increase");
        StageReport rep = stage_values(f, DiskFamily(centers, weights, grid[i]));
        std::vector<Mag> row;
        for (const auto& rec : rep.records) row.push_back(rec.zeta);
        if (i > 0)
            for (std::size_t n = 0; n < row.size(); ++n) c.nondecreasing = c.nondecreasing && c.zeta.back()[n] <= row[n];
        c.grid.push_back(grid[i]);
        c.zeta.push_back(std::move(row));
    }
    return c;
}

Mag solve_radius(const PowerSeries& f, const Scalar& center, const Mag& target) {
    const Mag big_r = mag(center);
    if (big_r.is_zero() || !(big_r < Mag::one()))
        throw Error(ErrorKind::InvalidArgument, "center must satisfy 0 < |center| < 1");
    if (target.is_zero()) throw Error(ErrorKind::TargetOutOfRange, "target must be positive");
    PowerSeries h = translate(f, center);
    NewtonData nd = newton(h);
    if (!nd.complete_below) throw Error(ErrorKind::UncertifiedRadius, "Newton polygon near the center is not certified");
    // distances from the center to the zeros near it, with multiplicities
    std::vector<Mag> dist;
    std::vector<std::int64_t> cum;
    for (const auto& c : nd.radii) {
        if (!(c.radius < big_r)) break;
        if (!c.certified) throw Error(ErrorKind::UncertifiedRadius, "critical radius " + c.radius.str() + " is uncertified");
        dist.push_back(c.radius);
        cum.push_back((cum.empty() ? 0 : cum.back()) + c.count());
    }
    if (dist.empty())
        throw Error(ErrorKind::TargetOutOfRange, "xi is constant below |center|, so no largest radius exists");
    const Mag low = xi(f, center, dist.front());
    if (target < low) throw Error(ErrorKind::TargetOutOfRange, "target " + target.str() + " is below xi(0+) = " + low.str());
    if (target == low) return dist.front();
    for (std::size_t i = 0; i < dist.size(); ++i) {
        // on [d_i, d_(i+1)]: xi(s) = xi(d_i) (s / d_i)^A
        const Mag at = xi(f, center, dist[i]);
        const std::int64_t A = cum[i];
        const bool last = i + 1 == dist.size();
        const Mag next = last ? big_r : dist[i + 1];
        const Mag top = at * (next / dist[i]).pow(A);
        if (target < top || (!last && target == top)) {
            Rational sigma = dist[i].exponent() + (target.exponent() - at.exponent()) / Rational(A);
            return Mag::from_exponent(sigma);
        }
    }
    throw Error(ErrorKind::TargetOutOfRange, "target " + target.str() + " is not below xi(|center|)");
}

Mag test_bound_T(const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights, const Mag& r) {
    check_weights(centers, weights);
    Mag T = Mag::one();
    for (std::size_t n = 0; n < centers.size(); ++n) {
        Mag rn = root(r, weights[n]);
        std::int64_t tn = 0;
        for (std::size_t m = 0; m < centers.size(); ++m)
            if (mag(centers[n] - centers[m]) <= rn) tn += weights[m];
        T = std::min(T, rn.pow(tn));
    }
    return T;
}

TestFunction build_test_function(const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights,
                                 const std::vector<Mag>& delta, std::size_t stages) {
    check_weights(centers, weights);
    if (delta.size() != centers.size()) throw Error(ErrorKind::InvalidArgument, "one tolerance per center");
    for (std::size_t n = 0; n < centers.size(); ++n) {
        check_center(centers[n]);
        if (delta[n].is_zero() || !(delta[n] < mag(centers[n])))
            throw Error(ErrorKind::InvalidArgument, "tolerances must satisfy 0 < delta_n < |z_n|");
        for (std::size_t m = 0; m < n; ++m)
            if (!(mag(centers[n] - centers[m]) > std::max(delta[n], delta[m])))
                throw Error(ErrorKind::InvalidArgument, "tolerance disks must be pairwise disjoint");
    }
    std::vector<Target> targets;
    for (std::size_t n = 0; n < centers.size(); ++n) {
        const Rational q = delta[n].exponent();
        for (std::int64_t j = 0; j < weights[n]; ++j)
            targets.push_back({centers[n] + Scalar::monomial(j, q + Rational(1)), mag2(q + Rational(2))});
    }
    Prescription p(targets);
    PrescribeResult res = prescribe(p, make_plan(p, stages));
    Regularity reg = regularity_products(centers, weights, centers.size());
    Mag M = reg.running_inf.empty() ? Mag::one() : reg.running_inf.back();
    PowerSeries f = res.f;
    return TestFunction{std::move(f), std::move(p), std::move(res), M};
}

Disjointified disjointify(const std::vector<Scalar>& centers, const std::vector<Mag>& radii) {
    if (centers.size() != radii.size()) throw Error(ErrorKind::InvalidArgument, "one radius per center");
    for (std::size_t n = 0; n < centers.size(); ++n) {
        check_center(centers[n]);
        if (radii[n].is_zero() || !(radii[n] < mag(centers[n])))
            throw Error(ErrorKind::InvalidArgument, "radii must satisfy 0 < r_n < |z_n|");
    }
    Disjointified out;
    bool already = true;
    for (std::size_t n = 0; n < centers.size() && already; ++n)
        for (std::size_t m = n + 1; m < centers.size() && already; ++m)
            already = mag(centers[n] - centers[m]) > std::max(radii[n], radii[m]);

    out.centers = centers;
    if (!already) {
        out.changed = true;
        for (std::size_t n = 0; n < centers.size(); ++n) {
            const Rational rho = radii[n].exponent();
            // try w = z + a t^rho for a = 1, -1, 2, -2, ...: each earlier center rules out finitely many a
            for (std::int64_t step = 1;; ++step) {
                std::int64_t a = (step + 1) / 2 * (step % 2 ? 1 : -1);
                Scalar w = centers[n] + Scalar::monomial(a, rho);
                bool good = true;
                for (std::size_t m = 0; m < n && good; ++m) {
                    if (mag(centers[m]) != mag(centers[n])) continue;
                    Mag want = std::max(std::max(radii[n], radii[m]), mag(centers[n] - centers[m]));
                    good = mag(w - out.centers[m]) == want;
                }
                if (good) {
                    out.centers[n] = w;
                    break;
                }
            }
        }
    }
    for (std::size_t n = 0; n < centers.size(); ++n) {
        for (std::size_t m = n + 1; m < centers.size(); ++m) {
            if (mag(centers[n]) != mag(centers[m])) continue;
            PairCheck pc;
            pc.i = n;
            pc.j = m;
            pc.distance = mag(out.centers[n] - out.centers[m]);
            pc.max_radius = std::max(radii[n], radii[m]);
            pc.required = std::max(pc.max_radius, mag(centers[n] - centers[m]));
            out.checks.push_back(pc);
        }
    }
    return out;
}

bool NormGap::holds() const { return gap.sign() >= 0 && compare(gap, bound) <= 0; }

NormGap norm_gap(const PowerSeries& f, const Scalar& z0, const Mag& r, const Mag& s) {
    if (!(s <= r) || !(r < mag(z0))) throw Error(ErrorKind::InvalidArgument, "need s <= r < |z0|");
    NormGap g;
    g.A = zeros_in(f, z0, Region::ClosedDisk, r);
    g.gap = MagSum::of(disk_norm(f, z0, r)) - MagSum::of(disk_norm(f, z0, s));
    Mag norm = gauss_norm(f).value;
    g.bound = MagSum::of(r.pow(g.A) * norm) - MagSum::of(s.pow(g.A) * norm);
    return g;
}

XiSandwich xi_sandwich(const PowerSeries& f, const Scalar& z, const Mag& r, const Mag& s) {
    if (s.is_zero() || !(s < r) || !(r < mag(z))) throw Error(ErrorKind::InvalidArgument, "need 0 < s < r < |z|");
    XiSandwich x;
    x.B = zeros_in(f, z, Region::OpenDisk, r);
    x.upper = xi(f, z, r);
    x.value = xi(f, z, s);
    x.lower = (s / r).pow(x.B) * x.upper;
    return x;
}

} // namespace nadisk
