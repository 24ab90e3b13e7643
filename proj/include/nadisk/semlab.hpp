#pragma once

#include <cstdint>
#include <vector>

#include "nadisk/mag.hpp"
#include "nadisk/mag_sum.hpp"
#include "nadisk/prescribe.hpp"
#include "nadisk/scalar.hpp"
#include "nadisk/series.hpp"

namespace nadisk {

// Centers z_1..z_N with weights k_n and a base radius r; stage n uses the
// closed disk D+(z_n, r^(1/k_n)).
class DiskFamily {
public:
    DiskFamily(std::vector<Scalar> centers, std::vector<std::int64_t> weights, Mag base);

    const std::vector<Scalar>& centers() const { return centers_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    const Mag& base() const { return base_; }
    std::size_t size() const { return centers_.size(); }
    const Mag& radius(std::size_t n) const { return radii_[n]; }
    // The stage disks are pairwise disjoint.
    bool disjoint() const { return disjoint_; }

private:
    std::vector<Scalar> centers_;
    std::vector<std::int64_t> weights_;
    Mag base_ = Mag::one();
    std::vector<Mag> radii_;
    bool disjoint_ = true;
};

struct Regularity {
    std::vector<Mag> products; // prod_{m != n} |z_n - z_m|^(k_m)
    std::vector<Mag> running_inf;
};

// Stage-n products over the first `horizon` centers.
Regularity regularity_products(const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights,
                               std::size_t horizon);

struct StageRecord {
    Mag zeta = Mag::one();      // sup of |f| on the stage disk
    Mag xi = Mag::one();
    Mag prefactor = Mag::one(); // zeta = prefactor * xi
    std::int64_t count = 0;     // zeros of f in the stage disk
};

struct StageReport {
    std::vector<StageRecord> records;
    Mag zeta_min = Mag::one(), zeta_max = Mag::one();
    Mag xi_min = Mag::one(), xi_max = Mag::one();
    bool zeta_nondecreasing = true; // along n
    bool xi_nondecreasing = true;
};

StageReport stage_values(const PowerSeries& f, const DiskFamily& fam);

struct Curve {
    std::vector<Mag> grid;
    std::vector<std::vector<Mag>> zeta; // zeta[i][n]: grid point i, stage n
    bool nondecreasing = true;          // in r, at every stage
};

// Stage zeta tables along an increasing grid of base radii.
Curve curve(const PowerSeries& f, const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights,
            const std::vector<Mag>& grid);

// Largest s < |center| with xi(f, center, s) = target. xi is constant below
// the nearest zero and s^A times a constant on each later piece.
Mag solve_radius(const PowerSeries& f, const Scalar& center, const Mag& target);

struct TestFunction {
    PowerSeries f;
    Prescription prescription;
    PrescribeResult construction;
    Mag M = Mag::one(); // least regularity product
};

// k_n simple zeros in each D+(z_n, delta_n): k_n sub-targets spaced delta_n/2
// apart around z_n, each with tolerance delta_n/4. stages == 0 picks the most
// stages the plan allows.
TestFunction build_test_function(const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights,
                                 const std::vector<Mag>& delta, std::size_t stages = 1);

// T = min_n r_n^(T_n) with T_n the weight of centers within r_n of z_n.
Mag test_bound_T(const std::vector<Scalar>& centers, const std::vector<std::int64_t>& weights, const Mag& r);

struct PairCheck {
    std::size_t i = 0, j = 0;
    Mag distance = Mag::one();   // |w_i - w_j|
    Mag max_radius = Mag::one(); // max(r_i, r_j)
    Mag required = Mag::one();   // max(r_i, r_j, |z_i - z_j|)
    // the open disks D-(w_i, r_i), D-(w_j, r_j) are disjoint
    bool disjoint() const { return distance >= max_radius; }
};

struct Disjointified {
    std::vector<Scalar> centers;
    bool changed = false;
    std::vector<PairCheck> checks; // every pair on a common circle
};

// New centers w_n with |w_n - z_n| = r_n and |w_n - w_m| = max(r_n, r_m, |z_n - z_m|)
// on each circle, so the open disks D-(w_n, r_n) are pairwise disjoint while
// D+(w_n, r_n) = D+(z_n, r_n). Input whose closed disks are already disjoint
// is returned unchanged.
Disjointified disjointify(const std::vector<Scalar>& centers, const std::vector<Mag>& radii);

// Both sides of 0 <= |f|_{D+(z0,r)} - |f|_{D+(z0,s)} <= (r^A - s^A) |f|, as
// real numbers, with A the zero count of f in D+(z0, r).
struct NormGap {
    MagSum gap;
    MagSum bound;
    std::int64_t A = 0;
    bool holds() const;
};
NormGap norm_gap(const PowerSeries& f, const Scalar& z0, const Mag& r, const Mag& s);

// (s/r)^B xi(r) <= xi(s) <= xi(r) with B the zero count in D-(z, r).
struct XiSandwich {
    Mag lower = Mag::one(), value = Mag::one(), upper = Mag::one();
    std::int64_t B = 0;
    bool holds() const { return lower <= value && value <= upper; }
};
XiSandwich xi_sandwich(const PowerSeries& f, const Scalar& z, const Mag& r, const Mag& s);

} // namespace nadisk
