#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nadisk/mag.hpp"
#include "nadisk/mag_sum.hpp"
#include "nadisk/prescribe.hpp"
#include "nadisk/rational.hpp"

namespace nadisk {

// {2^(-p/q) : q <= d}. A pick e stands for the value 2^(-e).
struct PowerOfTwoGrid {
    std::int64_t d = 1;
};

// {p/q : q <= d}. A pick is the value itself.
struct RationalGrid {
    std::int64_t d = 1;
};

struct Bound {
    Rational a, b; // 0 < a < b
};

struct NormTargetResult {
    std::vector<Rational> picks; // grid coordinates of q_n(t_n)
    std::vector<double> t;       // t_n with q_n(t) = t a_n + (1 - t) b_n
    MagSum total;                // sum of the q_n(t_n)
    MagSum residual;             // total - T
};

// Extra admissibility filter on (step, pick).
using PickFilter = std::function<bool(std::size_t, const Rational&)>;

// Greedy selection of q_n(t_n) in the grid with sum within eps of T. Step n
// aims at the point that keeps the remaining target reachable and accepts a
// grid value within eps/n of it. T must lie in [sum a_n, sum b_n].
NormTargetResult norm_target_select(const std::vector<Bound>& bounds, const Rational& T, const PowerOfTwoGrid& grid,
                                    const Rational& eps);
NormTargetResult norm_target_select(const std::vector<Bound>& bounds, const Rational& T, const RationalGrid& grid,
                                    const Rational& eps, const PickFilter& admissible = {});

// The Gauss norm exponent a plan's prescription produces:
// -(sum k_i rho_i + sum (M_j + 1) sigma_j).
Rational planned_norm_exponent(const Prescription& p, const StagePlan& plan);

// Replaces the separators of `plan` so the constructed function has Gauss norm
// within eps (in exponent) of `norm`. Separator values are least-denominator
// rationals with denominator at most d times the block weight.
StagePlan plan_for_norm(const Prescription& p, const StagePlan& plan, const Mag& norm, std::int64_t d,
                        const Rational& eps, const std::vector<Mag>& forbidden = {});

} // namespace nadisk
