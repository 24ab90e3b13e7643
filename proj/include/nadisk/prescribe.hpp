#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nadisk/mag.hpp"
#include "nadisk/scalar.hpp"
#include "nadisk/series.hpp"

namespace nadisk {

// Coefficients b_0..b_{n-1} of the polynomial through (nodes[i], values[i]),
// by Newton divided differences with divisions truncated at `order`.
std::vector<Scalar> vandermonde_solve(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values,
                                      const Rational& order);

struct Target {
    Scalar center;
    Mag eps;
};

// Targets grouped by circle. Circle i has exponent rho[i] (R_i = 2^(-rho[i])),
// increasing in radius, count k[i], tolerance delta[i] and the indices of its
// targets.
class Prescription {
public:
    explicit Prescription(std::vector<Target> targets);

    const std::vector<Target>& targets() const { return targets_; }
    std::size_t circles() const { return rho_.size(); }
    const Rational& rho(std::size_t i) const { return rho_[i]; }
    Mag radius(std::size_t i) const { return Mag::from_exponent(rho_[i]); }
    std::int64_t k(std::size_t i) const { return static_cast<std::int64_t>(members_[i].size()); }
    const Mag& delta(std::size_t i) const { return delta_[i]; }
    const std::vector<std::size_t>& members(std::size_t i) const { return members_[i]; }
    std::size_t circle_of(std::size_t target) const { return circle_of_[target]; }
    // c = prod |z_n|, as an exponent.
    const Rational& c_exponent() const { return gamma_; }
    Rational max_exponent() const;

private:
    std::vector<Target> targets_;
    std::vector<Rational> rho_;
    std::vector<Mag> delta_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::size_t> circle_of_;
    Rational gamma_;
};

// Blocks of consecutive circles: block n covers circles breakpoints[n-1]..breakpoints[n]-1
// (0-based, breakpoints[-1] = 0); the last breakpoint equals the circle count.
// separators[j] has exponent strictly between the last circle of block j+1 and
// the first circle of block j+2 (j = 0 .. blocks-3).
struct StagePlan {
    std::vector<std::size_t> breakpoints;
    std::vector<std::int64_t> block_sizes;
    std::vector<Rational> separators;

    std::size_t blocks() const { return breakpoints.size(); }
    // Number of polynomials P_1, P_2, ... built.
    std::size_t stages() const { return blocks() < 2 ? 1 : blocks() - 1; }
    Mag separator(std::size_t j) const { return Mag::from_exponent(separators[j]); }
};

// stages == 0 picks the largest feasible number of stages.
StagePlan make_plan(const Prescription& p, std::size_t stages, const std::vector<Mag>& forbidden = {});

// Separator exponents a plan may use: the open interval for separator j.
std::pair<Rational, Rational> separator_range(const Prescription& p, const StagePlan& plan, std::size_t j);

// Least-denominator exponent strictly inside (lo, hi) avoiding `forbidden`.
Rational pick_exponent(const Rational& lo, const Rational& hi, const std::vector<Rational>& forbidden);

struct StageAudit {
    std::size_t stage = 0;
    bool preserved = false;       // Newton data below the middle block unchanged
    bool separator_count = false; // M + 1 zeros on the separator circle
    bool nodes_vanish = false;    // no known nonzero term of P_2 at the nodes
    bool outer_counts = false;    // k_i zeros on the outer circles
    bool tail_counts = false;     // counts of Q match P_2 beyond deg P_1
    bool ok() const { return preserved && separator_count && nodes_vanish && outer_counts && tail_counts; }
};

struct ExtendResult {
    PowerSeries p2;
    PowerSeries q;
    StageAudit audit;
};

// One extension step: P_2 = P_1 + z^(deg P_1 + 1) Q with Q interpolating
// -P_1/z^(deg P_1 + 1) on middle ∪ outer ∪ {sample_point(S)}, value 0 on the
// middle zeros (which P_1 already has). Throws VerificationFailed when an
// audit fails and SeparatorCollision when S is already a critical radius.
ExtendResult extend_stage(const PowerSeries& p1, const std::vector<Scalar>& middle, const std::vector<Scalar>& outer,
                          const Mag& s, const Rational& order);

struct TargetCheck {
    std::size_t index = 0;
    bool pass = false;
    std::string detail;
};

struct CircleCheck {
    Mag radius = Mag::one();
    std::int64_t expected = 0;
    std::int64_t found = -1; // -1: uncertified
    bool pass = false;
};

struct VerifyReport {
    std::vector<TargetCheck> targets;
    std::vector<CircleCheck> circles;
    bool all_pass() const;
};

VerifyReport verify_prescription(const PowerSeries& f, const Prescription& p);

struct PrescribeResult {
    PowerSeries f;
    StagePlan plan;
    std::vector<StageAudit> audits;
    Rational working_order;
    VerifyReport report;
    // 1 / (prod R_i^(k_i) * prod S_j^(M_j + 1)), the Gauss norm the construction predicts.
    Mag expected_norm = Mag::one();
};

PrescribeResult prescribe(const Prescription& p, const StagePlan& plan);

} // namespace nadisk
