#include "nadisk/corpus.hpp"

#include <algorithm>

namespace nadisk::corpus {

Scalar point_on_circle(Rng& rng, const Rational& rho, int extra) {
    std::vector<Term> ts;
    ts.push_back({rho, mpq_class(rng.coeff(3))});
    int k = static_cast<int>(rng.uniform(0, extra));
    for (int i = 0; i < k; ++i) ts.push_back({rho + rng.exponent(Rational(1, 6), 2), mpq_class(rng.coeff(3))});
    return Scalar::from_terms(std::move(ts));
}

ZeroProfile random_profile(Rng& rng, int factors, int circles) {
    std::vector<Rational> radii;
    int nc = static_cast<int>(rng.uniform(1, circles));
    for (int i = 0; i < nc; ++i) radii.push_back(rng.exponent(Rational(1, 6), 2));
    ZeroProfile p;
    p.unit_mag = Mag::from_exponent(rng.exponent(-2, 2));
    for (int i = 0; i < factors;) {
        Rational rho = radii[static_cast<std::size_t>(rng.uniform(0, nc - 1))];
        Scalar w = point_on_circle(rng, rho);
        std::int64_t m = std::min<std::int64_t>(rng.uniform(1, 2), factors - i);
        bool merged = false;
        for (auto& [z, mult] : p.zeros) {
            if (z == w) {
                mult += m;
                merged = true;
            }
        }
        if (!merged) p.zeros.emplace_back(w, m);
        i += static_cast<int>(m);
    }
    return p;
}

std::vector<Rational> profile_circles(const ZeroProfile& p) {
    std::vector<Rational> out;
    for (const auto& z : p.zeros) out.push_back(*z.first.valuation());
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return b < a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Scalar point_near(Rng& rng, const Scalar& w, const Rational& d) {
    return w + Scalar::monomial(rng.coeff(3), d);
}

Scalar random_point(Rng& rng, const ZeroProfile& p) {
    auto circles = profile_circles(p);
    std::int64_t mode = circles.empty() ? 0 : rng.uniform(0, 3);
    if (mode == 0) return point_on_circle(rng, rng.exponent(Rational(1, 6), 3));
    if (mode == 1) {
        Rational rho = circles[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(circles.size()) - 1))];
        return point_on_circle(rng, rho);
    }
    const auto& z = p.zeros[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.zeros.size()) - 1))];
    if (mode == 2) return z.first;
    Rational v = *z.first.valuation();
    return point_near(rng, z.first, v + rng.exponent(Rational(1, 6), 2));
}

} // namespace nadisk::corpus

namespace nadisk::corpus {

std::vector<Target> random_targets(Rng& rng, int max_circles, int max_per_circle) {
    int nc = static_cast<int>(rng.uniform(1, max_circles));
    std::vector<Rational> rhos;
    rhos.push_back(rng.exponent(3, 4));
    while (static_cast<int>(rhos.size()) < nc) {
        Rational r = rng.exponent(Rational(1, 6), 1);
        if (std::find(rhos.begin(), rhos.end(), r) == rhos.end()) rhos.push_back(r);
    }
    std::vector<Target> out;
    for (const Rational& rho : rhos) {
        // the deep circle carries a single target with a tight-but-not-tiny tolerance
        bool deep = &rho == &rhos.front() && rhos.size() > 2;
        int k = deep ? 1 : static_cast<int>(rng.uniform(1, max_per_circle));
        std::vector<std::int64_t> leads{1, -1, 2, -2, 3, -3};
        for (int j = 0; j < k; ++j) {
            std::int64_t lead = leads[static_cast<std::size_t>(rng.uniform(j, 5))];
            std::swap(leads[static_cast<std::size_t>(j)], *std::find(leads.begin(), leads.end(), lead));
            std::vector<Term> ts{{rho, mpq_class(lead)}};
            if (rng.coin()) ts.push_back({rho + rng.exponent(Rational(1, 6), 1), mpq_class(rng.coeff(3))});
            Rational q = deep ? rng.exponent(rho + Rational(1, 6), rho + Rational(1, 2))
                              : rng.exponent(rho + Rational(1, 6), std::min(rho + Rational(2), Rational(6)));
            out.push_back({Scalar::from_terms(std::move(ts)), Mag::from_exponent(q)});
        }
        // occasionally a close pair on the same circle
        if (!deep && k < max_per_circle && rng.coin()) {
            Scalar base = out.back().center;
            Rational d = rho + rng.exponent(Rational(1, 6), 1);
            Scalar z = base + Scalar::monomial(rng.coeff(2), d);
            Mag eps = Mag::from_exponent(d + Rational(1, 6) + rng.exponent(0, 1));
            out.back().eps = std::min(out.back().eps, eps);
            out.push_back({z, eps});
        }
    }
    return out;
}

} // namespace nadisk::corpus
