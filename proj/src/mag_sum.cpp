#include "nadisk/mag_sum.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <sstream>

#include "nadisk/error.hpp"

namespace nadisk {

namespace {

constexpr std::int64_t kMaxShift = 1 << 20;
constexpr mpfr_prec_t kMaxPrec = 1 << 18;

// RAII wrapper for an mpfr_t.
struct Fr {
    mpfr_t v;
    explicit Fr(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Fr() { mpfr_clear(v); }
    Fr(const Fr&) = delete;
    Fr& operator=(const Fr&) = delete;
};

// Encloses 2^x in [lo, hi].
void pow2_bounds(const Rational& x, Fr& lo, Fr& hi, mpfr_prec_t prec) {
    Fr xl(prec), xh(prec);
    mpq_class q(x.num(), x.den());
    mpfr_set_q(xl.v, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(xh.v, q.get_mpq_t(), MPFR_RNDU);
    mpfr_exp2(lo.v, xl.v, MPFR_RNDD);
    mpfr_exp2(hi.v, xh.v, MPFR_RNDU);
}

} // namespace

MagSum& MagSum::add_pow2(const Rational& x, const mpq_class& c) {
    if (c != 0) terms_.push_back({c, x});
    return *this;
}

MagSum& MagSum::add(const Mag& m, const mpq_class& c) {
    if (m.is_zero()) return *this;
    return add_pow2(-m.exponent(), c);
}

MagSum& MagSum::add(const MagSum& o, const mpq_class& c) {
    for (const auto& t : o.terms_) add_pow2(t.exp, t.coeff * c);
    return *this;
}

MagSum MagSum::operator-() const { return scaled(-1); }

MagSum MagSum::scaled(const mpq_class& c) const {
    MagSum r;
    r.add(*this, c);
    return r;
}

bool MagSum::is_zero() const {
    // group on frac(x): sum_i c_i 2^floor(x_i) per class must vanish
    std::map<Rational, std::vector<const Term*>> classes;
    for (const auto& t : terms_) classes[t.exp - Rational(t.exp.floor())].push_back(&t);
    for (const auto& [frac, ts] : classes) {
        std::int64_t base = INT64_MAX;
        for (const Term* t : ts) base = std::min(base, t->exp.floor());
        mpq_class acc = 0;
        for (const Term* t : ts) {
            std::int64_t sh = t->exp.floor() - base;
            if (sh > kMaxShift) throw Error(ErrorKind::InvalidArgument, "exponent spread too large");
            mpz_class p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(sh));
            acc += t->coeff * p2;
        }
        if (acc != 0) return false;
    }
    return true;
}

int MagSum::sign() const {
    if (terms_.empty() || is_zero()) return 0;
    for (mpfr_prec_t prec = 64; prec <= kMaxPrec; prec *= 2) {
        Fr sum_lo(prec), sum_hi(prec), p_lo(prec), p_hi(prec), tl(prec), th(prec);
        mpfr_set_zero(sum_lo.v, 1);
        mpfr_set_zero(sum_hi.v, 1);
        for (const auto& t : terms_) {
            pow2_bounds(t.exp, p_lo, p_hi, prec);
            Fr cl(prec), ch(prec);
            mpfr_set_q(cl.v, t.coeff.get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(ch.v, t.coeff.get_mpq_t(), MPFR_RNDU);
            if (t.coeff > 0) {
                mpfr_mul(tl.v, cl.v, p_lo.v, MPFR_RNDD);
                mpfr_mul(th.v, ch.v, p_hi.v, MPFR_RNDU);
            } else {
                mpfr_mul(tl.v, cl.v, p_hi.v, MPFR_RNDD);
                mpfr_mul(th.v, ch.v, p_lo.v, MPFR_RNDU);
            }
            mpfr_add(sum_lo.v, sum_lo.v, tl.v, MPFR_RNDD);
            mpfr_add(sum_hi.v, sum_hi.v, th.v, MPFR_RNDU);
        }
        if (mpfr_sgn(sum_lo.v) > 0) return 1;
        if (mpfr_sgn(sum_hi.v) < 0) return -1;
    }
    throw Error(ErrorKind::InvalidArgument, "sign undecided at maximum precision");
}

double MagSum::to_double() const {
    double s = 0;
    for (const auto& t : terms_) s += t.coeff.get_d() * std::exp2(t.exp.to_double());
    return s;
}

std::string MagSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << terms_[i].coeff.get_str() << "*2^(" << terms_[i].exp.str() << ")";
    }
    return os.str();
}

int compare(const MagSum& a, const MagSum& b) { return (a - b).sign(); }

} // namespace nadisk
