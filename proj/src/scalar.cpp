#include "nadisk/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "nadisk/error.hpp"

namespace nadisk {

namespace {

using Trunc = Scalar::Trunc;

// nullopt is +infinity throughout.
Trunc tmin(const Trunc& a, const Trunc& b) {
    if (!a) return b;
    if (!b) return a;
    return min(*a, *b);
}

Trunc tadd(const Trunc& a, const Trunc& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

bool below(const Rational& e, const Trunc& t) { return !t || e < *t; }

} // namespace

Scalar::Scalar(long n) {
    if (n != 0) terms_.push_back({Rational(0), mpq_class(n)});
}

Scalar::Scalar(const mpq_class& a) {
    if (a != 0) terms_.push_back({Rational(0), a});
}

Scalar Scalar::monomial(const mpq_class& a, const Rational& q) {
    Scalar s;
    if (a != 0) s.terms_.push_back({q, a});
    return s;
}

Scalar Scalar::big_o(const Rational& trunc) {
    Scalar s;
    s.trunc_ = trunc;
    return s;
}

Scalar Scalar::from_terms(std::vector<Term> terms, Trunc trunc) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.exp < b.exp; });
    Scalar s;
    s.trunc_ = trunc;
    for (auto& t : terms) {
        if (!below(t.exp, trunc)) break;
        if (!s.terms_.empty() && s.terms_.back().exp == t.exp) {
            s.terms_.back().coeff += t.coeff;
        } else {
            if (!s.terms_.empty() && s.terms_.back().coeff == 0) s.terms_.pop_back();
            s.terms_.push_back(std::move(t));
        }
    }
    if (!s.terms_.empty() && s.terms_.back().coeff == 0) s.terms_.pop_back();
    return s;
}

std::optional<Rational> Scalar::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp;
}

std::optional<Rational> Scalar::valuation_lower_bound() const {
    if (!terms_.empty()) return terms_.front().exp;
    return trunc_;
}

Mag Scalar::mag() const {
    if (!terms_.empty()) return Mag::from_exponent(terms_.front().exp);
    if (!trunc_) return Mag::zero();
    throw Error(ErrorKind::IndeterminateMag, "all known terms vanish below t^" + trunc_->str());
}

Mag Scalar::mag_upper_bound() const {
    if (!terms_.empty()) return Mag::from_exponent(terms_.front().exp);
    if (!trunc_) return Mag::zero();
    return Mag::from_exponent(*trunc_);
}

Scalar Scalar::truncated(const Rational& order) const {
    if (trunc_ && *trunc_ <= order) return *this;
    Scalar s;
    s.trunc_ = order;
    for (const auto& t : terms_) {
        if (!(t.exp < order)) break;
        s.terms_.push_back(t);
    }
    return s;
}

Scalar Scalar::capped(const Rational& order) const {
    if (!trunc_ && (terms_.empty() || terms_.back().exp < order)) return *this;
    return truncated(order);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& t : s.terms_) t.coeff = -t.coeff;
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar s;
    s.trunc_ = tmin(a.trunc_, b.trunc_);
    s.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    auto push = [&](const Term& t) {
        if (below(t.exp, s.trunc_)) s.terms_.push_back(t);
    };
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
            push(*i++);
        } else if (i == a.terms_.end() || j->exp < i->exp) {
            push(*j++);
        } else {
            mpq_class c = i->coeff + j->coeff;
            if (c != 0 && below(i->exp, s.trunc_)) s.terms_.push_back({i->exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar s;
    s.trunc_ = tmin(tadd(a.valuation_lower_bound(), b.trunc_), tadd(b.valuation_lower_bound(), a.trunc_));
    if (a.terms_.empty() || b.terms_.empty()) return s;
    if (b.terms_.size() == 1) {
        const auto& m = b.terms_.front();
        for (const auto& t : a.terms_) {
            Rational e = t.exp + m.exp;
            if (!below(e, s.trunc_)) break;
            s.terms_.push_back({e, t.coeff * m.coeff});
        }
        return s;
    }
    if (a.terms_.size() == 1) return b * a;

    struct Idx {
        Rational exp;
        std::uint32_t i, j;
    };
    std::vector<Idx> idx;
    for (std::uint32_t i = 0; i < a.terms_.size(); ++i) {
        for (std::uint32_t j = 0; j < b.terms_.size(); ++j) {
            Rational e = a.terms_[i].exp + b.terms_[j].exp;
            if (!below(e, s.trunc_)) break;
            idx.push_back({e, i, j});
        }
    }
    std::sort(idx.begin(), idx.end(), [](const Idx& x, const Idx& y) { return x.exp < y.exp; });
    mpq_class acc;
    for (std::size_t k = 0; k < idx.size();) {
        std::size_t l = k;
        acc = 0;
        while (l < idx.size() && idx[l].exp == idx[k].exp) {
            acc += a.terms_[idx[l].i].coeff * b.terms_[idx[l].j].coeff;
            ++l;
        }
        if (acc != 0) s.terms_.push_back({idx[k].exp, acc});
        k = l;
    }
    return s;
}

Scalar Scalar::scaled(const mpq_class& c) const {
    if (c == 0) {
        Scalar z;
        return z;
    }
    Scalar s = *this;
    for (auto& t : s.terms_) t.coeff *= c;
    return s;
}

Scalar Scalar::shifted(const Rational& q) const {
    Scalar s = *this;
    for (auto& t : s.terms_) t.exp += q;
    if (s.trunc_) *s.trunc_ += q;
    return s;
}

Scalar Scalar::pow(unsigned k) const {
    Scalar result(1L);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

std::string Scalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << (t.coeff < 0 ? " - " : " + ");
        else if (t.coeff < 0) os << "-";
        first = false;
        mpq_class c = abs(t.coeff);
        if (t.exp.is_zero()) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "t";
        if (t.exp != Rational(1)) os << "^(" << t.exp.str() << ")";
    }
    if (trunc_) {
        if (!first) os << " + ";
        os << "O(t^(" << trunc_->str() << "))";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

Mag mag(const Scalar& x) { return x.mag(); }

Scalar divide(const Scalar& x, const Scalar& y, const Scalar::Trunc& order) {
    if (y.is_exact_zero()) throw Error(ErrorKind::InvalidArgument, "division by exact zero");
    if (!y.is_determinate()) throw Error(ErrorKind::IndeterminateMag, "divisor has no known leading term");
    if (x.is_exact_zero()) return Scalar();

    const Term& lead = y.terms().front();
    const Rational v = lead.exp;
    Trunc rel_y = y.trunc() ? Trunc(*y.trunc() - v) : std::nullopt;
    Trunc bound = tmin(order, tmin(x.trunc() ? Trunc(*x.trunc() - v) : std::nullopt,
                                   tadd(x.valuation_lower_bound() ? Trunc(*x.valuation_lower_bound() - v)
                                                                  : std::nullopt,
                                        rel_y)));

    if (y.terms().size() == 1) {
        // monomial divisor: termwise, as precise as the inputs allow
        mpq_class c = 1 / lead.coeff;
        Scalar q = x.shifted(-v).scaled(c);
        Trunc input_bound = tmin(x.trunc() ? Trunc(*x.trunc() - v) : std::nullopt,
                                 tadd(*x.valuation_lower_bound() - v, rel_y));
        return q.truncated(input_bound);
    }

    // Long division with the remainder kept in an ordered map.
    std::optional<Rational> exact_limit;
    if (!bound) {
        // no truncation requested: only terminating divisions are allowed
        exact_limit = x.terms().back().exp - v;
    }
    std::map<Rational, mpq_class> rem;
    for (const auto& t : x.terms()) rem.emplace(t.exp, t.coeff);
    std::vector<Term> quot;
    const mpq_class lead_inv = 1 / lead.coeff;
    bool dropped = false;
    while (!rem.empty()) {
        auto it = rem.begin();
        Rational qe = it->first - v;
        if (bound && !(qe < *bound)) break;
        if (exact_limit && *exact_limit < qe)
            throw Error(ErrorKind::InvalidArgument, "non-terminating division needs a truncation order");
        mpq_class qc = it->second * lead_inv;
        rem.erase(it);
        for (std::size_t k = 1; k < y.terms().size(); ++k) {
            Rational e = qe + y.terms()[k].exp;
            if (bound && !(e < *bound + v)) {
                dropped = true;
                break;
            }
            auto [pos, inserted] = rem.try_emplace(e);
            pos->second -= qc * y.terms()[k].coeff;
            if (pos->second == 0) rem.erase(pos);
        }
        quot.push_back({qe, std::move(qc)});
    }
    // an exhausted remainder means the quotient is exact
    if (rem.empty() && !dropped && x.is_exact() && y.is_exact()) return Scalar::from_terms(std::move(quot));
    return Scalar::from_terms(std::move(quot), bound);
}

Scalar inv(const Scalar& x, const Scalar::Trunc& order) { return divide(Scalar(1L), x, order); }

Scalar sample_point(const Mag& m) {
    if (m.is_zero()) return Scalar();
    return Scalar::monomial(1, m.exponent());
}

} // namespace nadisk
