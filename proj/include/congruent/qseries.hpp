#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "congruent/rational.hpp"

namespace congruent {

// Truncated Laurent series in q with exact rational coefficients, stored from
// lowest_exponent up to cutoff inclusive. Arithmetic never reads beyond the
// cutoff; products truncate to the exponent range both operands can certify,
// which keeps truncation independent of association order.
class QSeries {
public:
    QSeries(long lowest_exponent, long cutoff)
        : low_(lowest_exponent), cutoff_(cutoff) {
        if (cutoff < lowest_exponent) throw std::domain_error("QSeries: cutoff below lowest exponent");
        coef_.assign(size_t(cutoff - lowest_exponent + 1), Rat(0));
    }

    static QSeries constant(const Rat& c, long cutoff) {
        QSeries s(0, cutoff);
        s.set(0, c);
        return s;
    }

    long lowest_exponent() const { return low_; }
    long cutoff() const { return cutoff_; }

    const Rat& coeff(long k) const {
        static const Rat zero(0);
        if (k < low_ || k > cutoff_) return zero;
        return coef_[size_t(k - low_)];
    }

    void set(long k, const Rat& v) {
        if (k < low_ || k > cutoff_) throw std::out_of_range("QSeries::set: exponent out of range");
        coef_[size_t(k - low_)] = v;
    }

    QSeries scaled(const Rat& c) const {
        QSeries r = *this;
        for (auto& v : r.coef_) v *= c;
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        long low = std::min(a.low_, b.low_);
        long cut = std::min(a.cutoff_, b.cutoff_);
        QSeries r(low, cut);
        for (long k = low; k <= cut; ++k) r.set(k, a.coeff(k) + b.coeff(k));
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        return a + b.scaled(Rat(-1));
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        long low = a.low_ + b.low_;
        long cut = std::min(a.cutoff_ + b.low_, b.cutoff_ + a.low_);
        QSeries r(low, cut);
        for (long i = a.low_; i <= a.cutoff_; ++i) {
            if (a.coeff(i) == 0) continue;
            for (long j = b.low_; j <= b.cutoff_ && i + j <= cut; ++j) {
                if (b.coeff(j) == 0) continue;
                r.set(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
            }
        }
        return r;
    }

    // Multiplicative inverse; the coefficient at the lowest exponent must be
    // a unit (nonzero).
    QSeries inverse() const {
        const Rat& u0 = coef_.front();
        if (u0 == 0) throw std::domain_error("QSeries::inverse: leading coefficient is zero");
        long len = cutoff_ - low_;
        QSeries r(-low_, -low_ + len);
        r.set(-low_, 1 / u0);
        for (long k = 1; k <= len; ++k) {
            Rat s(0);
            for (long j = 1; j <= k; ++j) s += coeff(low_ + j) * r.coeff(-low_ + k - j);
            r.set(-low_ + k, -s / u0);
        }
        return r;
    }

    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.low_ == b.low_ && a.cutoff_ == b.cutoff_ && a.coef_ == b.coef_;
    }

private:
    long low_;
    long cutoff_;
    std::vector<Rat> coef_;
};

}  // namespace congruent
