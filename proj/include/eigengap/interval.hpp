// Certified enclosures.
//
// Interval keeps dyadic endpoints (BigFloat) and rounds every operation
// outward, so the exact value of any expression built from enclosed inputs
// stays inside the result.  DInterval is the same idea on plain doubles with
// one-ulp widening; it backs the fast inertia path and is sound but wide.

#pragma once

#include "eigengap/bigfloat.hpp"

#include <cmath>
#include <limits>

namespace eigengap {

class Interval {
public:
    Interval() = default;
    Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (!(lo_.is_nan() || hi_.is_nan()) && lo_.cmp(hi_) > 0)
            throw Error("interval endpoints out of order");
    }

    static Interval point_dyadic(const Dyadic& d) {
        BigFloat f = d.to_bigfloat();
        return Interval(f, f);
    }
    static Interval of_dyadics(const Dyadic& lo, const Dyadic& hi) {
        return Interval(lo.to_bigfloat(), hi.to_bigfloat());
    }
    static Interval of_long(long v) {
        return Interval(BigFloat::of_long(v), BigFloat::of_long(v));
    }
    static Interval of_mpz(const mpz_class& z, mpfr_prec_t prec = 128) {
        return Interval(BigFloat::of_mpz(z, prec, MPFR_RNDD), BigFloat::of_mpz(z, prec, MPFR_RNDU));
    }
    static Interval of_mpq(const mpq_class& q, mpfr_prec_t prec = 128) {
        return Interval(BigFloat::of_mpq(q, prec, MPFR_RNDD), BigFloat::of_mpq(q, prec, MPFR_RNDU));
    }
    static Interval of_double(double d) {
        BigFloat f = BigFloat::of_double(d);
        return Interval(f, f);
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }

    double lo_double() const { return lo_.to_double(MPFR_RNDD); }
    double hi_double() const { return hi_.to_double(MPFR_RNDU); }

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool is_positive() const { return lo_.sign() > 0; }
    bool is_negative() const { return hi_.sign() < 0; }

    BigFloat width(mpfr_prec_t prec = 64) const {
        BigFloat w(prec);
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return w;
    }
    double width_double() const { return width().to_double(MPFR_RNDU); }

    std::string to_string(int digits = 17) const {
        return "[" + lo_.to_decimal(digits, MPFR_RNDD) + ", " + hi_.to_decimal(digits, MPFR_RNDU) + "]";
    }

private:
    BigFloat lo_, hi_;
};

inline Interval iadd(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_add(lo.raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval isub(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_sub(lo.raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval ineg(const Interval& a) {
    BigFloat lo(a.hi().prec()), hi(a.lo().prec());
    mpfr_neg(lo.raw(), a.hi().raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval imul(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    BigFloat lo(prec), hi(prec), t(prec);
    bool first = true;
    for (auto* x : as)
        for (auto* y : bs) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || t.cmp(lo) < 0) lo = t;
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || t.cmp(hi) > 0) hi = t;
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

// Denominator must have definite sign.
inline Interval idiv(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    if (b.contains_zero()) throw Error("interval division by interval containing zero");
    mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    BigFloat lo(prec), hi(prec), t(prec);
    bool first = true;
    for (auto* x : as)
        for (auto* y : bs) {
            mpfr_div(t.raw(), x, y, MPFR_RNDD);
            if (first || t.cmp(lo) < 0) lo = t;
            mpfr_div(t.raw(), x, y, MPFR_RNDU);
            if (first || t.cmp(hi) > 0) hi = t;
            first = false;
        }
    return Interval(std::move(lo), std::move(hi));
}

inline Interval iinv(const Interval& a, mpfr_prec_t prec) {
    return idiv(Interval::of_long(1), a, prec);
}

// Nonnegative base; raises both endpoints with directed rounding.
inline Interval ipow_ui(const Interval& a, unsigned long k, mpfr_prec_t prec) {
    if (k == 0) return Interval::of_long(1);
    if (a.lo().sign() < 0) {
        if (k % 2 == 1) {
            BigFloat lo(prec), hi(prec);
            mpfr_pow_ui(lo.raw(), a.lo().raw(), k, MPFR_RNDD);
            mpfr_pow_ui(hi.raw(), a.hi().raw(), k, MPFR_RNDU);
            return Interval(std::move(lo), std::move(hi));
        }
        // even power of a sign-spanning or negative interval
        BigFloat alo_abs(prec), ahi_abs(prec);
        mpfr_abs(alo_abs.raw(), a.lo().raw(), MPFR_RNDU);
        mpfr_abs(ahi_abs.raw(), a.hi().raw(), MPFR_RNDU);
        BigFloat m = alo_abs.cmp(ahi_abs) > 0 ? alo_abs : ahi_abs;
        BigFloat hi(prec);
        mpfr_pow_ui(hi.raw(), m.raw(), k, MPFR_RNDU);
        BigFloat lo(prec);
        if (a.contains_zero()) {
            mpfr_set_zero(lo.raw(), 1);
        } else {
            BigFloat m2 = alo_abs.cmp(ahi_abs) < 0 ? alo_abs : ahi_abs;
            mpfr_pow_ui(lo.raw(), m2.raw(), k, MPFR_RNDD);
        }
        return Interval(std::move(lo), std::move(hi));
    }
    BigFloat lo(prec), hi(prec);
    mpfr_pow_ui(lo.raw(), a.lo().raw(), k, MPFR_RNDD);
    mpfr_pow_ui(hi.raw(), a.hi().raw(), k, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

inline Interval isqrt(const Interval& a, mpfr_prec_t prec) {
    if (a.lo().sign() < 0) throw Error("interval sqrt of negative value");
    BigFloat lo(prec), hi(prec);
    mpfr_sqrt(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

// Enclosure of base^(p/q) for integer base >= 2 and rational exponent
// (used for the n^{-eps n} target of the second extremal family).
inline Interval ipow_rational(long base, const mpq_class& exponent, mpfr_prec_t prec) {
    if (base < 2) throw Error("ipow_rational: base must be >= 2");
    BigFloat ln_lo(prec), ln_hi(prec);
    mpfr_set_si(ln_lo.raw(), base, MPFR_RNDD);
    mpfr_log(ln_lo.raw(), ln_lo.raw(), MPFR_RNDD);
    mpfr_set_si(ln_hi.raw(), base, MPFR_RNDU);
    mpfr_log(ln_hi.raw(), ln_hi.raw(), MPFR_RNDU);
    Interval ln(ln_lo, ln_hi);
    Interval e = Interval::of_mpq(exponent, prec);
    Interval x = imul(ln, e, prec);
    BigFloat lo(prec), hi(prec);
    mpfr_exp(lo.raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), x.hi().raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

// ---------------------------------------------------------------------------
// Double intervals with one-ulp outward widening.  Round-to-nearest results
// are within half an ulp of the exact value, so stepping one ulp out on each
// side restores a guaranteed enclosure without touching the FPU rounding mode.

struct DInterval {
    double lo = 0.0, hi = 0.0;
};

namespace detail {
inline double step_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double step_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
}  // namespace detail

inline DInterval di_point(double x) { return {x, x}; }

inline DInterval di_add(const DInterval& a, const DInterval& b) {
    return {detail::step_down(a.lo + b.lo), detail::step_up(a.hi + b.hi)};
}
inline DInterval di_sub(const DInterval& a, const DInterval& b) {
    return {detail::step_down(a.lo - b.hi), detail::step_up(a.hi - b.lo)};
}
inline DInterval di_mul(const DInterval& a, const DInterval& b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {detail::step_down(lo), detail::step_up(hi)};
}
// Caller guarantees b excludes zero.
inline DInterval di_div(const DInterval& a, const DInterval& b) {
    double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return {detail::step_down(lo), detail::step_up(hi)};
}

inline bool di_finite(const DInterval& a) {
    return std::isfinite(a.lo) && std::isfinite(a.hi);
}

}  // namespace eigengap
