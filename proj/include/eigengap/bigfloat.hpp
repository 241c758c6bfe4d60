// Extended-precision scalars used by the certification machinery:
//   BigFloat — value-semantic wrapper over mpfr_t (a dyadic rational with
//              explicit precision and directed rounding on every operation)
//   Dyadic   — an exact dyadic rational m * 2^e on top of GMP integers;
//              bisection probes live here so exact backends never round.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace eigengap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of_double(double d, mpfr_prec_t prec = 64) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, d, MPFR_RNDN);  // exact: doubles fit in 53 bits
        return r;
    }
    static BigFloat of_long(long v, mpfr_prec_t prec = 64) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat of_mpz(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
        return r;
    }
    static BigFloat of_mpq(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
    bool operator==(const BigFloat& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

    int cmp_si(long v) const { return mpfr_cmp_si(v_, v); }
    int cmp_d(double d) const { return mpfr_cmp_d(v_, d); }

    // Scientific-notation decimal rendering, rounded in the given direction
    // so serialized enclosures stay enclosures.
    std::string to_decimal(int significant_digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const {
        if (is_nan()) return "nan";
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*R*e", significant_digits - 1, rnd, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

// Exact dyadic rational: num * 2^exp.  Probes handed to the exact counting
// backends are Dyadic, which keeps every comparison decision exact.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long v) : num_(v), exp_(0) { normalize(); }
    Dyadic(mpz_class num, long exp) : num_(std::move(num)), exp_(exp) { normalize(); }

    static Dyadic from_double(double d) {
        if (d == 0.0) return Dyadic();
        int e = 0;
        double m = std::frexp(d, &e);  // d = m * 2^e, |m| in [0.5, 1)
        long mi = static_cast<long>(std::ldexp(m, 53));
        return Dyadic(mpz_class(mi), e - 53);
    }

    const mpz_class& num() const { return num_; }
    long exp2() const { return exp_; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    int cmp(const Dyadic& o) const {
        if (sign() != o.sign()) return sign() < o.sign() ? -1 : 1;
        mpz_class a = num_, b = o.num_;
        if (exp_ >= o.exp_) a <<= static_cast<unsigned long>(exp_ - o.exp_);
        else b <<= static_cast<unsigned long>(o.exp_ - exp_);
        return ::cmp(a, b) < 0 ? -1 : (::cmp(a, b) > 0 ? 1 : 0);
    }
    bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
    bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
    bool operator==(const Dyadic& o) const { return cmp(o) == 0; }

    Dyadic operator-() const { return Dyadic(-num_, exp_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        long e = std::min(a.exp_, b.exp_);
        mpz_class x = a.num_, y = b.num_;
        x <<= static_cast<unsigned long>(a.exp_ - e);
        y <<= static_cast<unsigned long>(b.exp_ - e);
        return Dyadic(x + y, e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    static Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
        Dyadic s = a + b;
        return Dyadic(s.num_, s.exp_ - 1);
    }

    double to_double() const { return to_bigfloat(64).to_double(); }

    BigFloat to_bigfloat(mpfr_prec_t min_prec = 64) const {
        mpfr_prec_t need = std::max<mpfr_prec_t>(min_prec, mpz_sizeinbase(num_.get_mpz_t(), 2) + 2);
        BigFloat r(need);
        mpfr_set_z_2exp(r.raw(), num_.get_mpz_t(), exp_, MPFR_RNDN);  // exact
        return r;
    }

    static Dyadic from_bigfloat(const BigFloat& f) {
        if (mpfr_zero_p(f.raw())) return Dyadic();
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), f.raw());
        return Dyadic(m, static_cast<long>(e));
    }

    // Rewrites t = a / 2^k with k >= 0; the exact backends work on 2^k*A - a*I.
    void as_scaled_int(mpz_class& a, unsigned long& k) const {
        if (exp_ >= 0) {
            a = num_ << static_cast<unsigned long>(exp_);
            k = 0;
        } else {
            a = num_;
            k = static_cast<unsigned long>(-exp_);
        }
    }

    mpq_class to_mpq() const {
        mpz_class a;
        unsigned long k;
        as_scaled_int(a, k);
        mpz_class den = 1;
        den <<= k;
        mpq_class q(a, den);
        q.canonicalize();
        return q;
    }

    // True when the value is exactly representable as an IEEE double.
    bool fits_double() const {
        double d = to_double();
        if (!std::isfinite(d)) return false;
        return from_double(d).cmp(*this) == 0;
    }

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        unsigned long tz = mpz_scan1(num_.get_mpz_t(), 0);
        if (tz > 0) {
            num_ >>= tz;
            exp_ += static_cast<long>(tz);
        }
    }

    mpz_class num_;
    long exp_;
};

}  // namespace eigengap
