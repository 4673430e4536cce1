#include "jue/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace jue {

namespace {

inline void widen(mpfr_ptr v, mpfr_prec_t p) {
    if (mpfr_get_prec(v) < p) mpfr_prec_round(v, p, MPFR_RNDN);
}

}  // namespace

BigReal::BigReal(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a number: " + s);
    }
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator+=(const BigReal& o) { widen(v_, o.prec()); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigReal& BigReal::operator-=(const BigReal& o) { widen(v_, o.prec()); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigReal& BigReal::operator*=(const BigReal& o) { widen(v_, o.prec()); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigReal& BigReal::operator/=(const BigReal& o) { widen(v_, o.prec()); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

std::string BigReal::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

double BigReal::log2_abs() const {
    if (mpfr_zero_p(v_)) return -1e300;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

BigReal BigReal::pi(mpfr_prec_t prec) { BigReal r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
BigReal BigReal::ln2(mpfr_prec_t prec) { BigReal r(prec); mpfr_const_log2(r.v_, MPFR_RNDN); return r; }

BigReal operator+(const BigReal& a, const BigReal& b) { BigReal r(std::max(a.prec(), b.prec())); mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
BigReal operator-(const BigReal& a, const BigReal& b) { BigReal r(std::max(a.prec(), b.prec())); mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
BigReal operator*(const BigReal& a, const BigReal& b) { BigReal r(std::max(a.prec(), b.prec())); mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }
BigReal operator/(const BigReal& a, const BigReal& b) { BigReal r(std::max(a.prec(), b.prec())); mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN); return r; }

#define JUE_UNARY(name, fn) \
    BigReal name(const BigReal& x) { BigReal r(x.prec()); fn(r.get(), x.get(), MPFR_RNDN); return r; }
JUE_UNARY(abs, mpfr_abs)
JUE_UNARY(sqrt, mpfr_sqrt)
JUE_UNARY(exp, mpfr_exp)
JUE_UNARY(log, mpfr_log)
JUE_UNARY(log1p, mpfr_log1p)
JUE_UNARY(sin, mpfr_sin)
JUE_UNARY(cos, mpfr_cos)
JUE_UNARY(gamma, mpfr_gamma)
#undef JUE_UNARY

BigReal lgamma_pos(const BigReal& x) {
    if (x.sign() <= 0) throw std::domain_error("log-gamma needs a positive argument");
    BigReal r(x.prec());
    mpfr_lngamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::max(x.prec(), y.prec()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r(std::max(x.prec(), y.prec()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, long k) {
    BigReal r(x.prec());
    mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

BigReal ldexp(const BigReal& x, long e) {
    BigReal r(x);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

BigReal set_precision(const BigReal& x, mpfr_prec_t prec) { return BigReal(x, prec); }
BigComplex set_precision(const BigComplex& z, mpfr_prec_t prec) {
    return BigComplex(BigReal(z.re, prec), BigReal(z.im, prec));
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal a = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(a);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    // scaled by the larger component of o to keep intermediate magnitudes sane
    if (abs(o.re) >= abs(o.im)) {
        BigReal t = o.im / o.re;
        BigReal d = o.re + o.im * t;
        BigReal a = (re + im * t) / d;
        im = (im - re * t) / d;
        re = std::move(a);
    } else {
        BigReal t = o.re / o.im;
        BigReal d = o.re * t + o.im;
        BigReal a = (re * t + im) / d;
        im = (im * t - re) / d;
        re = std::move(a);
    }
    return *this;
}

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) {
    BigReal r(z.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }
BigComplex conj(const BigComplex& z) { return BigComplex(z.re, -z.im); }

BigComplex expi(const BigReal& t) {
    BigReal s(t.prec()), c(t.prec());
    mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
    return BigComplex(std::move(c), std::move(s));
}

BigComplex exp(const BigComplex& z) { return expi(z.im) * exp(z.re); }

BigComplex log(const BigComplex& z) { return BigComplex(log(abs(z)), arg(z)); }

BigComplex sqrt(const BigComplex& z) {
    if (z.is_zero()) return z;
    BigReal m = abs(z);
    BigReal t = sqrt((m + abs(z.re)) / 2);
    if (z.re.sign() >= 0) return BigComplex(t, z.im / (t * 2));
    BigReal u = abs(z.im) / (t * 2);
    return BigComplex(u, z.im.sign() >= 0 ? t : -t);
}

BigComplex pow(const BigComplex& z, long k) {
    if (k < 0) return BigComplex(BigReal(1L, z.prec())) / pow(z, -k);
    BigComplex r(BigReal(1L, z.prec())), b(z);
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

}  // namespace jue
