#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>

namespace jue {

// MPFR scalar with its own precision; binary results take the larger
// precision of the operands, doubles and integers inherit the other side's.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigReal(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigReal(int x, mpfr_prec_t prec) : BigReal(static_cast<long>(x), prec) {}
    BigReal(const std::string& s, mpfr_prec_t prec);
    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(const BigReal& o, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
    ~BigReal() { mpfr_clear(v_); }

    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    BigReal& operator=(double x) { mpfr_set_d(v_, x, MPFR_RNDN); return *this; }
    BigReal& operator=(long x) { mpfr_set_si(v_, x, MPFR_RNDN); return *this; }
    BigReal& operator=(int x) { return *this = static_cast<long>(x); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    // scientific notation with the given significant digits
    std::string str(int digits = 20) const;
    // log2 of |x|; -inf-like large negative value for zero
    double log2_abs() const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator+=(double x) { mpfr_add_d(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator-=(double x) { mpfr_sub_d(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator*=(double x) { mpfr_mul_d(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator/=(double x) { mpfr_div_d(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator-=(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }
    BigReal& operator+=(int x) { return *this += static_cast<long>(x); }
    BigReal& operator-=(int x) { return *this -= static_cast<long>(x); }
    BigReal& operator*=(int x) { return *this *= static_cast<long>(x); }
    BigReal& operator/=(int x) { return *this /= static_cast<long>(x); }

    BigReal operator-() const { BigReal r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

    static BigReal pi(mpfr_prec_t prec);
    static BigReal ln2(mpfr_prec_t prec);

private:
    mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);

template <class S> inline BigReal operator+(BigReal a, S x) requires std::is_arithmetic_v<S> { a += static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigReal operator-(BigReal a, S x) requires std::is_arithmetic_v<S> { a -= static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigReal operator*(BigReal a, S x) requires std::is_arithmetic_v<S> { a *= static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigReal operator/(BigReal a, S x) requires std::is_arithmetic_v<S> { a /= static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigReal operator+(S x, BigReal a) requires std::is_arithmetic_v<S> { return std::move(a) + x; }
template <class S> inline BigReal operator*(S x, BigReal a) requires std::is_arithmetic_v<S> { return std::move(a) * x; }
template <class S> inline BigReal operator-(S x, const BigReal& a) requires std::is_arithmetic_v<S> { return -a + x; }
template <class S> inline BigReal operator/(S x, const BigReal& a) requires std::is_arithmetic_v<S> {
    BigReal r(a.prec());
    if constexpr (std::is_integral_v<S>) mpfr_si_div(r.get(), static_cast<long>(x), a.get(), MPFR_RNDN);
    else mpfr_d_div(r.get(), static_cast<double>(x), a.get(), MPFR_RNDN);
    return r;
}

inline bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline bool operator<(const BigReal& a, double x) { return mpfr_cmp_d(a.get(), x) < 0; }
inline bool operator>(const BigReal& a, double x) { return mpfr_cmp_d(a.get(), x) > 0; }
inline bool operator<=(const BigReal& a, double x) { return mpfr_cmp_d(a.get(), x) <= 0; }
inline bool operator>=(const BigReal& a, double x) { return mpfr_cmp_d(a.get(), x) >= 0; }

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long k);
BigReal lgamma_pos(const BigReal& x);   // log Γ(x), x > 0
BigReal gamma(const BigReal& x);
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

// x + iy on MPFR pairs
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    BigComplex(BigReal r) : re(std::move(r)), im(re.prec()) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& x) { re *= x; im *= x; return *this; }
    BigComplex& operator/=(const BigReal& x) { re /= x; im /= x; return *this; }
    BigComplex& operator+=(const BigReal& x) { re += x; return *this; }
    BigComplex& operator-=(const BigReal& x) { re -= x; return *this; }
    BigComplex& operator+=(double x) { re += x; return *this; }
    BigComplex& operator-=(double x) { re -= x; return *this; }
    BigComplex& operator*=(double x) { re *= x; im *= x; return *this; }
    BigComplex& operator/=(double x) { re /= x; im /= x; return *this; }
    BigComplex& operator+=(long x) { re += x; return *this; }
    BigComplex& operator-=(long x) { re -= x; return *this; }
    BigComplex& operator*=(long x) { re *= x; im *= x; return *this; }
    BigComplex& operator/=(long x) { re /= x; im /= x; return *this; }
    BigComplex& operator+=(int x) { return *this += static_cast<long>(x); }
    BigComplex& operator-=(int x) { return *this -= static_cast<long>(x); }
    BigComplex& operator*=(int x) { return *this *= static_cast<long>(x); }
    BigComplex& operator/=(int x) { return *this /= static_cast<long>(x); }
    BigComplex operator-() const { return BigComplex(-re, -im); }

    BigReal re, im;
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { a += b; return a; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { a -= b; return a; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { a *= b; return a; }
inline BigComplex operator/(BigComplex a, const BigComplex& b) { a /= b; return a; }
inline BigComplex operator+(BigComplex a, const BigReal& b) { a += b; return a; }
inline BigComplex operator-(BigComplex a, const BigReal& b) { a -= b; return a; }
inline BigComplex operator*(BigComplex a, const BigReal& b) { a *= b; return a; }
inline BigComplex operator/(BigComplex a, const BigReal& b) { a /= b; return a; }
inline BigComplex operator+(const BigReal& b, BigComplex a) { a += b; return a; }
inline BigComplex operator*(const BigReal& b, BigComplex a) { a *= b; return a; }
inline BigComplex operator-(const BigReal& b, const BigComplex& a) { return -a + b; }
inline BigComplex operator/(const BigReal& b, const BigComplex& a) { return BigComplex(b) / a; }
template <class S> inline BigComplex operator+(BigComplex a, S x) requires std::is_arithmetic_v<S> { a += static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigComplex operator-(BigComplex a, S x) requires std::is_arithmetic_v<S> { a -= static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigComplex operator*(BigComplex a, S x) requires std::is_arithmetic_v<S> { a *= static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigComplex operator/(BigComplex a, S x) requires std::is_arithmetic_v<S> { a /= static_cast<std::conditional_t<std::is_integral_v<S>, long, double>>(x); return a; }
template <class S> inline BigComplex operator+(S x, BigComplex a) requires std::is_arithmetic_v<S> { return std::move(a) + x; }
template <class S> inline BigComplex operator*(S x, BigComplex a) requires std::is_arithmetic_v<S> { return std::move(a) * x; }
template <class S> inline BigComplex operator-(S x, const BigComplex& a) requires std::is_arithmetic_v<S> { return -a + x; }
template <class S> inline BigComplex operator/(S x, const BigComplex& a) requires std::is_arithmetic_v<S> { return BigComplex(BigReal(static_cast<double>(x), a.prec())) / a; }

BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);     // |z|^2
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);   // principal branch
BigComplex sqrt(const BigComplex& z);  // principal branch
BigComplex pow(const BigComplex& z, long k);
BigComplex expi(const BigReal& t);     // e^{it}

inline const BigReal& real_part(const BigReal& x) { return x; }
inline const BigReal& real_part(const BigComplex& z) { return z.re; }

template <class T> struct is_complex_scalar : std::false_type {};
template <> struct is_complex_scalar<BigComplex> : std::true_type {};

// Scalar of the same kind as T, from a real value at precision prec
template <class T> T make_scalar(const BigReal& x);
template <> inline BigReal make_scalar<BigReal>(const BigReal& x) { return x; }
template <> inline BigComplex make_scalar<BigComplex>(const BigReal& x) { return BigComplex(x); }

inline mpfr_prec_t precision_of(const BigReal& x) { return x.prec(); }
inline mpfr_prec_t precision_of(const BigComplex& z) { return z.prec(); }

BigReal set_precision(const BigReal& x, mpfr_prec_t prec);
BigComplex set_precision(const BigComplex& z, mpfr_prec_t prec);

}  // namespace jue
