#ifndef LEHMER_HP_REAL_HPP
#define LEHMER_HP_REAL_HPP

// Arbitrary-precision real and complex values over MPFR.
//
// Precision is carried per value (in bits). Binary operations produce a value
// at the larger of the two operand precisions, rounded to nearest. Decimal
// precision is configured through PrecisionContext; every computation runs at
// digits + guard and is rounded to `digits` only when rendered.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "exact.hpp"

namespace lehmer {

/// Bits needed to carry `digits` significant decimal digits.
inline mpfr_prec_t digits_to_bits(long digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 4;
}

struct PrecisionContext {
    long digits = 120;
    long guard = 10;

    long working_digits() const { return digits + guard; }
    mpfr_prec_t working_bits() const { return digits_to_bits(working_digits()); }

    /// 10^{-(digits+guard)}: the series termination threshold.
    double log10_epsilon() const { return -static_cast<double>(working_digits()); }

    PrecisionContext with_digits(long d) const { return PrecisionContext{d, guard}; }
};

class HPReal {
public:
    explicit HPReal(mpfr_prec_t bits = 64)
    {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    HPReal(long value, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    HPReal(const Rational& value, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    HPReal(const BigInt& value, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    /// Decimal literal such as "3.14159" or "1.2e-5".
    HPReal(std::string_view decimal, mpfr_prec_t bits)
    {
        mpfr_init2(v_, bits);
        const std::string s(decimal);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
            mpfr_clear(v_);
            throw std::invalid_argument("malformed decimal: '" + s + "'");
        }
    }
    HPReal(const HPReal& other)
    {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    HPReal(HPReal&& other) noexcept
    {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    HPReal& operator=(const HPReal& other)
    {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& other) noexcept
    {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    /// Copy rounded to a different precision.
    HPReal with_bits(mpfr_prec_t bits) const
    {
        HPReal r(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// log10 |x| as a double; -inf for zero.
    double log10_abs() const
    {
        if (is_zero()) {
            return -HUGE_VAL;
        }
        long exp2 = 0;
        const double mant = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
        return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
    }

    HPReal operator-() const
    {
        HPReal r(bits());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    HPReal& operator+=(const HPReal& o)
    {
        widen(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator-=(const HPReal& o)
    {
        widen(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator*=(const HPReal& o)
    {
        widen(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator/=(const HPReal& o)
    {
        widen(o);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator+=(long o)
    {
        mpfr_add_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    HPReal& operator-=(long o)
    {
        mpfr_sub_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    HPReal& operator*=(long o)
    {
        mpfr_mul_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    HPReal& operator/=(long o)
    {
        mpfr_div_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    HPReal& operator*=(const Rational& q)
    {
        mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
        return *this;
    }
    HPReal& operator+=(const Rational& q)
    {
        mpfr_add_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
        return *this;
    }

    friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
    friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
    friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
    friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
    friend HPReal operator+(HPReal a, long b) { return a += b; }
    friend HPReal operator-(HPReal a, long b) { return a -= b; }
    friend HPReal operator*(HPReal a, long b) { return a *= b; }
    friend HPReal operator/(HPReal a, long b) { return a /= b; }
    friend HPReal operator*(HPReal a, const Rational& b) { return a *= b; }
    friend HPReal operator+(HPReal a, const Rational& b) { return a += b; }
    friend HPReal operator+(long a, HPReal b) { return b += a; }
    friend HPReal operator*(long a, HPReal b) { return b *= a; }
    friend HPReal operator-(long a, const HPReal& b)
    {
        HPReal r(b.bits());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(long a, const HPReal& b)
    {
        HPReal r(b.bits());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b)
    {
        if (mpfr_unordered_p(a.v_, b.v_)) {
            return std::partial_ordering::unordered;
        }
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }
    friend std::partial_ordering operator<=>(const HPReal& a, long b)
    {
        const int c = mpfr_cmp_si(a.v_, b);
        return c < 0 ? std::partial_ordering::less
                     : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
    }
    friend bool operator==(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
    void widen(const HPReal& o)
    {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
            mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
        }
    }

    mpfr_t v_;
};

inline HPReal to_hp(const Rational& q, const PrecisionContext& ctx) { return HPReal(q, ctx.working_bits()); }
inline HPReal to_hp(long v, const PrecisionContext& ctx) { return HPReal(v, ctx.working_bits()); }

// Elementary functions. Each result carries the argument's precision and is
// correctly rounded (MPFR guarantees 0.5 ulp).

namespace detail {

template <typename Fn>
HPReal apply_unary(const HPReal& x, Fn fn)
{
    HPReal r(x.bits());
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}

} // namespace detail

inline HPReal abs(const HPReal& x) { return detail::apply_unary(x, mpfr_abs); }

inline HPReal exp(const HPReal& x) { return detail::apply_unary(x, mpfr_exp); }

inline HPReal expm1(const HPReal& x) { return detail::apply_unary(x, mpfr_expm1); }

inline HPReal log(const HPReal& x)
{
    if (x.sign() <= 0) {
        throw std::domain_error("log: argument must be positive");
    }
    return detail::apply_unary(x, mpfr_log);
}

inline HPReal sqrt(const HPReal& x)
{
    if (x.sign() < 0) {
        throw std::domain_error("sqrt: argument must be non-negative");
    }
    return detail::apply_unary(x, mpfr_sqrt);
}

inline HPReal asin(const HPReal& x)
{
    if (mpfr_cmpabs_ui(x.get(), 1) > 0) {
        throw std::domain_error("asin: |x| > 1");
    }
    return detail::apply_unary(x, mpfr_asin);
}

inline HPReal asinh(const HPReal& x) { return detail::apply_unary(x, mpfr_asinh); }
inline HPReal atan(const HPReal& x) { return detail::apply_unary(x, mpfr_atan); }
inline HPReal cos(const HPReal& x) { return detail::apply_unary(x, mpfr_cos); }
inline HPReal sin(const HPReal& x) { return detail::apply_unary(x, mpfr_sin); }
inline HPReal sinh(const HPReal& x) { return detail::apply_unary(x, mpfr_sinh); }
inline HPReal cosh(const HPReal& x) { return detail::apply_unary(x, mpfr_cosh); }

inline HPReal atan2(const HPReal& y, const HPReal& x)
{
    HPReal r(std::max(y.bits(), x.bits()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

inline HPReal hypot(const HPReal& x, const HPReal& y)
{
    HPReal r(std::max(y.bits(), x.bits()));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

inline HPReal pow(const HPReal& base, const HPReal& e)
{
    if (base.sign() < 0) {
        throw std::domain_error("pow: negative base with real exponent");
    }
    HPReal r(std::max(base.bits(), e.bits()));
    mpfr_pow(r.get(), base.get(), e.get(), MPFR_RNDN);
    return r;
}

inline HPReal pow(const HPReal& base, long e)
{
    HPReal r(base.bits());
    mpfr_pow_si(r.get(), base.get(), e, MPFR_RNDN);
    return r;
}

/// pi at the context's working precision. MPFR computes and caches it per thread.
inline HPReal pi_const(const PrecisionContext& ctx)
{
    if (ctx.digits < 2) {
        throw std::domain_error("pi_const: digits must be >= 2");
    }
    HPReal r(ctx.working_bits());
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

inline HPReal pi_at_bits(mpfr_prec_t bits)
{
    HPReal r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

inline HPReal ln2_at_bits(mpfr_prec_t bits)
{
    HPReal r(bits);
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}

enum class Elementary { exp, ln, sqrt, asin, asinh, atan, cos, sin };

inline HPReal hp_elementary(Elementary f, const HPReal& x)
{
    switch (f) {
    case Elementary::exp:
        return exp(x);
    case Elementary::ln:
        return log(x);
    case Elementary::sqrt:
        return sqrt(x);
    case Elementary::asin:
        return asin(x);
    case Elementary::asinh:
        return asinh(x);
    case Elementary::atan:
        return atan(x);
    case Elementary::cos:
        return cos(x);
    case Elementary::sin:
        return sin(x);
    }
    throw std::invalid_argument("hp_elementary: unknown function");
}

// Complex values are only needed for principal-branch real powers.
struct HPComplex {
    HPReal re;
    HPReal im;

    HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}

    HPReal modulus() const { return hypot(re, im); }
    /// Principal argument in (-pi, pi].
    HPReal arg() const { return atan2(im, re); }

    friend HPComplex operator+(const HPComplex& a, const HPComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend HPComplex operator*(const HPComplex& a, const HPComplex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend HPComplex operator*(const HPComplex& a, const HPReal& s) { return {a.re * s, a.im * s}; }
};

/// w^s = |w|^s exp(i s arg w), arg w in (-pi, pi].
inline HPComplex pow(const HPComplex& w, const HPReal& s)
{
    if (w.re.is_zero() && w.im.is_zero()) {
        throw std::domain_error("pow: complex zero base");
    }
    const HPReal mag = pow(w.modulus(), s);
    const HPReal phase = w.arg() * s;
    return {mag * cos(phase), mag * sin(phase)};
}

// Decimal rendering. All output paths go through one correctly rounded
// binary-to-decimal conversion (round to nearest, ties to even).

struct DecimalDigits {
    bool negative = false;
    std::string digits; // exactly n significant digits
    long exponent = 0;  // value = 0.d1d2...dn * 10^exponent
};

inline DecimalDigits decimal_digits(const HPReal& x, long significant)
{
    if (!x.is_finite()) {
        throw std::domain_error("decimal_digits: non-finite value");
    }
    if (significant < 1) {
        throw std::invalid_argument("decimal_digits: need at least one digit");
    }
    DecimalDigits out;
    if (x.is_zero()) {
        out.digits.assign(static_cast<std::size_t>(significant), '0');
        out.exponent = 1;
        return out;
    }
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(significant), x.get(), MPFR_RNDN);
    std::string str(s);
    mpfr_free_str(s);
    if (!str.empty() && str.front() == '-') {
        out.negative = true;
        str.erase(0, 1);
    }
    out.digits = std::move(str);
    out.exponent = e;
    return out;
}

/// Scientific notation with `significant` digits: "d.ddd...e-05".
inline std::string to_scientific(const HPReal& x, long significant)
{
    const DecimalDigits d = decimal_digits(x, significant);
    std::string out = d.negative ? "-" : "";
    out += d.digits.front();
    if (d.digits.size() > 1) {
        out += '.';
        out.append(d.digits, 1, std::string::npos);
    }
    const long e10 = x.is_zero() ? 0 : d.exponent - 1;
    out += e10 < 0 ? "e-" : "e+";
    const std::string mag = std::to_string(std::labs(e10));
    if (mag.size() < 2) {
        out += '0';
    }
    out += mag;
    return out;
}

/// Positional notation with `significant` significant digits.
inline std::string to_decimal(const HPReal& x, long significant)
{
    const DecimalDigits d = decimal_digits(x, significant);
    std::string out = d.negative ? "-" : "";
    if (d.exponent <= 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-d.exponent), '0');
        out += d.digits;
    } else if (d.exponent >= static_cast<long>(d.digits.size())) {
        out += d.digits;
        out.append(static_cast<std::size_t>(d.exponent) - d.digits.size(), '0');
    } else {
        out.append(d.digits, 0, static_cast<std::size_t>(d.exponent));
        out += '.';
        out.append(d.digits, static_cast<std::size_t>(d.exponent), std::string::npos);
    }
    return out;
}

/// |a - b| <= tol * |b| (tol given as a power of ten).
inline bool relatively_close(const HPReal& a, const HPReal& b, double log10_tol)
{
    const HPReal diff = abs(a - b);
    if (diff.is_zero()) {
        return true;
    }
    return diff.log10_abs() - abs(b).log10_abs() <= log10_tol;
}

inline bool absolutely_close(const HPReal& a, const HPReal& b, double log10_tol)
{
    const HPReal diff = abs(a - b);
    return diff.is_zero() || diff.log10_abs() <= log10_tol;
}

/// First 65 significant digits of pi as printed in the published convergent table.
inline constexpr std::string_view kPiFixture65 =
    "3.1415926535897932384626433832795028841971693993751058209749445923";

/// Startup self-check of pi_const against the fixture row.
inline bool verify_pi_fixture()
{
    return to_decimal(pi_const(PrecisionContext{65, 10}), 65) == kPiFixture65;
}

} // namespace lehmer

#endif
