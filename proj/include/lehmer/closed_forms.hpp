#ifndef LEHMER_CLOSED_FORMS_HPP
#define LEHMER_CLOSED_FORMS_HPP

// Exact closed forms for S_k(z) = sum_{m>=1} m^k z^m / C(2m, m).
//
// Every closed form here is a finite sum over the Stirling row E(k, n) =
// S2(k+1, n). Half-integer gamma values are expanded symbolically,
// Gamma(j + 1/2) = (2j)! sqrt(pi) / (4^j j!), so results land exactly in a
// two-element basis: {1, pi} at z = 2, {1, omega(z)} for rational z, and
// {1, pi/sqrt(27)} for the S_k(1) identity.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "exact.hpp"
#include "hp_real.hpp"
#include "quadrature.hpp"

namespace lehmer {

/// a + b*pi with rational a, b.
struct PiLinear {
    Rational a;
    Rational b;

    friend PiLinear operator+(const PiLinear& x, const PiLinear& y) { return {x.a + y.a, x.b + y.b}; }
    friend PiLinear operator-(const PiLinear& x, const PiLinear& y) { return {x.a - y.a, x.b - y.b}; }
    friend PiLinear operator*(const Rational& s, const PiLinear& x) { return {s * x.a, s * x.b}; }
    friend bool operator==(const PiLinear& x, const PiLinear& y) { return x.a == y.a && x.b == y.b; }

    HPReal numeric(const PrecisionContext& ctx) const { return to_hp(a, ctx) + pi_const(ctx) * b; }

    /// "R1 + R2 π" with both coefficients in p/q form ("3 + 1 π", "11 + 7/2 π").
    std::string to_string() const
    {
        const std::string sign = b < 0 ? " - " : " + ";
        return lehmer::to_string(a) + sign + lehmer::to_string(abs(b)) + " π";
    }
};

/// a + b*pi/sqrt(27).
struct ScaledPiLinear {
    Rational a;
    Rational b;

    friend ScaledPiLinear operator+(const ScaledPiLinear& x, const ScaledPiLinear& y)
    {
        return {x.a + y.a, x.b + y.b};
    }
    friend ScaledPiLinear operator*(const Rational& s, const ScaledPiLinear& x) { return {s * x.a, s * x.b}; }
    friend bool operator==(const ScaledPiLinear& x, const ScaledPiLinear& y) { return x.a == y.a && x.b == y.b; }

    HPReal numeric(const PrecisionContext& ctx) const
    {
        return to_hp(a, ctx) + pi_const(ctx) / sqrt(to_hp(27, ctx)) * b;
    }

    std::string to_string() const
    {
        return lehmer::to_string(a) + (b < 0 ? " - " : " + ") + lehmer::to_string(abs(b)) + " π/√27";
    }
};

/// omega(z) = sqrt(z/(4-z)) * asin(sqrt(z)/2), continued to z < 0 as
/// -sqrt(-z/(4-z)) * asinh(sqrt(-z)/2).
inline HPReal omega(const Rational& z, const PrecisionContext& ctx)
{
    if (z == 0 || abs(z) >= 4) {
        throw std::domain_error("omega: requires 0 < |z| < 4, got " + to_string(z));
    }
    const HPReal zr = to_hp(z, ctx);
    if (z > 0) {
        return sqrt(zr / (4L - zr)) * asin(sqrt(zr) / 2L);
    }
    const HPReal mz = -zr;
    return -(sqrt(mz / (mz + 4L)) * asinh(sqrt(mz) / 2L));
}

/// R3 + R4*omega(z) at a fixed rational z.
struct OmegaLinear {
    Rational r3;
    Rational r4;
    Rational z;

    friend bool operator==(const OmegaLinear& x, const OmegaLinear& y)
    {
        return x.z == y.z && x.r3 == y.r3 && x.r4 == y.r4;
    }
    friend OmegaLinear operator+(const OmegaLinear& x, const OmegaLinear& y)
    {
        if (x.z != y.z) {
            throw std::invalid_argument("OmegaLinear: operands at different z");
        }
        return {x.r3 + y.r3, x.r4 + y.r4, x.z};
    }

    HPReal numeric(const PrecisionContext& ctx) const { return to_hp(r3, ctx) + omega(z, ctx) * r4; }

    std::string to_string() const
    {
        return lehmer::to_string(r3) + (r4 < 0 ? " - " : " + ") + lehmer::to_string(abs(r4)) + " ω(" +
               lehmer::to_string(z) + ")";
    }
};

/// The four Lehmer sums; t11 and t12 are stored as their coefficients of 1/pi.
struct TSums {
    Rational t11_over_pi;
    Rational t12_over_pi;
    Rational t21;
    Rational t22;
};

namespace detail {

/// Gamma(m/2)^2 = coeff * pi^{has_pi}.
struct GammaSquare {
    Rational coeff;
    bool has_pi;
};

inline GammaSquare gamma_half_squared(long twice_arg)
{
    if (twice_arg < 1) {
        throw std::domain_error("gamma_half_squared: argument must be positive");
    }
    if (twice_arg % 2 == 0) {
        const BigInt g = factorial(twice_arg / 2 - 1);
        return {Rational(g * g), false};
    }
    const long j = (twice_arg - 1) / 2;
    const Rational g = make_rational(factorial(2 * j), pow(BigInt(4), static_cast<unsigned long>(j)) * factorial(j));
    return {Rational(g * g), true};
}

inline Rational half_pochhammer(long p) { return pochhammer(Rational(1, 2), p); }

inline void require_nonnegative_k(long k)
{
    if (k < 0) {
        throw std::domain_error("k must be non-negative, got " + std::to_string(k));
    }
}

} // namespace detail

/// S_k(2) = R1(k) + R2(k) pi, from the z = 2 specialisation of the closed form.
inline PiLinear s_k_2(long k)
{
    detail::require_nonnegative_k(k);
    const auto e = stirling_row(k);
    PiLinear out{0, 0};
    for (long n = 1; n <= k + 1; ++n) {
        const Rational pre = Rational(factorial(n) * e[static_cast<std::size_t>(n)]) /
                             Rational(pow(BigInt(2), static_cast<unsigned long>(n)));
        const std::pair<Rational, detail::GammaSquare> parts[] = {
            {Rational(factorial(n - 1)), detail::gamma_half_squared(n + 1)},
            {Rational(factorial(n)) / 2, detail::gamma_half_squared(n + 2)},
        };
        for (const auto& [numer, gsq] : parts) {
            const Rational c = pre * numer / gsq.coeff;
            // pi * c / Gamma^2: the pi cancels when Gamma^2 carries one.
            if (gsq.has_pi) {
                out.a += c;
            } else {
                out.b += c;
            }
        }
    }
    return out;
}

/// S_k(z) = R3(k) + R4(k) omega(z) for rational 0 < |z| < 4 (principal closed form).
inline OmegaLinear s_k_z(long k, const Rational& z)
{
    detail::require_nonnegative_k(k);
    if (z == 0 || abs(z) >= 4) {
        throw std::domain_error("s_k_z: requires 0 < |z| < 4, got " + to_string(z));
    }
    const auto e = stirling_row(k);
    const Rational x = z / (4 - z);
    const Rational four_over_z = 4 / z;
    const Rational z_over_four = z / 4;

    // inner[p] = sum_{l=1}^{p} Gamma(l) / (1/2)_l * (z/4)^l
    std::vector<Rational> inner(static_cast<std::size_t>(k + 1));
    {
        Rational acc = 0;
        Rational zpow = 1;
        for (long l = 1; l <= k; ++l) {
            zpow *= z_over_four;
            acc += Rational(factorial(l - 1)) / detail::half_pochhammer(l) * zpow;
            inner[static_cast<std::size_t>(l)] = acc;
        }
    }

    OmegaLinear out{0, 0, z};
    Rational xpow = 1;
    for (long n = 1; n <= k + 1; ++n) {
        xpow *= x;
        const Rational pre = Rational(factorial(n) * e[static_cast<std::size_t>(n)]) * xpow;
        out.r3 += pre / n;
        Rational zfac = 1;
        for (long p = 0; p < n; ++p) {
            zfac *= four_over_z;
            Rational c = pre * detail::half_pochhammer(p) / Rational(factorial(p + 1)) *
                         Rational(binomial(n - 1, p)) * zfac;
            if (p % 2 == 1) {
                c = -c;
            }
            out.r4 += c;
            out.r3 -= c * inner[static_cast<std::size_t>(p)] / 2;
        }
    }
    return out;
}

/// Exact relation between the z = -2 basis constant and omega:
/// (2/sqrt(3)) asinh(1/sqrt(2)) = kNeg2BasisToOmega * omega(-2).
inline const Rational kNeg2BasisToOmega{-2};

/// (2/sqrt(3)) asinh(1/sqrt(2)), the irrational constant of the z = -2 form.
inline HPReal neg2_basis_constant(const PrecisionContext& ctx)
{
    const HPReal two = to_hp(2, ctx);
    return two / sqrt(to_hp(3, ctx)) * asinh(HPReal(1L, ctx.working_bits()) / sqrt(two));
}

/// S_k(-2) = a + b * (2/sqrt(3)) asinh(1/sqrt(2)), coefficients in that basis.
struct Neg2Basis {
    Rational a;
    Rational b;
};

inline Neg2Basis s_k_neg2_basis(long k)
{
    detail::require_nonnegative_k(k);
    const auto e = stirling_row(k);
    // inner[p] = sum_{l=1}^{p} (-1)^l Gamma(l) / ((1/2)_l 2^l)
    std::vector<Rational> inner(static_cast<std::size_t>(k + 1));
    {
        Rational acc = 0;
        for (long l = 1; l <= k; ++l) {
            Rational t = Rational(factorial(l - 1)) /
                         (detail::half_pochhammer(l) * Rational(pow(BigInt(2), static_cast<unsigned long>(l))));
            acc += (l % 2 == 0) ? t : Rational(-t);
            inner[static_cast<std::size_t>(l)] = acc;
        }
    }
    Neg2Basis out{0, 0};
    for (long n = 1; n <= k + 1; ++n) {
        Rational pre = Rational(factorial(n) * e[static_cast<std::size_t>(n)]) /
                       Rational(pow(BigInt(3), static_cast<unsigned long>(n)));
        if (n % 2 == 1) {
            pre = -pre;
        }
        out.a += pre / n;
        for (long p = 0; p < n; ++p) {
            const Rational c = pre * detail::half_pochhammer(p) *
                               Rational(pow(BigInt(2), static_cast<unsigned long>(p))) /
                               Rational(factorial(p + 1)) * Rational(binomial(n - 1, p));
            out.b += c;
            out.a += c * inner[static_cast<std::size_t>(p)];
        }
    }
    return out;
}

/// S_k(-2) from the dedicated z = -2 form, re-expressed in the omega(-2) basis.
inline OmegaLinear s_k_neg2(long k)
{
    const Neg2Basis raw = s_k_neg2_basis(k);
    return OmegaLinear{raw.a, raw.b * kNeg2BasisToOmega, Rational(-2)};
}

/// Partial sum sum_{m=1}^{terms} m^k z^m / C(2m, m), exact then rounded.
inline HPReal partial_sum_oracle(long k, const Rational& z, long terms, const PrecisionContext& ctx)
{
    detail::require_nonnegative_k(k);
    if (abs(z) >= 4) {
        throw std::domain_error("partial_sum_oracle: requires |z| < 4");
    }
    if (terms < 1) {
        throw std::domain_error("partial_sum_oracle: terms must be positive");
    }
    Rational sum = 0;
    Rational zpow = 1;
    BigInt central = 1; // C(2m, m)
    for (long m = 1; m <= terms; ++m) {
        zpow *= z;
        central = central * (2 * m) * (2 * m - 1);
        mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(m * m));
        sum += Rational(pow(BigInt(m), static_cast<unsigned long>(k))) * zpow / Rational(central);
    }
    return to_hp(sum, ctx);
}

/// Number of oracle terms for which the tail bound 2 m^{k+1/2} (|z|/4)^m / (1 - q)
/// drops below 10^{-(digits + 5)}.
inline long oracle_terms_for(long k, const Rational& z, long digits)
{
    const double r = std::fabs(z.get_d()) / 4.0;
    if (r <= 0.0 || r >= 1.0) {
        throw std::domain_error("oracle_terms_for: requires 0 < |z| < 4");
    }
    const double target = -static_cast<double>(digits + 5);
    const double kk = static_cast<double>(k) + 0.5;
    for (long m = 1;; ++m) {
        const double md = static_cast<double>(m);
        const double q = std::pow(1.0 + 1.0 / md, kk) * r;
        if (q >= 1.0) {
            continue;
        }
        const double log_tail = std::log10(2.0) + kk * std::log10(md) + md * std::log10(r) - std::log10(1.0 - q);
        if (log_tail < target) {
            return m;
        }
    }
}

/// 2F1(-1/2, n; n+1/2; -1) = 2^{-n} sqrt(pi) Gamma(n+1/2)
///   * { Gamma((n+1)/2)^{-2} + (n/2) Gamma(n/2+1)^{-2} }, exactly in {1, pi}.
inline PiLinear f21_special_neg1_exact(long n)
{
    if (n < 1) {
        throw std::domain_error("f21_special_neg1: n must be positive");
    }
    // 2^{-n} sqrt(pi) Gamma(n+1/2) = pi * (2n)! / (8^n n!)
    const Rational lead = make_rational(factorial(2 * n), pow(BigInt(8), static_cast<unsigned long>(n)) * factorial(n));
    PiLinear out{0, 0};
    const std::pair<Rational, detail::GammaSquare> parts[] = {
        {Rational(1), detail::gamma_half_squared(n + 1)},
        {Rational(n, 2), detail::gamma_half_squared(n + 2)},
    };
    for (const auto& [w, gsq] : parts) {
        const Rational c = lead * w / gsq.coeff;
        if (gsq.has_pi) {
            out.a += c;
        } else {
            out.b += c;
        }
    }
    return out;
}

inline HPReal f21_special_neg1(long n, const PrecisionContext& ctx) { return f21_special_neg1_exact(n).numeric(ctx); }

/// 2F1(-1/2, n; n+1/2; -z) = rational_part + theta_coeff * sqrt(z) asin(sqrt(z/(z+1))).
struct F21Value {
    Rational rational_part;
    Rational theta_coeff;
    Rational z;

    HPReal numeric(const PrecisionContext& ctx) const
    {
        const HPReal zr = to_hp(z, ctx);
        const HPReal theta = sqrt(zr) * asin(sqrt(zr / (zr + 1L)));
        return to_hp(rational_part, ctx) + theta * theta_coeff;
    }
};

/// Finite-sum evaluation of 2F1(-1/2, n; n+1/2; -z) for rational z > 0.
inline F21Value f21_general_exact(long n, const Rational& z)
{
    if (n < 1) {
        throw std::domain_error("f21_general: n must be positive");
    }
    if (z <= 0) {
        throw std::domain_error("f21_general: requires z > 0, got " + to_string(z));
    }
    const Rational w = (z + 1) / z;
    const Rational u = z / (z + 1);
    const Rational half_n = detail::half_pochhammer(n);

    F21Value out{half_n / Rational(factorial(n)), 0, z};
    const Rational outer = half_n / Rational(factorial(n - 1));
    Rational inner = 0; // sum_{l=1}^{k} (l-1)!/(1/2)_l u^l
    Rational upow = 1;
    Rational wpow = 1;
    for (long k = 0; k < n; ++k) {
        if (k > 0) {
            upow *= u;
            inner += Rational(factorial(k - 1)) / detail::half_pochhammer(k) * upow;
        }
        wpow *= w;
        Rational c = outer * detail::half_pochhammer(k) / Rational(factorial(k + 1)) * Rational(binomial(n - 1, k)) * wpow;
        if (k % 2 == 1) {
            c = -c;
        }
        out.theta_coeff += c;
        out.rational_part -= c * inner / 2;
    }
    return out;
}

inline HPReal f21_general(long n, const Rational& z, const PrecisionContext& ctx)
{
    return f21_general_exact(n, z).numeric(ctx);
}

/// Terminating 2F1(-N, b; c; z), exact.
inline Rational hyp2f1_terminating(long big_n, const Rational& b, const Rational& c, const Rational& z)
{
    if (big_n < 0) {
        throw std::domain_error("hyp2f1_terminating: N must be non-negative");
    }
    Rational term = 1;
    Rational sum = 1;
    for (long s = 0; s < big_n; ++s) {
        term *= Rational(s - big_n) * (b + s) / ((c + s) * (s + 1)) * z;
        sum += term;
    }
    return sum;
}

/// Jacobi polynomial from the explicit sum
/// P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}.
inline Rational jacobi_p(long n, const Rational& alpha, const Rational& beta, const Rational& x)
{
    if (n < 0) {
        throw std::domain_error("jacobi_p: degree must be non-negative");
    }
    const Rational lo = (x - 1) / 2;
    const Rational hi = (x + 1) / 2;
    Rational sum = 0;
    for (long s = 0; s <= n; ++s) {
        sum += binomial(alpha + n, n - s) * binomial(beta + n, s) * pow(lo, s) * pow(hi, n - s);
    }
    return sum;
}

/// 2F1(-N, 1/2; 2; z) and N!/(2)_N * P_N^{(1, -N-3/2)}(1 - 2z).
inline std::pair<Rational, Rational> jacobi_reduction_sides(long big_n, const Rational& z)
{
    Rational lhs = hyp2f1_terminating(big_n, Rational(1, 2), Rational(2), z);
    Rational rhs = Rational(factorial(big_n)) / pochhammer(Rational(2), big_n) *
                   jacobi_p(big_n, Rational(1), Rational(-big_n) - Rational(3, 2), 1 - 2 * z);
    return {std::move(lhs), std::move(rhs)};
}

inline bool jacobi_reduction_check(long big_n, const Rational& z)
{
    const auto [lhs, rhs] = jacobi_reduction_sides(big_n, z);
    return lhs == rhs;
}

/// Second (Jacobi-polynomial) form of 2F1(-1/2, n; n+1/2; -z):
/// (1/2)_n/n! [1 + n(z+1)/sqrt(z) asin(sqrt(z/(z+1))) 2F1(1-n, 1/2; 2; (z+1)/z)
///             - (n/2) sum_k sum_{l=1}^{k} (1/2)_k Gamma(l) (1-n)_k / ((2)_k (1/2)_l k!) ((z+1)/z)^{k-l+1}].
inline HPReal f21_general_jacobi_form(long n, const Rational& z, const PrecisionContext& ctx)
{
    if (n < 1 || z <= 0) {
        throw std::domain_error("f21_general_jacobi_form: requires n >= 1 and z > 0");
    }
    const Rational w = (z + 1) / z;
    const Rational poly = hyp2f1_terminating(n - 1, Rational(1, 2), Rational(2), w);
    Rational dsum = 0;
    for (long k = 0; k < n; ++k) {
        for (long l = 1; l <= k; ++l) {
            dsum += detail::half_pochhammer(k) * Rational(factorial(l - 1)) * pochhammer(Rational(1 - n), k) /
                    (pochhammer(Rational(2), k) * detail::half_pochhammer(l) * Rational(factorial(k))) *
                    pow(w, k - l + 1);
        }
    }
    const HPReal zr = to_hp(z, ctx);
    HPReal bracket = to_hp(1 - Rational(n, 2) * dsum, ctx);
    bracket += asin(sqrt(zr / (zr + 1L))) / sqrt(zr) * (Rational(n) * (z + 1) * poly);
    return bracket * (detail::half_pochhammer(n) / Rational(factorial(n)));
}

struct IntegralIdentity {
    HPReal quadrature;
    HPReal closed_form;
    bool agrees;
};

/// Both sides of
///   int_0^1 (dt/t) [zt(1-t)]^n / [1 - zt(1-t)]^{n+1}
///     = sqrt(pi) Gamma(n)/Gamma(n+1/2) X^n 2F1(-1/2, n; n+1/2; -X),  X = z/(4-z).
/// Quadrature failure throws QuadratureError.
inline IntegralIdentity integral_identity(long n, const Rational& z, const PrecisionContext& ctx)
{
    if (n < 1 || n > 8) {
        throw std::domain_error("integral_identity: n must lie in [1, 8]");
    }
    if (z <= 0 || z >= 4) {
        throw std::domain_error("integral_identity: requires 0 < z < 4");
    }
    const HPReal zr = to_hp(z, ctx);
    // z^n t^{n-1} (1-t)^n / (1 - z t (1-t))^{n+1}: the 1/t is cancelled analytically.
    auto integrand = [&](const HPReal& t) {
        const HPReal one_minus = 1L - t;
        const HPReal q = zr * t * one_minus;
        return pow(zr, n) * pow(t, n - 1) * pow(one_minus, n) / pow(1L - q, n + 1);
    };
    const HPReal lo(0L, ctx.working_bits());
    const HPReal hi(1L, ctx.working_bits());
    const QuadratureResult quad = integrate_interval(integrand, lo, hi, ctx, -static_cast<double>(ctx.digits));

    const Rational x = z / (4 - z);
    // sqrt(pi) Gamma(n)/Gamma(n+1/2) = (n-1)!/(1/2)_n
    const Rational prefactor = Rational(factorial(n - 1)) / detail::half_pochhammer(n) * pow(x, n);
    const HPReal closed = f21_general(n, x, ctx) * prefactor;
    const bool ok = absolutely_close(quad.value, closed, -static_cast<double>(ctx.digits - 10));
    return IntegralIdentity{quad.value, closed, ok};
}

inline bool integral_identity_check(long n, const Rational& z, const PrecisionContext& ctx)
{
    return integral_identity(n, z, ctx).agrees;
}

/// t11, t12 (as 1/pi coefficients), t21, t22 with Gamma(n+1/2)^2 expanded exactly.
inline TSums t_sums(long k)
{
    detail::require_nonnegative_k(k);
    const auto e = stirling_row(k);
    auto e_at = [&](long n) { return n <= k + 1 ? Rational(e[static_cast<std::size_t>(n)]) : Rational(0); };
    // Gamma(j + 1/2)^2 / pi
    auto gamma_half_sq_over_pi = [](long j) -> Rational {
        const Rational g = make_rational(factorial(2 * j), pow(BigInt(4), static_cast<unsigned long>(j)) * factorial(j));
        return g * g;
    };
    TSums t{0, 0, 0, 0};
    for (long n = 1; n <= (k + 1) / 2; ++n) {
        const Rational four_n(pow(BigInt(4), static_cast<unsigned long>(n)));
        t.t11_over_pi += e_at(2 * n) / four_n * Rational(factorial(2 * n) * factorial(2 * n - 1)) /
                         gamma_half_sq_over_pi(n);
        t.t21 += e_at(2 * n) / four_n * Rational(factorial(2 * n) * binomial(2 * n, n));
    }
    for (long n = 0; n <= k / 2; ++n) {
        const Rational four_n(pow(BigInt(4), static_cast<unsigned long>(n)));
        const BigInt f = factorial(2 * n + 1);
        t.t12_over_pi += e_at(2 * n + 1) / (4 * four_n) * Rational(f * f) / gamma_half_sq_over_pi(n + 1);
        t.t22 += e_at(2 * n + 1) / four_n * Rational(f * binomial(2 * n, n));
    }
    return t;
}

/// t2(k)/t1(k) = pi (t21 + t22) / (t11/pi-coeff + t12/pi-coeff); tends to 2.
inline HPReal lehmer_limit_ratio(long k, const PrecisionContext& ctx)
{
    if (k < 1) {
        throw std::domain_error("lehmer_limit_ratio: k must be >= 1");
    }
    const TSums t = t_sums(k);
    return pi_const(ctx) * ((t.t21 + t.t22) / (t.t11_over_pi + t.t12_over_pi));
}

/// Both sides of the S_k(1) identity in the basis {1, pi/sqrt(27)}.
inline std::pair<ScaledPiLinear, ScaledPiLinear> bg_identity_sides(long k)
{
    detail::require_nonnegative_k(k);
    const auto e = stirling_row(k);
    ScaledPiLinear lhs{0, 0};
    ScaledPiLinear rhs{0, 0};

    // sum_{p=0}^{n-1} 3^p / ((2p+1) C(2p, p))
    Rational lhs_inner = 0;
    // sum_{l=1}^{p} Gamma(l) / ((1/2)_l 4^l)
    std::vector<Rational> rhs_inner(static_cast<std::size_t>(k + 1));
    {
        Rational acc = 0;
        for (long l = 1; l <= k; ++l) {
            acc += Rational(factorial(l - 1)) /
                   (detail::half_pochhammer(l) * Rational(pow(BigInt(4), static_cast<unsigned long>(l))));
            rhs_inner[static_cast<std::size_t>(l)] = acc;
        }
    }

    for (long n = 1; n <= k + 1; ++n) {
        const Rational en(e[static_cast<std::size_t>(n)]);
        const Rational base = Rational(factorial(n)) / Rational(pow(BigInt(3), static_cast<unsigned long>(n))) * en;

        lhs_inner += Rational(pow(BigInt(3), static_cast<unsigned long>(n - 1))) /
                     Rational((2 * n - 1) * binomial(2 * (n - 1), n - 1));
        Rational c = base * Rational(binomial(2 * n, n));
        if ((n + k + 1) % 2 != 0) {
            c = -c;
        }
        lhs.a += c * lhs_inner;
        lhs.b += 2 * c;

        rhs.a += base * Rational(2, n);
        for (long p = 0; p < n; ++p) {
            Rational d = base * detail::half_pochhammer(p) *
                         Rational(pow(BigInt(4), static_cast<unsigned long>(p + 1))) / Rational(factorial(p + 1)) *
                         Rational(binomial(n - 1, p));
            if (p % 2 == 1) {
                d = -d;
            }
            // - d * { inner_p - pi/sqrt(27) }
            rhs.a -= d * rhs_inner[static_cast<std::size_t>(p)];
            rhs.b += d;
        }
    }
    return {lhs, rhs};
}

inline bool bg_identity_check(long k)
{
    const auto [lhs, rhs] = bg_identity_sides(k);
    return lhs == rhs;
}

/// s_k_2(k) against s_k_z(k, 2) under omega(2) = pi/4.
inline bool seq4_vs_seq6_check(long k)
{
    const PiLinear direct = s_k_2(k);
    const OmegaLinear general = s_k_z(k, Rational(2));
    return direct.a == general.r3 && direct.b == general.r4 / 4;
}

} // namespace lehmer

#endif
