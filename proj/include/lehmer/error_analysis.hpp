#ifndef LEHMER_ERROR_ANALYSIS_HPP
#define LEHMER_ERROR_ANALYSIS_HPP

// Error of the pi convergents, E(k) = pi - R1(k)/R2(k) = D_k(2)/R2(k).
//
// Three routes are provided:
//   * the 1/k expansion built on the coefficients c_j of
//     g(x) = (x/(e^x-1))^{3/2} e^{x/2} (and F_j = -(2j-3)!! c_j);
//   * the leading-order model E_0(k) = -(8 pi / Q^{k+3/2}) cos((k+3/2) phi);
//   * exact integral representations of R2(k) and E(k), evaluated by
//     high-precision quadrature.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "gamma_ratio.hpp"
#include "hp_real.hpp"
#include "lehmer_limit.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"

namespace lehmer {

class LossOfSignificance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CoeffTable {
    std::vector<Rational> c;
    std::vector<Rational> F;
    std::vector<Rational> A;
    std::vector<Rational> norlund; // B_j^{(3/2)}(1/2)
};

namespace detail {

// (e^x - 1)/x = sum_j x^j / (j+1)!
inline TruncatedSeries<Rational> expm1_over_x(std::size_t order)
{
    return TruncatedSeries<Rational>::generate(order, [](std::size_t j) -> Rational {
        return Rational(BigInt(1), factorial(static_cast<long>(j) + 1));
    });
}

// e^{a x}
inline TruncatedSeries<Rational> exp_linear(std::size_t order, const Rational& a)
{
    return TruncatedSeries<Rational>::generate(order, [&](std::size_t j) -> Rational {
        return pow(a, static_cast<long>(j)) / Rational(factorial(static_cast<long>(j)));
    });
}

// (t/(e^t-1))^sigma e^{x t} truncated at t^order.
inline TruncatedSeries<Rational> norlund_generating(std::size_t order, const Rational& sigma, const Rational& x)
{
    return expm1_over_x(order).pow(-sigma) * exp_linear(order, x);
}

constexpr std::size_t kSeriesGuardTerms = 2;

} // namespace detail

/// Taylor coefficients c_0..c_J of (x/(e^x-1))^{3/2} e^{x/2}.
inline std::vector<Rational> c_coeffs(long big_j)
{
    if (big_j < 0) {
        throw std::domain_error("c_coeffs: J must be non-negative");
    }
    const std::size_t order = static_cast<std::size_t>(big_j) + 1 + detail::kSeriesGuardTerms;
    const auto g = detail::norlund_generating(order, Rational(3, 2), Rational(1, 2));
    return {g.coefficients().begin(), g.coefficients().begin() + big_j + 1};
}

/// F_j = -(2j-3)!! c_j.
inline std::vector<Rational> f_coeffs(long big_j)
{
    std::vector<Rational> c = c_coeffs(big_j);
    for (long j = 0; j <= big_j; ++j) {
        c[static_cast<std::size_t>(j)] *= -Rational(double_factorial(2 * j - 3));
    }
    return c;
}

/// A_j = F_j / 2^j, the coefficients of Gamma(x+1)/Gamma(x+1/2) ~ sum_j A_j x^{1/2-j}.
inline std::vector<Rational> a_coeffs(long big_j)
{
    std::vector<Rational> f = f_coeffs(big_j);
    for (long j = 0; j <= big_j; ++j) {
        f[static_cast<std::size_t>(j)] /= Rational(pow(BigInt(2), static_cast<unsigned long>(j)));
    }
    return f;
}

/// Norlund polynomial B_j^{(sigma)}(x): j! [t^j] (t/(e^t-1))^sigma e^{xt}.
inline Rational norlund_value(long j, const Rational& sigma, const Rational& x)
{
    if (j < 0) {
        throw std::domain_error("norlund_value: j must be non-negative");
    }
    const std::size_t order = static_cast<std::size_t>(j) + 1 + detail::kSeriesGuardTerms;
    return detail::norlund_generating(order, sigma, x)[static_cast<std::size_t>(j)] * Rational(factorial(j));
}

inline CoeffTable coeff_table(long big_j)
{
    CoeffTable t{c_coeffs(big_j), f_coeffs(big_j), a_coeffs(big_j), {}};
    const std::size_t order = static_cast<std::size_t>(big_j) + 1 + detail::kSeriesGuardTerms;
    const auto gen = detail::norlund_generating(order, Rational(3, 2), Rational(1, 2));
    for (long j = 0; j <= big_j; ++j) {
        t.norlund.push_back(gen[static_cast<std::size_t>(j)] * Rational(factorial(j)));
    }
    return t;
}

namespace detail {

// prod_{n=1}^{j} 1/(2k + 3 - 2n)
inline Rational odd_descending_product(long k, long j)
{
    Rational p = 1;
    for (long n = 1; n <= j; ++n) {
        p /= (2 * k + 3 - 2 * n);
    }
    return p;
}

} // namespace detail

/// Convergent expansion of R2(k) truncated to J terms (j = 0..J-1):
/// (1/4) (3/2)_k sum_j F_j ln2^{j-k-3/2} prod_{n=1}^{j} 1/(2k+3-2n).
inline HPReal r2_asymptotic(long k, long big_j, const PrecisionContext& ctx)
{
    if (k < 1 || big_j < 1) {
        throw std::domain_error("r2_asymptotic: requires k >= 1 and J >= 1");
    }
    if (big_j > k) {
        throw std::domain_error("r2_asymptotic: J must not exceed k");
    }
    const auto f = f_coeffs(big_j - 1);
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal ln2 = ln2_at_bits(bits);
    HPReal sum(bits);
    for (long j = 0; j < big_j; ++j) {
        const HPReal power = pow(ln2, HPReal(Rational(2 * (j - k) - 3, 2), bits));
        sum += power * (f[static_cast<std::size_t>(j)] * detail::odd_descending_product(k, j));
    }
    return sum * (pochhammer(Rational(3, 2), k) / 4);
}

/// 1/k expansion of E(k) with J terms (j = 0..J-1):
///   -8 pi Re[sum_j F_j w^{j-k-3/2} P_j] / sum_j F_j ln2^{j-k-3/2} P_j,
/// w = ln2 + 2 pi i on the principal branch, P_j = prod_{n=1}^{j} 1/(2k+3-2n).
inline HPReal e_asymptotic(long k, long big_j, const PrecisionContext& ctx)
{
    if (k < 1 || big_j < 1) {
        throw std::domain_error("e_asymptotic: requires k >= 1 and J >= 1");
    }
    const auto f = f_coeffs(big_j - 1);
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal ln2 = ln2_at_bits(bits);
    const HPReal pi = pi_at_bits(bits);
    const HPComplex w(ln2, pi * 2L);
    HPReal numer(bits);
    HPReal denom(bits);
    for (long j = 0; j < big_j; ++j) {
        const HPReal s(Rational(2 * (j - k) - 3, 2), bits);
        const Rational coeff = f[static_cast<std::size_t>(j)] * detail::odd_descending_product(k, j);
        numer += pow(w, s).re * coeff;
        denom += pow(ln2, s) * coeff;
    }
    return -(pi * 8L) * numer / denom;
}

/// phi = atan(2 pi / ln 2).
inline HPReal leading_phase(const PrecisionContext& ctx)
{
    const mpfr_prec_t bits = ctx.working_bits();
    return atan(pi_at_bits(bits) * 2L / ln2_at_bits(bits));
}

/// Q = sqrt(1 + (2 pi / ln 2)^2).
inline HPReal leading_modulus(const PrecisionContext& ctx)
{
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal r = pi_at_bits(bits) * 2L / ln2_at_bits(bits);
    return sqrt(r * r + 1L);
}

/// E_0(k) = -(8 pi / Q^{k+3/2}) cos((k+3/2) phi).
inline HPReal e_leading(long k, const PrecisionContext& ctx)
{
    if (k < 1) {
        throw std::domain_error("e_leading: k must be >= 1");
    }
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal s(Rational(2 * k + 3, 2), bits);
    return -(pi_at_bits(bits) * 8L) / pow(leading_modulus(ctx), s) * cos(leading_phase(ctx) * s);
}

/// R2(k) = ((k+1)!/(2 pi)) int_0^inf dx / (sqrt(1 - e^{-x}) (ln2 + x)^{k+2}),
/// integrated in u with x = u^2 so the endpoint is regular.
inline HPReal r2_hankel_integral(long k, const PrecisionContext& ctx)
{
    if (k < 1) {
        throw std::domain_error("r2_hankel_integral: k must be >= 1");
    }
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal ln2 = ln2_at_bits(bits);
    auto integrand = [&](const HPReal& u) {
        const HPReal x = u * u;
        const HPReal one_minus = -expm1(-x); // 1 - e^{-x} without cancellation
        return (u * 2L) / (sqrt(one_minus) * pow(ln2 + x, k + 2));
    };
    const QuadratureResult q = integrate_half_line(integrand, ctx, -static_cast<double>(ctx.digits));
    return q.value * Rational(factorial(k + 1)) / (pi_at_bits(bits) * 2L);
}

namespace detail {

struct LaplaceMoments {
    HPReal weight_integral;  // int w
    HPReal cosine_integral;  // int cos(2 pi x) w
    double cancellation = 0; // log10(sum |pieces| / |cosine_integral|)
};

// Smallest half-period breakpoint X beyond the peak where the majorant
// (x+1)^{k+1/2} e^{-x ln2} has a tail below 10^{-work_digits} times the peak
// of the minorant x^{k+1/2} e^{-x ln2}.
inline double laplace_cutoff(long k, long work_digits)
{
    const double a = std::numbers::ln2;
    const double p = static_cast<double>(k) + 0.5;
    const double peak_x = p / a;
    const double log_peak = p * std::log(peak_x) - a * peak_x;
    const double log_threshold = log_peak - static_cast<double>(work_digits) * std::numbers::ln10 + std::log(0.1);
    double x = std::max(2.0 * p / a, 1.0);
    while (p * std::log(x + 1.0) - a * x + std::log(2.0 / a) > log_threshold) {
        x += 0.5;
    }
    return std::ceil(x - 0.25) + 0.25;
}

// Integrals of w(x) = x^k e^{-x ln2} Gamma(x+1)/Gamma(x+1/2) over [0, X] on
// panels bounded by the zeros x = 1/4 + m/2 of cos(2 pi x).
inline LaplaceMoments laplace_moments(long k, long work_digits, bool with_cosine)
{
    const PrecisionContext wctx{work_digits - 10, 10};
    const mpfr_prec_t bits = wctx.working_bits();
    const GaussLegendreRule rule(gauss_nodes_for_digits(work_digits), bits);
    const HPReal ln2 = ln2_at_bits(bits);
    const HPReal two_pi = pi_at_bits(bits) * 2L;
    const double cutoff = laplace_cutoff(k, work_digits);
    const long panels = static_cast<long>(std::lround((cutoff - 0.25) * 2.0)) + 1;

    HPReal weight_total(bits);
    std::vector<HPReal> pieces;
    pieces.reserve(static_cast<std::size_t>(panels));
    for (long p = 0; p < panels; ++p) {
        const HPReal lo = p == 0 ? HPReal(bits) : HPReal(Rational(2 * p - 1, 4), bits);
        const HPReal hi(Rational(2 * p + 1, 4), bits);
        HPReal weight_piece(bits);
        HPReal cosine_piece(bits);
        rule.for_each_node(lo, hi, [&](const HPReal& x, const HPReal& qw) {
            const HPReal wx = pow(x, k) * exp(-(ln2 * x)) * gamma_ratio(x, wctx) * qw;
            weight_piece += wx;
            if (with_cosine) {
                cosine_piece += cos(two_pi * x) * wx;
            }
        });
        weight_total += weight_piece;
        if (with_cosine) {
            pieces.push_back(std::move(cosine_piece));
        }
    }

    LaplaceMoments out{std::move(weight_total), HPReal(bits), 0.0};
    if (with_cosine) {
        // descending magnitude, ties broken by sign for a deterministic order
        std::stable_sort(pieces.begin(), pieces.end(), [](const HPReal& a, const HPReal& b) {
            return abs(a) > abs(b);
        });
        HPReal abs_sum(bits);
        for (const HPReal& piece : pieces) {
            out.cosine_integral += piece;
            abs_sum += abs(piece);
        }
        out.cancellation = out.cosine_integral.is_zero()
                               ? HUGE_VAL
                               : abs_sum.log10_abs() - out.cosine_integral.log10_abs();
    }
    return out;
}

} // namespace detail

/// R2(k) = (1/(2 sqrt(pi))) int_0^inf x^k e^{-x ln2} Gamma(x+1)/Gamma(x+1/2) dx.
/// Evaluated at digits+guard and again at twice the digits; the two must agree
/// to 10^{-(digits-5)} or QuadratureError is thrown.
inline HPReal r2_laplace_integral(long k, const PrecisionContext& ctx)
{
    if (k < 1) {
        throw std::domain_error("r2_laplace_integral: k must be >= 1");
    }
    const mpfr_prec_t bits = ctx.working_bits();
    auto level = [&](long digits) {
        const detail::LaplaceMoments m = detail::laplace_moments(k, digits + ctx.guard, false);
        return m.weight_integral / (sqrt(pi_at_bits(m.weight_integral.bits())) * 2L);
    };
    const HPReal coarse = level(ctx.digits);
    const HPReal fine = level(2 * ctx.digits);
    if (!relatively_close(coarse, fine, -static_cast<double>(ctx.digits - 5))) {
        throw QuadratureError("r2_laplace_integral: node doubling disagrees for k = " + std::to_string(k));
    }
    return fine.with_bits(bits);
}

struct OscillatoryOptions {
    long significant = 12; // requested agreement between successive levels
    int max_levels = 4;
};

/// E(k) = -8 pi int cos(2 pi x) w(x) dx / int w(x) dx with
/// w(x) = x^k e^{-x ln2} Gamma(x+1)/Gamma(x+1/2).
///
/// The numerator cancels to roughly |E(k)|/16 of its piece sizes. Working
/// precision starts at digits+guard raised by the expected cancellation
/// (estimated from 8 pi / Q^{k+3/2}), then doubles until two successive levels
/// agree to `significant` digits. LossOfSignificance is thrown when the
/// measured cancellation swallows the working precision at the last level.
inline HPReal e_integral(long k, const PrecisionContext& ctx, OscillatoryOptions opts = {})
{
    if (k < 1 || k > 30) {
        throw std::domain_error("e_integral: k must lie in [1, 30]");
    }
    const double log_q = 0.5 * std::log10(1.0 + std::pow(2.0 * std::numbers::pi / std::numbers::ln2, 2));
    const double expected_cancellation =
        std::log10(16.0) - std::log10(8.0 * std::numbers::pi) + (static_cast<double>(k) + 1.5) * log_q;
    long work = std::max(ctx.working_digits(),
                         opts.significant + static_cast<long>(std::ceil(expected_cancellation)) + ctx.guard);

    auto level = [&](long digits, double& cancellation) {
        const detail::LaplaceMoments m = detail::laplace_moments(k, digits, true);
        cancellation = m.cancellation;
        const HPReal pi = pi_at_bits(m.weight_integral.bits());
        return -(pi * 8L) * m.cosine_integral / m.weight_integral;
    };

    double cancellation = 0;
    HPReal previous = level(work, cancellation);
    for (int lvl = 1; lvl < opts.max_levels; ++lvl) {
        work *= 2;
        double next_cancellation = 0;
        HPReal current = level(work, next_cancellation);
        const bool survived = static_cast<double>(work) - next_cancellation > static_cast<double>(opts.significant);
        if (survived && relatively_close(previous, current, -static_cast<double>(opts.significant))) {
            return current.with_bits(ctx.working_bits());
        }
        previous = std::move(current);
        cancellation = next_cancellation;
    }
    throw LossOfSignificance("e_integral: k = " + std::to_string(k) + " lost " +
                             std::to_string(static_cast<long>(cancellation)) + " digits to cancellation at " +
                             std::to_string(work) + " working digits without agreement");
}

struct ErrorComparisonRow {
    long k = 0;
    HPReal asymptotic;
    HPReal exact;
};

/// Pairs e_asymptotic(k, terms) with the exact pi - R1/R2 for each k.
inline std::vector<ErrorComparisonRow> comparison_table(const std::vector<long>& ks, const PrecisionContext& ctx,
                                                        long terms = 7)
{
    std::vector<ErrorComparisonRow> rows;
    rows.reserve(ks.size());
    for (long k : ks) {
        if (k < 1) {
            throw std::domain_error("comparison_table: k must be >= 1");
        }
        rows.push_back(ErrorComparisonRow{k, e_asymptotic(k, terms, ctx), exact_error(k, ctx)});
    }
    return rows;
}

} // namespace lehmer

#endif
