#ifndef LEHMER_GAMMA_RATIO_HPP
#define LEHMER_GAMMA_RATIO_HPP

#include <cmath>
#include <stdexcept>

#include "hp_real.hpp"

namespace lehmer {

namespace detail {

// Terms of Watson's series behave like 4^{-y} near m ~ y and decay only
// polynomially (m^{-2-y}) afterwards, so the argument is raised until 4^{-y}
// is far below the working epsilon.
inline long watson_shift_target(const PrecisionContext& ctx)
{
    return static_cast<long>(std::ceil(static_cast<double>(ctx.working_digits()) * 1.75)) + 8;
}

// y + sum_{m>=1} (-1/2)_m^2 / (m! (y+1)_{m-1}) = [Gamma(y+1)/Gamma(y+1/2)]^2.
inline HPReal watson_sum(const HPReal& y, const PrecisionContext& ctx)
{
    const mpfr_prec_t bits = y.bits();
    HPReal sum = y;
    HPReal term(Rational(1, 4), bits);
    HPReal factor(bits);
    const double threshold = -static_cast<double>(ctx.working_digits()) - 2.0;
    int quiet = 0;
    for (long m = 1;; ++m) {
        sum += term;
        if (term.log10_abs() - sum.log10_abs() < threshold) {
            if (++quiet >= 4) {
                break;
            }
        } else {
            quiet = 0;
        }
        // term_{m+1} / term_m = (m - 1/2)^2 / ((m + 1)(y + m))
        factor = y + m;
        factor *= 4 * (m + 1);
        term *= (2 * m - 1) * (2 * m - 1);
        term /= factor;
        if (m > 1000000) {
            throw std::runtime_error("watson_sum: series failed to converge");
        }
    }
    return sum;
}

// Gamma(x+1)^2 / Gamma(x+1/2)^2 and Gamma(x+N+1/2)/... bookkeeping shared by
// gamma_ratio and gamma_ratio_squared.
struct ShiftedWatson {
    HPReal series;   // Watson sum at y = x + N
    HPReal shift;    // prod_{i<N} (x+1/2+i)/(x+1+i)
};

inline ShiftedWatson shifted_watson(const HPReal& x, const PrecisionContext& ctx)
{
    if (x.sign() <= 0) {
        throw std::domain_error("gamma_ratio: requires x > 0");
    }
    const long target = watson_shift_target(ctx);
    const double xd = x.to_double();
    const long n_shift = xd >= static_cast<double>(target) ? 0 : static_cast<long>(std::ceil(target - xd));
    // A few extra bits absorb the rounding of the N-fold product.
    const mpfr_prec_t bits = ctx.working_bits() + 16;
    const HPReal xw = x.with_bits(bits);

    HPReal num(1L, bits);
    HPReal den(1L, bits);
    HPReal tmp(bits);
    for (long i = 0; i < n_shift; ++i) {
        tmp = xw + i;
        den *= (tmp + 1);
        num *= (tmp + Rational(1, 2));
    }
    return ShiftedWatson{watson_sum(xw + n_shift, ctx), num / den};
}

} // namespace detail

/// Gamma(x+1)/Gamma(x+1/2) for real x > 0, from the square root of Watson's
/// convergent hypergeometric series x * 2F1(-1/2, -1/2; x; 1). Small arguments
/// are first raised by the recurrence Gamma(z+1) = z Gamma(z).
inline HPReal gamma_ratio(const HPReal& x, const PrecisionContext& ctx)
{
    const detail::ShiftedWatson w = detail::shifted_watson(x, ctx);
    return (sqrt(w.series) * w.shift).with_bits(ctx.working_bits());
}

/// [Gamma(x+1)/Gamma(x+1/2)]^2 straight from the summed series (no square root).
inline HPReal gamma_ratio_squared(const HPReal& x, const PrecisionContext& ctx)
{
    const detail::ShiftedWatson w = detail::shifted_watson(x, ctx);
    return (w.series * w.shift * w.shift).with_bits(ctx.working_bits());
}

} // namespace lehmer

#endif
