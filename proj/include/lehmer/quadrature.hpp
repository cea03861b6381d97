#ifndef LEHMER_QUADRATURE_HPP
#define LEHMER_QUADRATURE_HPP

// High-precision quadrature: Gauss-Legendre panels (certified by doubling the
// panel count) for finite intervals, and the exp-sinh double-exponential rule
// (certified by halving the step) for [0, inf).
//
// Certification is empirical: two successive refinements must agree to the
// requested tolerance, otherwise QuadratureError is thrown.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hp_real.hpp"

namespace lehmer {

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadrature result with the difference between the last two refinements.
struct QuadratureResult {
    HPReal value;
    HPReal estimated_error;
    int refinements = 0;
};

/// n-point Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
public:
    GaussLegendreRule(int n, mpfr_prec_t bits) : n_(n), bits_(bits)
    {
        if (n < 1) {
            throw std::invalid_argument("GaussLegendreRule: need at least one node");
        }
        nodes_.reserve(static_cast<std::size_t>(n));
        weights_.reserve(static_cast<std::size_t>(n));
        // Newton on P_n starting from the asymptotic root estimate; the extra
        // bits keep the final weights accurate to the requested precision.
        const mpfr_prec_t wbits = bits + 32;
        for (int i = 0; i < n; ++i) {
            const double guess = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            HPReal x(wbits);
            mpfr_set_d(x.get(), guess, MPFR_RNDN);
            HPReal dp(wbits);
            for (int iter = 0; iter < 200; ++iter) {
                HPReal p(wbits);
                legendre(x, p, dp);
                const HPReal step = p / dp;
                x -= step;
                if (step.is_zero() || step.log10_abs() < -0.30103 * static_cast<double>(wbits) + 2) {
                    legendre(x, p, dp);
                    break;
                }
            }
            HPReal w = (HPReal(1L, wbits) - x * x) * dp * dp;
            w = HPReal(2L, wbits) / w;
            nodes_.push_back(x.with_bits(bits));
            weights_.push_back(w.with_bits(bits));
        }
    }

    int size() const { return n_; }
    mpfr_prec_t bits() const { return bits_; }
    const HPReal& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const HPReal& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }

    /// Calls visit(x, w) for the rule mapped onto [a, b] (w includes the Jacobian).
    template <typename Visit>
    void for_each_node(const HPReal& a, const HPReal& b, Visit visit) const
    {
        const HPReal half = (b - a) / 2L;
        const HPReal mid = (b + a) / 2L;
        for (int i = 0; i < n_; ++i) {
            const HPReal x = mid + half * nodes_[static_cast<std::size_t>(i)];
            visit(x, half * weights_[static_cast<std::size_t>(i)]);
        }
    }

    template <typename F>
    HPReal integrate(F&& f, const HPReal& a, const HPReal& b) const
    {
        HPReal sum(bits_);
        for_each_node(a, b, [&](const HPReal& x, const HPReal& w) { sum += w * f(x); });
        return sum;
    }

private:
    // P_n(x) and P_n'(x) through the three-term recurrence.
    void legendre(const HPReal& x, HPReal& p, HPReal& dp) const
    {
        const mpfr_prec_t b = x.bits();
        HPReal p0(1L, b);
        HPReal p1 = x;
        for (int k = 2; k <= n_; ++k) {
            HPReal p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / static_cast<long>(k);
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        if (n_ == 1) {
            p0 = HPReal(1L, b);
        }
        p = p1;
        dp = (x * p1 - p0) * static_cast<long>(n_) / (x * x - 1L);
    }

    int n_;
    mpfr_prec_t bits_;
    std::vector<HPReal> nodes_;
    std::vector<HPReal> weights_;
};

/// Node count giving roughly `digits` correct digits on a panel whose nearest
/// singularity sits a panel-length away.
inline int gauss_nodes_for_digits(long digits)
{
    return static_cast<int>(std::ceil(0.45 * static_cast<double>(digits))) + 8;
}

/// Composite Gauss-Legendre on [a, b]; panel counts 1, 2, 4, ... until two
/// successive totals agree to relative 10^{log10_tol}.
template <typename F>
QuadratureResult integrate_interval(F&& f, const HPReal& a, const HPReal& b, const PrecisionContext& ctx,
                                    double log10_tol, int max_doublings = 10)
{
    const mpfr_prec_t bits = ctx.working_bits();
    const GaussLegendreRule rule(gauss_nodes_for_digits(ctx.working_digits()), bits);
    const HPReal aw = a.with_bits(bits);
    const HPReal width = b.with_bits(bits) - aw;

    auto composite = [&](long panels) {
        HPReal total(bits);
        for (long p = 0; p < panels; ++p) {
            const HPReal lo = aw + width * Rational(p, panels);
            const HPReal hi = aw + width * Rational(p + 1, panels);
            total += rule.integrate(f, lo, hi);
        }
        return total;
    };

    HPReal previous = composite(1);
    for (int level = 1; level <= max_doublings; ++level) {
        HPReal current = composite(1L << level);
        HPReal diff = abs(current - previous);
        const bool zero = current.is_zero() && diff.is_zero();
        if (zero || diff.log10_abs() - abs(current).log10_abs() <= log10_tol) {
            return QuadratureResult{std::move(current), std::move(diff), level};
        }
        previous = std::move(current);
    }
    throw QuadratureError("integrate_interval: no agreement after " + std::to_string(1L << max_doublings) +
                          " panels");
}

/// exp-sinh rule for integrals over [0, inf): x = exp((pi/2) sinh t).
/// Handles integrable endpoint singularities at 0 and algebraic decay at inf.
template <typename F>
QuadratureResult integrate_half_line(F&& f, const PrecisionContext& ctx, double log10_tol, int max_levels = 14)
{
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal half_pi = pi_at_bits(bits) / 2L;
    const double negligible = -static_cast<double>(ctx.working_digits()) - 5.0;
    constexpr double t_limit = 12.0;

    // f(x(t)) * x'(t)
    auto transformed = [&](const HPReal& t) {
        const HPReal s = half_pi * sinh(t);
        const HPReal x = exp(s);
        const HPReal dx = half_pi * cosh(t) * x;
        if (x.is_zero()) {
            return HPReal(bits);
        }
        return f(x) * dx;
    };

    // Sum over t = offset + j*step for j = 0, 1, ... outward in both directions.
    auto sweep = [&](const HPReal& offset, const HPReal& step, const HPReal& scale) {
        HPReal sum(bits);
        for (int direction : {1, -1}) {
            int quiet = 0;
            for (long j = direction > 0 ? 0 : 1;; ++j) {
                const HPReal t = offset + step * (j * direction);
                if (std::fabs(t.to_double()) > t_limit) {
                    break;
                }
                const HPReal term = transformed(t);
                sum += term;
                const HPReal ref = scale.is_zero() ? abs(sum) : scale;
                if (term.is_zero() || (!ref.is_zero() && term.log10_abs() - ref.log10_abs() < negligible)) {
                    if (++quiet >= 4) {
                        break;
                    }
                } else {
                    quiet = 0;
                }
            }
        }
        return sum;
    };

    HPReal step(1L, bits);
    const HPReal zero(bits);
    HPReal raw = sweep(zero, step, zero); // sum of f at integer t
    HPReal estimate = raw * step;
    for (int level = 1; level <= max_levels; ++level) {
        const HPReal offset = step / 2L;
        // odd multiples of the new half step: offset + j*step
        raw += sweep(offset, step, raw);
        step /= 2L;
        HPReal next = raw * step;
        HPReal diff = abs(next - estimate);
        if (level >= 3 && (diff.is_zero() || diff.log10_abs() - abs(next).log10_abs() <= log10_tol)) {
            return QuadratureResult{std::move(next), std::move(diff), level};
        }
        estimate = std::move(next);
    }
    throw QuadratureError("integrate_half_line: step halving did not converge");
}

} // namespace lehmer

#endif
