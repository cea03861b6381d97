#ifndef LEHMER_LEHMER_LIMIT_HPP
#define LEHMER_LEHMER_LIMIT_HPP

// The pi convergents R1(k)/R2(k) drawn from S_k(2) = R1(k) + R2(k) pi.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "closed_forms.hpp"
#include "exact.hpp"
#include "hp_real.hpp"

namespace lehmer {

struct ConvergentRow {
    long k = 0;
    Rational r1;
    Rational r2;
    std::string ratio_digits;
    long matched = 0;
};

inline std::pair<Rational, Rational> extract(long k)
{
    const PiLinear s = s_k_2(k);
    return {s.a, s.b};
}

/// D_k(2) = -R1(k) + R2(k) pi, the value on the second sheet.
inline PiLinear difference_value(long k)
{
    const PiLinear s = s_k_2(k);
    return PiLinear{-s.a, s.b};
}

/// Decimal expansion of q with exactly `decimals` places, round-half-even.
inline std::string rational_to_fixed(const Rational& q, long decimals)
{
    if (decimals < 0) {
        throw std::invalid_argument("rational_to_fixed: negative digit count");
    }
    const bool negative = q < 0;
    const Rational mag = abs(q);
    const BigInt scale = pow(BigInt(10), static_cast<unsigned long>(decimals));
    BigInt scaled_num = mag.get_num() * scale;
    BigInt quot;
    BigInt rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), mag.get_den_mpz_t());
    const int cmp_half = mpz_cmp(BigInt(2 * rem).get_mpz_t(), mag.get_den_mpz_t());
    if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quot.get_mpz_t()))) {
        quot += 1;
    }
    std::string digits = quot.get_str(10);
    if (static_cast<long>(digits.size()) <= decimals) {
        digits.insert(0, static_cast<std::size_t>(decimals + 1) - digits.size(), '0');
    }
    std::string out = (negative && quot != 0) ? "-" : "";
    out.append(digits, 0, digits.size() - static_cast<std::size_t>(decimals));
    if (decimals > 0) {
        out += '.';
        out.append(digits, digits.size() - static_cast<std::size_t>(decimals), std::string::npos);
    }
    return out;
}

/// R1(k)/R2(k) to `digits` decimal places, round-half-even.
inline std::string ratio_decimal(long k, long digits)
{
    if (k < 1 || digits < 1) {
        throw std::domain_error("ratio_decimal: requires k >= 1 and digits >= 1");
    }
    const auto [r1, r2] = extract(k);
    return rational_to_fixed(r1 / r2, digits);
}

/// pi - R1(k)/R2(k) at the context precision.
///
/// The subtraction cancels about k digits, so the working precision is raised
/// until two evaluations 20 digits apart agree to `digits` significant digits.
inline HPReal exact_error(long k, const PrecisionContext& ctx)
{
    if (k < 1) {
        throw std::domain_error("exact_error: k must be >= 1");
    }
    const auto [r1, r2] = extract(k);
    const Rational ratio = r1 / r2;
    auto evaluate = [&](long work_digits) {
        const mpfr_prec_t bits = digits_to_bits(work_digits);
        return pi_at_bits(bits) - HPReal(ratio, bits);
    };

    long work = ctx.working_digits();
    HPReal probe = evaluate(work);
    while (probe.is_zero()) {
        work *= 2;
        probe = evaluate(work);
    }
    // digits lost to cancellation ~ -log10|error|
    work = ctx.working_digits() + std::max(0L, static_cast<long>(std::ceil(-probe.log10_abs()))) + 10;
    for (int attempt = 0; attempt < 8; ++attempt) {
        HPReal lo = evaluate(work);
        HPReal hi = evaluate(work + 20);
        if (!lo.is_zero() && relatively_close(lo, hi, -static_cast<double>(ctx.digits) - 1.0)) {
            return hi.with_bits(ctx.working_bits());
        }
        work *= 2;
    }
    throw std::runtime_error("exact_error: precision escalation did not stabilise");
}

namespace detail {

// First `decimals` decimal places of |x| truncated, with the integer part.
inline std::string truncated_digits(const Rational& q, long decimals)
{
    const BigInt scaled = (abs(q).get_num() * pow(BigInt(10), static_cast<unsigned long>(decimals))) / abs(q).get_den();
    return scaled.get_str(10);
}

inline std::string truncated_digits(const HPReal& x, long decimals)
{
    HPReal scaled = abs(x) * HPReal(pow(BigInt(10), static_cast<unsigned long>(decimals)), x.bits());
    BigInt n;
    mpfr_get_z(n.get_mpz_t(), scaled.get(), MPFR_RNDZ);
    return n.get_str(10);
}

inline long common_prefix(const std::string& a, const std::string& b)
{
    const auto mismatch = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<long>(mismatch.first - a.begin());
}

} // namespace detail

/// Count of leading decimal digits, starting with the "3", on which the true
/// expansions of R1(k)/R2(k) and pi agree (22/7 -> 3, since 3.142 vs 3.141).
inline long matched_digit_count(long k, const PrecisionContext& ctx)
{
    if (k < 1) {
        throw std::domain_error("matched_digit_count: k must be >= 1");
    }
    const auto [r1, r2] = extract(k);
    const Rational ratio = r1 / r2;
    long len = std::max(ctx.digits, k + 20);
    for (;;) {
        const std::string ours = detail::truncated_digits(ratio, len);
        const std::string pis = detail::truncated_digits(pi_at_bits(digits_to_bits(len + 10)), len);
        const long common = detail::common_prefix(ours, pis);
        if (common < static_cast<long>(pis.size())) {
            return common;
        }
        len *= 2;
    }
}

inline ConvergentRow convergent_row(long k, long digits, const PrecisionContext& ctx)
{
    const auto [r1, r2] = extract(k);
    return ConvergentRow{k, r1, r2, ratio_decimal(k, digits), matched_digit_count(k, ctx)};
}

} // namespace lehmer

#endif
