#ifndef LEHMER_TESTS_ORACLES_HPP
#define LEHMER_TESTS_ORACLES_HPP

// Reference computations that share no code path with the library routines
// they are used to check.

#include <functional>
#include <vector>

#include <lehmer/exact.hpp>
#include <lehmer/hp_real.hpp>

namespace lehmer::oracle {

/// Number of partitions of {1..p} into exactly n non-empty blocks, by
/// enumerating restricted growth strings.
inline long count_set_partitions(int p, int n)
{
    long count = 0;
    std::vector<int> a(static_cast<std::size_t>(p), 0);
    std::function<void(int, int)> rec = [&](int i, int max_block) {
        if (i == p) {
            count += (max_block + 1 == n) ? 1 : 0;
            return;
        }
        for (int b = 0; b <= max_block + 1 && b < n; ++b) {
            a[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(max_block, b));
        }
    };
    if (p == 0) {
        return n == 0 ? 1 : 0;
    }
    a[0] = 0;
    rec(1, 0);
    return count;
}

/// S2 table from the recurrence S2(p+1, n) = n S2(p, n) + S2(p, n-1).
inline std::vector<std::vector<BigInt>> stirling2_by_recurrence(long p_max)
{
    std::vector<std::vector<BigInt>> s(static_cast<std::size_t>(p_max + 1),
                                       std::vector<BigInt>(static_cast<std::size_t>(p_max + 2), 0));
    s[0][0] = 1;
    for (long p = 0; p < p_max; ++p) {
        for (long n = 1; n <= p + 1; ++n) {
            s[p + 1][n] = BigInt(n) * s[p][n] + s[p][n - 1];
        }
    }
    return s;
}

/// sum_{m=1}^{terms} m^p x^m exactly.
inline Rational power_sum_partial(long p, const Rational& x, long terms)
{
    Rational sum = 0;
    Rational xpow = 1;
    for (long m = 1; m <= terms; ++m) {
        xpow *= x;
        sum += Rational(pow(BigInt(m), static_cast<unsigned long>(p))) * xpow;
    }
    return sum;
}

/// ln 2 = 2 atanh(1/3) = 2 sum_{j} 3^{-(2j+1)} / (2j+1).
inline HPReal ln2_series(mpfr_prec_t bits)
{
    HPReal sum(bits);
    HPReal third_pow(Rational(1, 3), bits);
    const HPReal ninth(Rational(1, 9), bits);
    for (long j = 0; j < 4 * static_cast<long>(bits); ++j) {
        sum += third_pow / (2 * j + 1);
        third_pow *= ninth;
        if (third_pow.log10_abs() < -0.30103 * static_cast<double>(bits) - 5) {
            break;
        }
    }
    return sum * 2L;
}

/// 2F1(-1/2, n; n+1/2; -z) for z > 0 via the Pfaff transform
/// (1+z)^{1/2} 2F1(-1/2, 1/2; n+1/2; z/(1+z)), summed term by term.
inline HPReal f21_by_series(long n, const Rational& z, mpfr_prec_t bits)
{
    const HPReal x(z / (1 + z), bits);
    HPReal term(1L, bits);
    HPReal sum(1L, bits);
    const Rational c = Rational(n) + Rational(1, 2);
    for (long m = 0; m < 100000; ++m) {
        const Rational factor = (Rational(-1, 2) + m) * (Rational(1, 2) + m) / ((c + m) * (m + 1));
        term = term * x * factor;
        sum += term;
        if (term.is_zero() || term.log10_abs() < -0.30103 * static_cast<double>(bits) - 5) {
            break;
        }
    }
    return sqrt(HPReal(1 + z, bits)) * sum;
}

} // namespace lehmer::oracle

#endif
