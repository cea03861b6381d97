#include <random>

#include <gtest/gtest.h>

#include <lehmer/exact.hpp>
#include <lehmer/gamma_ratio.hpp>
#include <lehmer/hp_real.hpp>

#include "oracles.hpp"

using namespace lehmer;

TEST(RationalText, ParsesAndCanonicalizes)
{
    EXPECT_EQ(parse_rational("355"), Rational(355));
    EXPECT_EQ(parse_rational("7/2"), Rational(7, 2));
    EXPECT_EQ(parse_rational("-5/384"), Rational(-5, 384));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_EQ(to_string(make_rational(14, 7)), "2");
}

TEST(RationalText, RejectsMalformedInput)
{
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a/b", "1/-2", "--1", "1 /2"}) {
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
    }
}

TEST(RationalArithmetic, RandomRoundTripsAreExact)
{
    std::mt19937_64 rng(20240611);
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(12345);
    for (int i = 0; i < 200; ++i) {
        const BigInt a = gen.get_z_bits(200) - BigInt(1) * gen.get_z_bits(199);
        const BigInt b = gen.get_z_bits(180) + 1;
        const BigInt c = gen.get_z_bits(150) - gen.get_z_bits(150);
        const BigInt d = gen.get_z_bits(170) + 1;
        const Rational x = make_rational(a, b);
        const Rational y = make_rational(c, d);
        EXPECT_EQ((x + y) - y, x);
        if (y != 0) {
            EXPECT_EQ((x * y) / y, x);
        }
        EXPECT_GT(x.get_den(), 0);
        EXPECT_EQ(gcd(x.get_num(), x.get_den()), 1);
    }
}

TEST(Binomial, SmallValuesAndOutOfRange)
{
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(Rational(-1, 2), 2), Rational(3, 8));
}

TEST(DoubleFactorial, NegativeConventionsAndRejections)
{
    EXPECT_EQ(double_factorial(-3), -1);
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(double_factorial(1), 1);
    EXPECT_EQ(double_factorial(7), 105);
    EXPECT_THROW(double_factorial(4), std::domain_error);
    EXPECT_THROW(double_factorial(-5), std::domain_error);
}

TEST(Stirling2, MatchesSetPartitionEnumeration)
{
    EXPECT_EQ(stirling2(2, 1), 1);
    EXPECT_EQ(stirling2(3, 2), 3);
    EXPECT_EQ(stirling2(4, 2), 7);
    for (int p = 1; p <= 9; ++p) {
        for (int n = 1; n <= p; ++n) {
            EXPECT_EQ(stirling2(p, n), oracle::count_set_partitions(p, n)) << p << "," << n;
        }
    }
    EXPECT_EQ(stirling2(3, 5), 0);
    EXPECT_THROW(stirling2(0, 1), std::domain_error);
}

TEST(Stirling2, SatisfiesRecurrenceThroughThirty)
{
    const auto table = oracle::stirling2_by_recurrence(30);
    for (long p = 1; p <= 30; ++p) {
        EXPECT_EQ(stirling2(p, 1), 1);
        EXPECT_EQ(stirling2(p, p), 1);
        for (long n = 1; n <= p; ++n) {
            ASSERT_EQ(stirling2(p, n), table[p][n]) << p << "," << n;
        }
    }
}

TEST(EulerPowerSum, KnownValues)
{
    EXPECT_EQ(euler_power_sum(1, Rational(1, 2)), 2);
    EXPECT_EQ(euler_power_sum(2, Rational(1, 2)), 6);
    EXPECT_EQ(euler_power_sum(1, Rational(0)), 0);
    EXPECT_THROW(euler_power_sum(1, Rational(1)), std::domain_error);
    EXPECT_THROW(euler_power_sum(2, Rational(-3, 2)), std::domain_error);
}

TEST(EulerPowerSum, AgreesWithLongPartialSums)
{
    const long digits = 40;
    const PrecisionContext ctx{digits, 10};
    for (long p = 1; p <= 8; ++p) {
        for (const char* xs : {"1/2", "-1/2", "1/3", "-1/3", "2/5"}) {
            const Rational x = parse_rational(xs);
            const Rational partial = oracle::power_sum_partial(p, x, 10 * digits);
            const HPReal diff = abs(to_hp(euler_power_sum(p, x) - partial, ctx));
            EXPECT_TRUE(diff.is_zero() || diff.log10_abs() < -digits) << "p=" << p << " x=" << xs;
        }
    }
}

TEST(PiConstant, FixtureAndPrecisionConsistency)
{
    EXPECT_TRUE(verify_pi_fixture());
    EXPECT_EQ(to_decimal(pi_const(PrecisionContext{65, 10}), 65), kPiFixture65.substr(0, 66));
    EXPECT_EQ(to_decimal(pi_const(PrecisionContext{3, 0}), 3), "3.14");
    const HPReal lo = pi_const(PrecisionContext{120, 10});
    const HPReal hi = pi_const(PrecisionContext{200, 10});
    EXPECT_TRUE(relatively_close(lo, hi, -115));
    EXPECT_THROW(pi_const(PrecisionContext{1, 0}), std::domain_error);
}

TEST(Elementary, EndpointsIdentitiesAndDomains)
{
    const PrecisionContext ctx{100, 10};
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal one(1L, bits);
    EXPECT_TRUE(relatively_close(hp_elementary(Elementary::asin, one), pi_const(ctx) / 2L, -100));

    const HPReal ln2 = hp_elementary(Elementary::ln, HPReal(2L, bits));
    EXPECT_TRUE(relatively_close(ln2, oracle::ln2_series(bits + 64), -100));
    EXPECT_EQ(to_decimal(ln2, 15), "0.693147180559945");

    const HPReal r = one / sqrt(HPReal(2L, bits));
    const HPReal lhs = hp_elementary(Elementary::asinh, r);
    const HPReal rhs = log(r + sqrt(HPReal(Rational(3, 2), bits)));
    EXPECT_TRUE(relatively_close(lhs, rhs, -100));

    EXPECT_THROW(hp_elementary(Elementary::asin, HPReal(2L, bits)), std::domain_error);
    EXPECT_THROW(hp_elementary(Elementary::ln, HPReal(0L, bits)), std::domain_error);
    EXPECT_THROW(hp_elementary(Elementary::sqrt, HPReal(-1L, bits)), std::domain_error);
}

TEST(DecimalRendering, RoundHalfEvenAndScientific)
{
    const mpfr_prec_t bits = digits_to_bits(40);
    EXPECT_EQ(to_decimal(HPReal(Rational(1, 8), bits), 2), "0.12");
    EXPECT_EQ(to_decimal(HPReal(Rational(3, 8), bits), 2), "0.38");
    EXPECT_EQ(to_scientific(HPReal(Rational(-12345, 1000000000), bits), 3), "-1.23e-05");
    EXPECT_EQ(to_scientific(HPReal(Rational(25, 1), bits), 2), "2.5e+01");
}

TEST(GammaRatio, HalfIntegerValues)
{
    const PrecisionContext ctx{120, 10};
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal sqrt_pi = sqrt(pi_const(ctx));
    EXPECT_TRUE(relatively_close(gamma_ratio(HPReal(1L, bits), ctx), HPReal(2L, bits) / sqrt_pi, -118));
    EXPECT_TRUE(relatively_close(gamma_ratio(HPReal(Rational(1, 2), bits), ctx), sqrt_pi / 2L, -118));
    EXPECT_EQ(to_decimal(gamma_ratio(HPReal(1L, bits), ctx), 15), "1.12837916709551");
    // Gamma(4)/Gamma(7/2) = 6 / (15 sqrt(pi) / 8)
    EXPECT_TRUE(relatively_close(gamma_ratio(HPReal(3L, bits), ctx), HPReal(Rational(16, 5), bits) / sqrt_pi, -118));
}

TEST(GammaRatio, LargeArgumentMatchesAsymptoticSeries)
{
    const PrecisionContext ctx{40, 10};
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal x(1000L, bits);
    const HPReal inv = HPReal(1L, bits) / x;
    HPReal poly = HPReal(1L, bits) + inv * Rational(1, 8) + inv * inv * Rational(1, 128) -
                  inv * inv * inv * Rational(5, 1024);
    const HPReal approx = sqrt(x) * poly;
    EXPECT_TRUE(relatively_close(gamma_ratio(x, ctx), approx, -12));
}

TEST(GammaRatio, SquareMatchesSquaredSeries)
{
    const PrecisionContext ctx{60, 10};
    for (const Rational& x : {Rational(1, 7), Rational(3, 2), Rational(25), Rational(1001, 10)}) {
        const HPReal xr(x, ctx.working_bits());
        const HPReal g = gamma_ratio(xr, ctx);
        EXPECT_TRUE(relatively_close(g * g, gamma_ratio_squared(xr, ctx), -ctx.working_digits() + 2));
    }
}

TEST(GammaRatio, RejectsNonPositive)
{
    const PrecisionContext ctx{30, 10};
    EXPECT_THROW(gamma_ratio(HPReal(0L, ctx.working_bits()), ctx), std::domain_error);
    EXPECT_THROW(gamma_ratio(HPReal(-2L, ctx.working_bits()), ctx), std::domain_error);
}

TEST(ComplexPower, PrincipalBranch)
{
    const PrecisionContext ctx{50, 10};
    const mpfr_prec_t bits = ctx.working_bits();
    // (-1 + 0i)^(1/2) = i on the principal branch
    const HPComplex w(HPReal(-1L, bits), HPReal(0L, bits));
    const HPComplex r = pow(w, HPReal(Rational(1, 2), bits));
    EXPECT_TRUE(abs(r.re).is_zero() || abs(r.re).log10_abs() < -45);
    EXPECT_TRUE(relatively_close(r.im, HPReal(1L, bits), -45));
}
