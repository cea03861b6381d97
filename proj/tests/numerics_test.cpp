#include <gtest/gtest.h>

#include <lehmer/exact.hpp>
#include <lehmer/hp_real.hpp>
#include <lehmer/power_series.hpp>
#include <lehmer/quadrature.hpp>

using namespace lehmer;
using Series = TruncatedSeries<Rational>;

namespace {

Series exp_series(std::size_t order)
{
    return Series::generate(order, [](std::size_t j) -> Rational { return Rational(1) / Rational(factorial(static_cast<long>(j))); });
}

} // namespace

TEST(TruncatedSeries, ExpOfLogIsIdentity)
{
    const Series p = Series::generate(12, [](std::size_t j) -> Rational { return Rational(1, static_cast<long>(j) + 1); });
    const Series back = p.log().exp();
    for (std::size_t j = 0; j < p.order(); ++j) {
        EXPECT_EQ(back[j], p[j]) << j;
    }
}

TEST(TruncatedSeries, InverseAndPowers)
{
    const Series e = exp_series(10);
    const Series prod = e * e.inverse();
    EXPECT_EQ(prod[0], 1);
    for (std::size_t j = 1; j < prod.order(); ++j) {
        EXPECT_EQ(prod[j], 0);
    }
    // (e^x)^{1/2} = e^{x/2}
    const Series half = e.pow(Rational(1, 2));
    for (std::size_t j = 0; j < half.order(); ++j) {
        EXPECT_EQ(half[j], pow(Rational(1, 2), static_cast<long>(j)) / Rational(factorial(static_cast<long>(j))));
    }
    // (1 + x)^{-3/2} = sum binom(-3/2, j) x^j
    Series one_plus(6);
    one_plus[0] = 1;
    one_plus[1] = 1;
    const Series p = one_plus.pow(Rational(-3, 2));
    for (std::size_t j = 0; j < p.order(); ++j) {
        EXPECT_EQ(p[j], binomial(Rational(-3, 2), static_cast<long>(j)));
    }
}

TEST(TruncatedSeries, RejectsInvalidConstantTerms)
{
    Series zero_const(4);
    zero_const[1] = 1;
    EXPECT_THROW(zero_const.inverse(), std::domain_error);
    EXPECT_THROW(zero_const.log(), std::domain_error);
    EXPECT_THROW(exp_series(4).exp(), std::domain_error);
}

TEST(GaussLegendre, IntegratesPolynomialsExactly)
{
    const mpfr_prec_t bits = digits_to_bits(60);
    const GaussLegendreRule rule(8, bits);
    // an 8-point rule is exact through degree 15
    const HPReal val = rule.integrate([](const HPReal& x) { return pow(x, 14) + x * 3L; }, HPReal(0L, bits),
                                      HPReal(1L, bits));
    EXPECT_TRUE(relatively_close(val, HPReal(Rational(1, 15) + Rational(3, 2), bits), -58));

    double weight_sum = 0;
    for (int i = 0; i < rule.size(); ++i) {
        weight_sum += rule.weight(i).to_double();
    }
    EXPECT_NEAR(weight_sum, 2.0, 1e-15);
}

TEST(CompositeQuadrature, SmoothIntegrandToHighPrecision)
{
    const PrecisionContext ctx{50, 10};
    const mpfr_prec_t bits = ctx.working_bits();
    // int_0^1 4/(1+x^2) dx = pi
    const QuadratureResult q = integrate_interval([](const HPReal& x) { return 4L / (x * x + 1L); }, HPReal(0L, bits),
                                                  HPReal(1L, bits), ctx, -50);
    EXPECT_TRUE(relatively_close(q.value, pi_const(ctx), -49));
    EXPECT_GE(q.refinements, 1);
}

TEST(HalfLineQuadrature, EndpointSingularityAndAlgebraicDecay)
{
    const PrecisionContext ctx{40, 10};
    const mpfr_prec_t bits = ctx.working_bits();
    // int_0^inf dx / (sqrt(x) (1 + x)) = pi
    const QuadratureResult a =
        integrate_half_line([](const HPReal& x) { return 1L / (sqrt(x) * (x + 1L)); }, ctx, -40);
    EXPECT_TRUE(relatively_close(a.value, pi_const(ctx), -38));
    // int_0^inf e^{-x} x^3 dx = 6
    const QuadratureResult b = integrate_half_line([](const HPReal& x) { return exp(-x) * pow(x, 3); }, ctx, -40);
    EXPECT_TRUE(relatively_close(b.value, HPReal(6L, bits), -38));
}

TEST(HalfLineQuadrature, ReportsNonConvergence)
{
    const PrecisionContext ctx{30, 10};
    // int_0^inf dx/(1+x) diverges
    EXPECT_THROW(integrate_half_line([](const HPReal& x) { return 1L / (x + 1L); }, ctx, -30, 6), QuadratureError);
}
