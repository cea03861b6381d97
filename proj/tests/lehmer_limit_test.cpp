#include <gtest/gtest.h>

#include <lehmer/lehmer_limit.hpp>

#include "reference_tables.hpp"
#include "test_support.hpp"

using namespace lehmer;

TEST(Extract, MatchesPublishedPairs)
{
    for (std::size_t i = 0; i < reference::kSk2.size(); ++i) {
        const long k = static_cast<long>(i) + 1;
        const auto [r1, r2] = extract(k);
        EXPECT_EQ(r1, parse_rational(reference::kSk2[i].r1)) << k;
        EXPECT_EQ(r2, parse_rational(reference::kSk2[i].r2)) << k;
    }
}

TEST(Extract, EarlyConvergents)
{
    const auto [r1, r2] = extract(2);
    EXPECT_EQ(r1 / r2, Rational(22, 7));
    const auto [a4, b4] = extract(4);
    EXPECT_EQ(a4 / b4, Rational(355, 113));
}

TEST(RatioDecimal, MatchesPublishedRowsWithinOneUlp)
{
    for (std::size_t i = 0; i < reference::kRatio64.size(); ++i) {
        const long k = static_cast<long>(i) + 1;
        const std::string ours = ratio_decimal(k, 64);
        EXPECT_LE(support::ulp_distance(ours, reference::kRatio64[i]), 1) << "k=" << k << " " << ours;
    }
}

TEST(RatioDecimal, RoundingAndArguments)
{
    EXPECT_EQ(rational_to_fixed(Rational(1, 8), 2), "0.12");
    EXPECT_EQ(rational_to_fixed(Rational(3, 8), 2), "0.38");
    EXPECT_EQ(rational_to_fixed(Rational(-1, 3), 3), "-0.333");
    EXPECT_EQ(rational_to_fixed(Rational(7, 2), 0), "4");
    EXPECT_EQ(ratio_decimal(2, 6), "3.142857");
    EXPECT_THROW(ratio_decimal(0, 10), std::domain_error);
    EXPECT_THROW(rational_to_fixed(Rational(1), -1), std::invalid_argument);
}

TEST(ExactError, PublishedColumnToFifteenDigits)
{
    const PrecisionContext ctx{30, 10};
    for (const auto& row : reference::kErrorTable) {
        const HPReal ours = exact_error(row.k, ctx);
        const HPReal theirs(row.exact, ctx.working_bits());
        EXPECT_TRUE(relatively_close(ours, theirs, -15)) << row.k << " " << to_scientific(ours, 19);
    }
    EXPECT_EQ(to_scientific(exact_error(5, ctx), 20), "1.4589795724967617652e-05");
}

TEST(ExactError, SignPatternAndDecay)
{
    const PrecisionContext ctx{20, 10};
    EXPECT_GT(exact_error(1, ctx), HPReal(0L, 64));
    EXPECT_LT(exact_error(2, ctx), HPReal(0L, 64));
    HPReal prev = abs(exact_error(10, ctx));
    for (long k = 20; k <= 60; k += 10) {
        const HPReal cur = abs(exact_error(k, ctx));
        EXPECT_LT(cur, prev) << k;
        prev = cur;
    }
}

TEST(DifferenceValue, SecondSheetIsSmall)
{
    const PrecisionContext ctx{40, 10};
    for (long k : {5L, 10L, 20L}) {
        const PiLinear d = difference_value(k);
        const auto [r1, r2] = extract(k);
        EXPECT_EQ(d.a, -r1);
        EXPECT_EQ(d.b, r2);
        // D_k(2) = R2 * (pi - R1/R2)
        EXPECT_TRUE(relatively_close(d.numeric(ctx), exact_error(k, ctx) * r2, -25)) << k;
    }
}

TEST(MatchedDigits, CountsFromTheLeadingThree)
{
    const PrecisionContext ctx{30, 10};
    EXPECT_EQ(matched_digit_count(1, ctx), 1);
    EXPECT_EQ(matched_digit_count(2, ctx), 3);
    EXPECT_EQ(matched_digit_count(4, ctx), 7);
    EXPECT_GE(matched_digit_count(100, ctx), 96);
    EXPECT_THROW(matched_digit_count(0, ctx), std::domain_error);
}

TEST(ConvergentRow, AssemblesConsistentFields)
{
    const PrecisionContext ctx{30, 10};
    const ConvergentRow row = convergent_row(7, 20, ctx);
    EXPECT_EQ(row.k, 7);
    EXPECT_EQ(row.r1 / row.r2, parse_rational(reference::kSk2[6].r1) / parse_rational(reference::kSk2[6].r2));
    EXPECT_EQ(row.ratio_digits, ratio_decimal(7, 20));
    EXPECT_EQ(row.matched, matched_digit_count(7, ctx));
}
