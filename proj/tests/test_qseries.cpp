#include "alhc/qseries.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace alhc;

namespace {

TruncatedSeries series(std::vector<long long> c, int order) {
    return TruncatedSeries::from_coeffs({c.begin(), c.end()}, order);
}

// Brute-force oracle: partitions of n with parts drawn from `parts`,
// counted by descending-part recursion. Kept independent of TruncatedSeries.
long long count_partitions_with_parts(int n, const std::vector<int>& parts, int max_index) {
    if (n == 0) return 1;
    long long total = 0;
    for (int i = 0; i < max_index; ++i)
        if (parts[i] <= n) total += count_partitions_with_parts(n - parts[i], parts, i + 1);
    return total;
}

long long count_distinct_partitions(int n, int max_part) {
    if (n == 0) return 1;
    long long total = 0;
    for (int p = std::min(n, max_part); p >= 1; --p)
        total += count_distinct_partitions(n - p, p - 1);
    return total;
}

}  // namespace

TEST(FromCoeffs, Examples) {
    TruncatedSeries constant = series({1}, 3);
    EXPECT_EQ(constant.order(), 3);
    EXPECT_EQ(constant.coeff(0), 1);
    EXPECT_EQ(constant.coeff(3), 0);

    EXPECT_EQ(series({0, 1}, 2), TruncatedSeries::monomial(1, 2));
    EXPECT_EQ(series({1, -1}, 4), TruncatedSeries::one(4).mul_binomial(+1, 1));

    EXPECT_THROW(TruncatedSeries::from_coeffs({1, 2, 3}, 1), std::invalid_argument);
}

TEST(Mul, Examples) {
    // (1-q)(1+q+q^2+q^3) telescopes to 1 - q^4, which truncates to 1 at order 3
    EXPECT_EQ(series({1, -1}, 3) * series({1, 1, 1, 1}, 3), TruncatedSeries::one(3));
    EXPECT_EQ(series({1, 1}, 2) * series({1, 1}, 2), series({1, 2, 1}, 2));
    EXPECT_EQ(series({1, 1, 2}, 2) * TruncatedSeries::one(2), series({1, 1, 2}, 2));
    // mixed orders truncate to the minimum
    EXPECT_EQ((series({1, 1}, 5) * TruncatedSeries::one(2)).order(), 2);
}

TEST(Inverse, GeometricSeries) {
    EXPECT_EQ(series({1, -1}, 5).inverse(), series({1, 1, 1, 1, 1, 1}, 5));
    EXPECT_EQ(TruncatedSeries::one(4).inverse(), TruncatedSeries::one(4));
}

TEST(Inverse, PartsAtMostTwoOracle) {
    // 1/((1-q)(1-q^2)) counts partitions into parts 1 and 2
    TruncatedSeries inv = (poch(+1, 1, 2, 4)).inverse();
    for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(inv.coeff(n), count_partitions_with_parts(n, {2, 1}, 2)) << "n=" << n;
    EXPECT_EQ(inv, series({1, 1, 2, 2, 3}, 4));
}

TEST(Inverse, RejectsNonUnitConstant) {
    EXPECT_THROW(series({2, 1}, 3).inverse(), std::domain_error);
    EXPECT_THROW(series({0, 1}, 3).inverse(), std::domain_error);
    EXPECT_EQ(series({-1, 1}, 3).inverse(), series({-1, -1, -1, -1}, 3));
}

TEST(Poch, FiniteExpansion) {
    EXPECT_EQ(poch(+1, 1, 2, 4), series({1, -1, -1, 1, 0}, 4));
    EXPECT_EQ(poch(-1, 1, 2, 4), series({1, 1, 1, 1, 0}, 4));  // (1+q)(1+q^2)
    EXPECT_EQ(poch(+1, 1, 0, 3), TruncatedSeries::one(3));
}

TEST(Poch, DistinctPartsOracle) {
    // (-q;q)_inf generates partitions into distinct parts
    TruncatedSeries s = poch(-1, 1, kInfinite, 5);
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(s.coeff(n), count_distinct_partitions(n, n)) << "n=" << n;
    EXPECT_EQ(s, series({1, 1, 1, 2, 2, 3}, 5));
}

TEST(Poch, RogersRamanujanProductCoefficient) {
    // parts congruent to +-1 mod 5; the coefficient of q^4 counts {4, 1+1+1+1}
    TruncatedSeries rr =
        (poch(+1, 1, kInfinite, 4, 5) * poch(+1, 4, kInfinite, 4, 5)).inverse();
    EXPECT_EQ(rr.coeff(4), count_partitions_with_parts(4, {1, 4}, 2));
    EXPECT_EQ(rr.coeff(4), 2);
}

TEST(GaussBinom, SmallValues) {
    EXPECT_EQ(gauss_binom(4, 2), series({1, 1, 2, 1, 1}, 4));
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(gauss_binom(n, 0), TruncatedSeries::one(0));
        EXPECT_EQ(gauss_binom(n, n), TruncatedSeries::one(0));
    }
    EXPECT_TRUE(gauss_binom(3, 5).is_zero());
}

TEST(GaussBinom, MatchesMirroredPascalRecurrence) {
    // independent oracle: the other q-Pascal identity
    // [m, r] = q^{m-r} [m-1, r-1] + [m-1, r]
    for (int m = 0; m <= 8; ++m) {
        for (int r = 1; r <= m; ++r) {
            TruncatedSeries expect = gauss_binom(m - 1, r - 1);
            int deg = r * (m - r);
            TruncatedSeries lhs = expect.truncated(deg).shifted(m - r);
            lhs += gauss_binom(m - 1, r).truncated(deg);
            EXPECT_TRUE(prefix_equal(lhs, gauss_binom(m, r))) << "m=" << m << " r=" << r;
        }
    }
}

TEST(GaussBinom, ProductIdentity) {
    // [m, r] (q;q)_r (q;q)_{m-r} == (q;q)_m as polynomials
    for (int m = 0; m <= 12; ++m) {
        int order = m * (m + 1) / 2;
        TruncatedSeries full = poch(+1, 1, m, order);
        for (int r = 0; r <= m; ++r) {
            TruncatedSeries lhs = gauss_binom(m, r).truncated(order) * poch(+1, 1, r, order) *
                                  poch(+1, 1, m - r, order);
            EXPECT_EQ(lhs, full) << "m=" << m << " r=" << r;
        }
    }
}

TEST(ThetaSum, OrderZeroIsOne) {
    EXPECT_EQ(theta_sum(4, 2, 0), TruncatedSeries::one(0));
}

TEST(ThetaSum, MatchesTripleProductModulusFour) {
    // k=2: sum (-1)^n q^{2n^2+n} == (q;q^4)(q^3;q^4)(q^4;q^4)
    TruncatedSeries lhs = theta_sum(4, 2, 7);
    TruncatedSeries rhs =
        poch(+1, 1, kInfinite, 7, 4) * poch(+1, 3, kInfinite, 7, 4) * poch(+1, 4, kInfinite, 7, 4);
    EXPECT_EQ(lhs, rhs);
}

TEST(ThetaSum, MatchesTripleProductModulusThree) {
    // k=2 half-integer case: A = 3/2, B = 1/2
    TruncatedSeries lhs = theta_sum(3, 1, 6);
    TruncatedSeries rhs =
        poch(+1, 1, kInfinite, 6, 3) * poch(+1, 2, kInfinite, 6, 3) * poch(+1, 3, kInfinite, 6, 3);
    EXPECT_EQ(lhs, rhs);
}

TEST(ThetaSum, RejectsNonIntegerExponent) {
    EXPECT_THROW(theta_sum(1, 0, 5), std::domain_error);   // q^{n^2/2}
    EXPECT_THROW(theta_sum(2, 3, 5), std::domain_error);   // negative exponent at n=-1
}

TEST(ThetaSum, JacobiTripleProductGrid) {
    for (int k = 2; k <= 6; ++k) {
        EXPECT_TRUE(prefix_equal(theta_sum(2 * k, 2 * k - 2, 200),
                                 poch(+1, 1, kInfinite, 200, 2 * k) *
                                     poch(+1, 2 * k - 1, kInfinite, 200, 2 * k) *
                                     poch(+1, 2 * k, kInfinite, 200, 2 * k)))
            << "even k=" << k;
        int m = 2 * k - 1;
        EXPECT_TRUE(prefix_equal(theta_sum(m, 2 * k - 3, 200),
                                 poch(+1, 1, kInfinite, 200, m) *
                                     poch(+1, m - 1, kInfinite, 200, m) *
                                     poch(+1, m, kInfinite, 200, m)))
            << "odd k=" << k;
    }
}

TEST(Properties, MulInverseRoundTrip) {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::bernoulli_distribution sign;
    for (int rep = 0; rep < 60; ++rep) {
        std::vector<Int> c(31);
        c[0] = sign(rng) ? 1 : -1;
        for (size_t i = 1; i < c.size(); ++i) c[i] = coeff(rng);
        TruncatedSeries a = TruncatedSeries::from_coeffs(c, 30);
        EXPECT_EQ(a * a.inverse(), TruncatedSeries::one(30));
    }
}

TEST(Properties, PartitionPositivity) {
    TruncatedSeries partitions = poch(+1, 1, kInfinite, 200).inverse();
    TruncatedSeries overpartitions = poch(-1, 1, kInfinite, 200) * partitions;
    for (int n = 0; n <= 200; ++n) {
        EXPECT_GT(partitions.coeff(n), 0) << "n=" << n;
        EXPECT_GT(overpartitions.coeff(n), 0) << "n=" << n;
    }
}
