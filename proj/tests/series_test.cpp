#include <random>

#include <gtest/gtest.h>

#include "seaweed/series.hpp"

using namespace seaweed;

namespace {

IntSeries ints(std::size_t order, std::vector<long long> c) {
    std::vector<Integer> v(c.begin(), c.end());
    return IntSeries(order, std::move(v));
}

IntSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Integer> c(order + 1);
    for (auto& x : c)
        x = d(rng);
    if (unit_constant)
        c[0] = (rng() % 2) ? 1 : -1;
    return IntSeries(order, std::move(c));
}

}  // namespace

// Mixing coefficient rings is a compile-time error.
template <typename A, typename B>
concept Multipliable = requires(A a, B b) { series_mul(a, b); };
static_assert(!Multipliable<IntSeries, GaussSeries>);
static_assert(Multipliable<GaussSeries, GaussSeries>);

TEST(SeriesMul, Examples) {
    EXPECT_EQ(series_mul(ints(5, {1, 1}), ints(5, {1, -1})), ints(5, {1, 0, -1}));
    EXPECT_EQ(series_mul(ints(10, std::vector<long long>(11, 1)), ints(10, {1, -1})), IntSeries::one(10));
    GaussSeries a(4, {GaussInt(1), GaussInt(0, 1)});
    GaussSeries b(4, {GaussInt(1), GaussInt(0, -1)});
    EXPECT_EQ(series_mul(a, b), GaussSeries(4, {GaussInt(1), GaussInt(0), GaussInt(1)}));
}

TEST(SeriesMul, TruncatesToSmallerOrder) {
    IntSeries p = series_mul(ints(3, {1, 1}), ints(7, {1, 1}));
    EXPECT_EQ(p.order(), 3u);
    EXPECT_EQ(p, ints(3, {1, 2, 1}));
}

TEST(SeriesInverse, Examples) {
    EXPECT_EQ(series_inverse(ints(6, {1, -1})), ints(6, {1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(series_inverse(ints(7, {1, 0, 0, 1})), ints(7, {1, 0, 0, -1, 0, 0, 1}));
    EXPECT_EQ(series_inverse(IntSeries::one(5)), IntSeries::one(5));
    EXPECT_EQ(series_inverse(ints(3, {-1, 2})), ints(3, {-1, -2, -4, -8}));
}

TEST(SeriesInverse, GaussianUnits) {
    GaussSeries a(5, {GaussInt(0, 1), GaussInt(3, -2), GaussInt(1)});
    GaussSeries inv = series_inverse(a);
    EXPECT_EQ(series_mul(a, inv), GaussSeries::one(5));
}

TEST(SeriesInverse, RejectsNonUnitAndReportsConstant) {
    try {
        series_inverse(ints(3, {2, 1}));
        FAIL();
    } catch (const non_unit_error& e) {
        EXPECT_EQ(e.constant(), "2");
    }
    EXPECT_THROW(series_inverse(GaussSeries(2, {GaussInt(1, 1)})), non_unit_error);
    EXPECT_THROW(series_inverse(ints(2, {0, 1})), non_unit_error);
}

TEST(Coefficient, TruncationContract) {
    IntSeries s = ints(4, {1, 2, 3});
    EXPECT_EQ(s.coefficient(1), 2);
    EXPECT_EQ(s.coefficient(4), 0);
    EXPECT_THROW(s.coefficient(5), truncation_error);
}

TEST(Binomials, MultiplyAndDivideAreInverse) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        IntSeries s = random_series(rng, 20, false);
        IntSeries orig = s;
        Integer c = static_cast<long long>(rng() % 7) - 3;
        std::size_t e = 1 + rng() % 6;
        s.multiply_binomial(c, e);
        s.divide_binomial(c, e);
        EXPECT_EQ(s, orig);
    }
}

TEST(Binomials, MatchCauchyProduct) {
    IntSeries s = ints(10, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    IntSeries viaMul = series_mul(s, ints(10, {1, 0, 0, -2}));
    s.multiply_binomial(-2, 3);
    EXPECT_EQ(s, viaMul);
}

TEST(RingLaws, RandomSeries) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        std::size_t order = rng() % 15;
        IntSeries a = random_series(rng, order, false);
        IntSeries b = random_series(rng, order, false);
        IntSeries c = random_series(rng, order, false);
        EXPECT_EQ(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)));
        EXPECT_EQ(series_mul(a, b), series_mul(b, a));
        EXPECT_EQ(series_mul(a, b + c), series_mul(a, b) + series_mul(a, c));
        IntSeries u = random_series(rng, order, true);
        EXPECT_EQ(series_mul(u, series_inverse(u)), IntSeries::one(order));
        EXPECT_EQ(series_inverse(series_inverse(u)), u);
    }
}

TEST(GaussInt, RingAxioms) {
    GaussInt i = GaussInt::i_unit();
    EXPECT_EQ(i * i, GaussInt(-1));
    GaussInt a(3, -4), b(-2, 5), c(7, 1);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, GaussInt(14, 23));
    EXPECT_EQ(to_decimal(GaussInt(2, -3)), "2-3i");
}

TEST(Bivariate, DegreeBoundAndBinomials) {
    BivariateSeries s = BivariateSeries::one(4);
    s.divide_binomial(-1, 1, 1);  // 1/(1 - tq)
    for (std::size_t n = 0; n <= 4; ++n)
        EXPECT_EQ(s.coefficient(n, n), 1);
    EXPECT_EQ(s.coefficient(0, 3), 0);
    EXPECT_THROW(s.multiply_binomial(1, 3, 2), std::invalid_argument);
    EXPECT_THROW(s.at(5, 4), truncation_error);
    BivariateSeries back = s;
    back.multiply_binomial(-1, 1, 1);
    EXPECT_EQ(back, BivariateSeries::one(4));
}

TEST(Bivariate, MulMatchesBinomial) {
    BivariateSeries a = BivariateSeries::one(6);
    a.divide_binomial(-1, 1, 2);
    a.divide_binomial(-1, 0, 1);
    BivariateSeries f = BivariateSeries::one(6);
    f.multiply_binomial(3, 1, 3);
    BivariateSeries via_mul = series_mul(a, f);
    a.multiply_binomial(3, 1, 3);
    EXPECT_EQ(via_mul, a);
}
